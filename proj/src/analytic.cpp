#include "rgvss/analytic.hpp"

#include <string>

namespace rgvss::analytic {
namespace {

void check_fixed(int k, int n, int t) {
  TransmissionSpec{SchemeParams{k, n}, t, StackOp::kOr, Pixel::kWhite}.validate();
}

}  // namespace

Ratio fixed_or_transmission(int k, int n, int t, Pixel s) {
  check_fixed(k, n, t);
  if (t < k) return half_pow(t);
  const Ratio q(binom(t, k), binom(n, k));
  const Ratio rest = (Ratio(1) - q) * half_pow(t);
  if (s == Pixel::kBlack) return rest;
  return q * half_pow(t - 1) + rest;
}

Ratio fixed_xor_transmission(int k, int n, int t, Pixel s) {
  check_fixed(k, n, t);
  const Ratio half(1, 2);
  if (t != k) return half;
  const Ratio hit(1, binom(n, k));
  return s == Pixel::kWhite ? half * (Ratio(1) + hit) : half * (Ratio(1) - hit);
}

Ratio fixed_transmission(StackOp op, int k, int n, int t, Pixel s) {
  return op == StackOp::kOr ? fixed_or_transmission(k, n, t, s)
                            : fixed_xor_transmission(k, n, t, s);
}

Ratio avg_transmission(const TransmissionSpec& spec) {
  spec.validate();
  const auto [k, n] = spec.scheme;
  Ratio sum;
  for (int j = k; j <= n; ++j) sum += fixed_transmission(spec.op, j, n, spec.t, spec.s);
  return sum / Ratio(n - k + 1);
}

Ratio contrast(const Ratio& t0, const Ratio& t1) {
  if (t0 < t1) {
    throw DomainError("contrast: white-region transmission " + t0.str() +
                      " below black-region transmission " + t1.str());
  }
  return (t0 - t1) / (Ratio(1) + t1);
}

Ratio scheme_contrast(SchemeParams scheme, int t, StackOp op) {
  const Ratio t0 = avg_transmission({scheme, t, op, Pixel::kWhite});
  const Ratio t1 = avg_transmission({scheme, t, op, Pixel::kBlack});
  return contrast(t0, t1);
}

std::vector<ContrastRow> contrast_table(SchemeParams scheme) {
  scheme.validate();
  std::vector<ContrastRow> rows;
  for (int t = scheme.k; t <= scheme.n; ++t) {
    ContrastRow row;
    row.scheme = scheme;
    row.t = t;
    row.t0_or = avg_transmission({scheme, t, StackOp::kOr, Pixel::kWhite});
    row.t1_or = avg_transmission({scheme, t, StackOp::kOr, Pixel::kBlack});
    row.t0_xor = avg_transmission({scheme, t, StackOp::kXor, Pixel::kWhite});
    row.t1_xor = avg_transmission({scheme, t, StackOp::kXor, Pixel::kBlack});
    row.alpha_or = contrast(row.t0_or, row.t1_or);
    row.alpha_xor = contrast(row.t0_xor, row.t1_xor);
    rows.push_back(std::move(row));
  }
  return rows;
}

const std::vector<ClaimedContrast>& claimed_contrasts() {
  // Printed values, unreduced where the original was (3/126).
  static const std::vector<ClaimedContrast> data = {
      {{2, 3}, 2, Ratio(1, 10), Ratio(1, 6)},
      {{2, 3}, 3, Ratio(5, 17), Ratio(2, 5)},
      {{2, 4}, 2, Ratio(1, 15), Ratio(1, 9)},
      {{2, 4}, 3, Ratio(14, 107), Ratio(2, 57)},
      {{2, 4}, 4, Ratio(11, 49), Ratio(3, 8)},
      {{3, 5}, 3, Ratio(2, 269), Ratio(2, 89)},
      {{3, 5}, 4, Ratio(3, 126), Ratio(1, 27)},
      {{3, 5}, 5, Ratio(1, 16), Ratio(1, 4)},
      {{4, 5}, 4, Ratio(2, 169), Ratio(1, 29)},
      {{4, 5}, 5, Ratio(1, 16), Ratio(2, 5)},
  };
  return data;
}

std::vector<CorrigendumRow> corrigendum_report() {
  std::vector<CorrigendumRow> out;
  SchemeParams current{0, 0};
  std::vector<ContrastRow> table;
  for (const auto& claimed : claimed_contrasts()) {
    if (!(claimed.scheme == current)) {
      current = claimed.scheme;
      table = contrast_table(current);
    }
    const ContrastRow& row = table.at(static_cast<std::size_t>(claimed.t - current.k));
    CorrigendumRow r;
    r.scheme = claimed.scheme;
    r.t = claimed.t;
    r.claimed_or = claimed.alpha_or;
    r.claimed_xor = claimed.alpha_xor;
    r.corrected_or = row.alpha_or;
    r.corrected_xor = row.alpha_xor;
    r.or_match = r.claimed_or == r.corrected_or;
    r.xor_match = r.claimed_xor == r.corrected_xor;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace rgvss::analytic
