#include "rgvss/oracle.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <string>

#include "rgvss/analytic.hpp"
#include "rgvss/random.hpp"

namespace rgvss::oracle {

int enumeration_cap() {
  if (const char* env = std::getenv("RGVSS_ENUM_CAP")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= codec::kMaxShares) return static_cast<int>(v);
  }
  return kDefaultEnumCap;
}

namespace {

void check_cap(int n, int cap) {
  if (n > cap) {
    std::uint64_t states = 0;
    for (int j = 2; j <= n && n < 63; ++j) {
      states += binom(n, j).convert_to<std::uint64_t>() << (n - 1);
    }
    throw CapExceeded("enumeration cap exceeded: n = " + std::to_string(n) + " > cap " +
                      std::to_string(cap) + " (up to " + std::to_string(states) +
                      " outcomes per quantity); raise RGVSS_ENUM_CAP to override");
  }
}

struct JRange {
  int lo;
  int hi;
};

JRange j_range(const codec::EncodingPolicy& policy) {
  if (policy.kind() == codec::EncodingPolicy::Kind::kFixed) return {policy.j(), policy.j()};
  return {policy.scheme().k, policy.scheme().n};
}

// Number of white stacked results over all outcomes of one (j,n) step:
// every j-combination of positions, every core pattern, every filler pattern.
std::uint64_t white_outcomes(int j, int n, std::uint64_t subset, StackOp op, Pixel s) {
  std::array<int, codec::kMaxShares> pos{};
  for (int i = 0; i < j; ++i) pos[static_cast<std::size_t>(i)] = i;
  const std::uint64_t core_patterns = std::uint64_t{1} << (j - 1);
  const std::uint64_t filler_patterns = std::uint64_t{1} << (n - j);
  const std::span<const int> core(pos.data(), static_cast<std::size_t>(j));
  std::uint64_t white = 0;
  while (true) {
    for (std::uint64_t c = 0; c < core_patterns; ++c) {
      for (std::uint64_t f = 0; f < filler_patterns; ++f) {
        const codec::PixelShares shares = codec::lay_out(s, n, core, c, f);
        if (codec::stack_mask(shares.mask(), subset, op) == Pixel::kWhite) ++white;
      }
    }
    // Next combination in lexicographic order.
    int i = j - 1;
    while (i >= 0 && pos[static_cast<std::size_t>(i)] == n - j + i) --i;
    if (i < 0) break;
    ++pos[static_cast<std::size_t>(i)];
    for (int m = i + 1; m < j; ++m) pos[static_cast<std::size_t>(m)] = pos[static_cast<std::size_t>(m - 1)] + 1;
  }
  return white;
}

struct Tally {
  Ratio exact;
  std::uint64_t outcomes = 0;
};

Tally tally(const codec::EncodingPolicy& policy, std::uint64_t subset, StackOp op, Pixel s,
            int cap) {
  const int n = policy.scheme().n;
  check_cap(n, cap);
  if (subset == 0 || (subset >> n) != 0) {
    throw ParameterError("enumeration: share subset must be nonempty and within 1..n");
  }
  const auto [lo, hi] = j_range(policy);
  Tally out;
  for (int j = lo; j <= hi; ++j) {
    const BigInt per_j = binom(n, j) << (n - 1);
    out.exact += Ratio(BigInt(white_outcomes(j, n, subset, op, s)), per_j);
    out.outcomes += per_j.convert_to<std::uint64_t>();
  }
  out.exact /= Ratio(hi - lo + 1);
  return out;
}

}  // namespace

EnumerationResult enumerate_transmission(const codec::EncodingPolicy& policy,
                                         const TransmissionSpec& spec, int cap) {
  spec.validate();
  if (!(spec.scheme == policy.scheme())) {
    throw ParameterError("enumeration: spec scheme " + spec.scheme.str() +
                         " differs from policy scheme " + policy.scheme().str());
  }
  Tally t = tally(policy, codec::first_shares(spec.t), spec.op, spec.s, cap);
  return EnumerationResult{spec, policy, std::move(t.exact), t.outcomes};
}

Ratio enumerate_subset_transmission(const codec::EncodingPolicy& policy, std::uint64_t subset,
                                    StackOp op, Pixel s, int cap) {
  return tally(policy, subset, op, s, cap).exact;
}

bool enumerate_all_subsets_check(const codec::EncodingPolicy& policy, int t, StackOp op, Pixel s,
                                 int cap) {
  const int n = policy.scheme().n;
  check_cap(n, cap);
  TransmissionSpec{policy.scheme(), t, op, s}.validate();
  const Ratio reference = enumerate_subset_transmission(policy, codec::first_shares(t), op, s, cap);
  for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << n); ++subset) {
    if (std::popcount(subset) != t) continue;
    if (enumerate_subset_transmission(policy, subset, op, s, cap) != reference) return false;
  }
  return true;
}

double McEstimate::z_score(const Ratio& exact) const {
  const double p = exact.to_double();
  const double diff = std::abs(estimate - p);
  double sigma = std_error;
  if (sigma == 0.0) sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
  if (sigma == 0.0) return diff == 0.0 ? 0.0 : INFINITY;
  return diff / sigma;
}

namespace {

std::uint64_t run_chunk(const codec::EncodingPolicy& policy, const TransmissionSpec& spec,
                        std::uint64_t seed, std::uint64_t chunk, std::uint64_t count) {
  SplitMixBits rng(seed, chunk);
  const std::uint64_t subset = codec::first_shares(spec.t);
  std::uint64_t white = 0;
  for (std::uint64_t i = 0; i < count; ++i) {
    const codec::PixelShares shares = codec::encode_pixel(spec.s, policy, rng);
    if (codec::stack_mask(shares.mask(), subset, spec.op) == Pixel::kWhite) ++white;
  }
  return white;
}

McEstimate finish(const TransmissionSpec& spec, std::uint64_t trials, std::uint64_t white) {
  McEstimate e;
  e.spec = spec;
  e.trials = trials;
  e.white_count = white;
  e.estimate = static_cast<double>(white) / static_cast<double>(trials);
  e.std_error = std::sqrt(e.estimate * (1.0 - e.estimate) / static_cast<double>(trials));
  return e;
}

void check_mc(const codec::EncodingPolicy& policy, const TransmissionSpec& spec,
              std::uint64_t trials) {
  spec.validate();
  if (!(spec.scheme == policy.scheme())) {
    throw ParameterError("monte carlo: spec scheme differs from policy scheme");
  }
  if (trials == 0) throw ParameterError("monte carlo: trials must be >= 1");
}

std::uint64_t chunk_size(std::uint64_t trials, std::uint64_t chunk) {
  const std::uint64_t begin = chunk * kChunkTrials;
  return std::min(kChunkTrials, trials - begin);
}

}  // namespace

McEstimate monte_carlo_transmission(const codec::EncodingPolicy& policy,
                                    const TransmissionSpec& spec, std::uint64_t trials,
                                    std::uint64_t seed) {
  check_mc(policy, spec, trials);
  const auto chunks = static_cast<std::int64_t>((trials + kChunkTrials - 1) / kChunkTrials);
  std::uint64_t white = 0;
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : white)
  for (std::int64_t c = 0; c < chunks; ++c) {
    const auto chunk = static_cast<std::uint64_t>(c);
    white += run_chunk(policy, spec, seed, chunk, chunk_size(trials, chunk));
  }
  return finish(spec, trials, white);
}

namespace serial {

McEstimate monte_carlo_transmission(const codec::EncodingPolicy& policy,
                                    const TransmissionSpec& spec, std::uint64_t trials,
                                    std::uint64_t seed) {
  check_mc(policy, spec, trials);
  std::uint64_t white = 0;
  for (std::uint64_t chunk = 0; chunk * kChunkTrials < trials; ++chunk) {
    white += run_chunk(policy, spec, seed, chunk, chunk_size(trials, chunk));
  }
  return finish(spec, trials, white);
}

}  // namespace serial

bool VerifyReport::all_pass() const {
  for (const auto& e : entries)
    if (!e.pass()) return false;
  for (const auto& c : contrasts)
    if (c.closed_form != c.enumerated) return false;
  return true;
}

VerifyReport verify_scheme(SchemeParams scheme, std::uint64_t trials, std::uint64_t seed,
                           int cap) {
  scheme.validate();
  check_cap(scheme.n, cap);
  const auto policy = codec::EncodingPolicy::averaged(scheme);
  VerifyReport report;
  report.scheme = scheme;
  report.trials = trials;
  report.seed = seed;
  std::uint64_t index = 0;
  for (int t = 1; t <= scheme.n; ++t) {
    for (StackOp op : {StackOp::kOr, StackOp::kXor}) {
      std::array<Ratio, 2> enumerated;
      std::array<Ratio, 2> closed;
      for (Pixel s : {Pixel::kWhite, Pixel::kBlack}) {
        const TransmissionSpec spec{scheme, t, op, s};
        VerifyEntry e;
        e.t = t;
        e.op = op;
        e.s = s;
        e.closed_form = analytic::avg_transmission(spec);
        e.enumerated = enumerate_transmission(policy, spec, cap).exact;
        e.exact_match = e.closed_form == e.enumerated;
        e.subsets_agree = enumerate_all_subsets_check(policy, t, op, s, cap);
        e.monte_carlo = monte_carlo_transmission(policy, spec, trials, stream_seed(seed, index++));
        e.z = e.monte_carlo.z_score(e.closed_form);
        e.within_3sigma = e.z <= 3.0;
        e.within_5sigma = e.z <= kVerifySigma;
        closed[static_cast<std::size_t>(to_bit(s))] = e.closed_form;
        enumerated[static_cast<std::size_t>(to_bit(s))] = e.enumerated;
        report.entries.push_back(std::move(e));
      }
      report.contrasts.push_back(VerifyContrast{t, op, analytic::contrast(closed[0], closed[1]),
                                                analytic::contrast(enumerated[0], enumerated[1])});
    }
  }
  return report;
}

}  // namespace rgvss::oracle
