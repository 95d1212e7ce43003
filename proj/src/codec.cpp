#include "rgvss/codec.hpp"

#include <string>

namespace rgvss::codec {

EncodingPolicy EncodingPolicy::averaged(SchemeParams scheme) {
  scheme.validate();
  if (scheme.n > kMaxShares) throw ParameterError("encoder supports at most 64 shares");
  return EncodingPolicy(Kind::kAveraged, scheme, 0);
}

EncodingPolicy EncodingPolicy::fixed(SchemeParams scheme, int j) {
  scheme.validate();
  if (scheme.n > kMaxShares) throw ParameterError("encoder supports at most 64 shares");
  if (j < scheme.k || j > scheme.n) {
    throw ParameterError("fixed policy j = " + std::to_string(j) + " outside " +
                         std::to_string(scheme.k) + ".." + std::to_string(scheme.n));
  }
  return EncodingPolicy(Kind::kFixed, scheme, j);
}

EncodingPolicy EncodingPolicy::parse(SchemeParams scheme, const std::string& text) {
  if (text == "averaged") return averaged(scheme);
  if (text.rfind("fixed:", 0) == 0) {
    const std::string digits = text.substr(6);
    std::size_t used = 0;
    int j = 0;
    try {
      j = std::stoi(digits, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != digits.size()) {
      throw ParameterError("bad policy '" + text + "' (want averaged|fixed:<j>)");
    }
    return fixed(scheme, j);
  }
  throw ParameterError("bad policy '" + text + "' (want averaged|fixed:<j>)");
}

std::string EncodingPolicy::str() const {
  return kind_ == Kind::kAveraged ? "averaged" : "fixed:" + std::to_string(j_);
}

void check_fixed(int j, int n) {
  if (j < 2 || j > n || n > kMaxShares) {
    throw ParameterError("(j,n) = (" + std::to_string(j) + "," + std::to_string(n) +
                         ") invalid: need 2 <= j <= n <= 64");
  }
}

PixelShares lay_out(Pixel s, int n, std::span<const int> core_positions,
                    std::uint64_t core_free_bits, std::uint64_t filler_bits) {
  const int j = static_cast<int>(core_positions.size());
  check_fixed(j, n);
  const std::uint64_t core = kk_core(s, j, core_free_bits);
  std::uint64_t mask = 0;
  std::uint64_t taken = 0;
  for (int i = 0; i < j; ++i) {
    const int p = core_positions[static_cast<std::size_t>(i)];
    if (p < 0 || p >= n || (taken & (1ULL << p))) {
      throw ParameterError("lay_out: core positions must be distinct and in 0..n-1");
    }
    mask |= ((core >> i) & 1U) << p;
    taken |= 1ULL << p;
  }
  int f = 0;
  for (int p = 0; p < n; ++p) {
    if (taken & (1ULL << p)) continue;
    mask |= ((filler_bits >> f) & 1U) << p;
    ++f;
  }
  return PixelShares(mask, n);
}

Pixel stack(std::span<const Pixel> bits, StackOp op) {
  if (bits.empty()) throw ParameterError("stack: no shares to combine");
  int acc = 0;
  for (Pixel p : bits) acc = op == StackOp::kOr ? (acc | to_bit(p)) : (acc ^ to_bit(p));
  return to_pixel(acc);
}

}  // namespace rgvss::codec
