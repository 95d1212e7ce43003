#pragma once

// Per-pixel share generation and stacking.
//
// A secret pixel s is spread over n share pixels with a (j,n) threshold
// step: a uniformly random j-subset of share positions receives a (j,j)
// parity core (j-1 free random bits plus one bit fixing the core's parity
// to s); every other position gets an independent random bit. The
// averaged policy first draws j uniformly from {k, ..., n}.
//
// The random choices are funnelled through lay_out(), which is also what
// the enumeration oracle drives with every possible choice.

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rgvss/random.hpp"
#include "rgvss/scheme.hpp"

namespace rgvss::codec {

inline constexpr int kMaxShares = 64;

/// The n share pixels generated for one secret pixel; bit i is share i+1.
class PixelShares {
 public:
  constexpr PixelShares() = default;
  constexpr PixelShares(std::uint64_t mask, int n) : mask_(mask), n_(n) {}

  constexpr int size() const { return n_; }
  constexpr std::uint64_t mask() const { return mask_; }
  constexpr Pixel operator[](int i) const { return to_pixel(static_cast<int>((mask_ >> i) & 1U)); }

  friend constexpr bool operator==(const PixelShares&, const PixelShares&) = default;

 private:
  std::uint64_t mask_ = 0;
  int n_ = 0;
};

/// Encoding policy: a fixed (j,n) threshold step, or the averaged mixture
/// over j = k..n.
class EncodingPolicy {
 public:
  enum class Kind { kAveraged, kFixed };

  static EncodingPolicy averaged(SchemeParams scheme);
  /// Requires scheme.k <= j <= scheme.n.
  static EncodingPolicy fixed(SchemeParams scheme, int j);
  /// "averaged" or "fixed:<j>".
  static EncodingPolicy parse(SchemeParams scheme, const std::string& text);

  Kind kind() const { return kind_; }
  const SchemeParams& scheme() const { return scheme_; }
  /// Only meaningful for kFixed.
  int j() const { return j_; }
  std::string str() const;

  friend bool operator==(const EncodingPolicy&, const EncodingPolicy&) = default;

 private:
  EncodingPolicy(Kind kind, SchemeParams scheme, int j) : kind_(kind), scheme_(scheme), j_(j) {}

  Kind kind_;
  SchemeParams scheme_;
  int j_;
};

/// Builds a (j,j) parity core from its j-1 free bits: bit i for i < j-1 is
/// bit i of `free_bits`; the last bit makes the XOR of all j bits equal s.
constexpr std::uint64_t kk_core(Pixel s, int j, std::uint64_t free_bits) {
  const std::uint64_t free_mask = (j - 1 >= 64) ? ~0ULL : ((1ULL << (j - 1)) - 1);
  const std::uint64_t head = free_bits & free_mask;
  const auto parity = static_cast<std::uint64_t>(std::popcount(head) & 1);
  const std::uint64_t last = parity ^ static_cast<std::uint64_t>(to_bit(s));
  return head | (last << (j - 1));
}

/// Deterministic placement: core bit i goes to share position
/// core_positions[i]; the remaining n-j positions, in increasing order,
/// take successive bits of `filler_bits`.
PixelShares lay_out(Pixel s, int n, std::span<const int> core_positions,
                    std::uint64_t core_free_bits, std::uint64_t filler_bits);

/// (k,k) random-grid primitive: k bits whose XOR is s. Bit i of the
/// result is the i-th share.
template <BitSource R>
std::uint64_t encode_kk(Pixel s, int k, R& rng) {
  if (k < 2 || k > kMaxShares) throw ParameterError("encode_kk: need 2 <= k <= 64");
  std::uint64_t free_bits = 0;
  for (int i = 0; i < k - 1; ++i) free_bits |= static_cast<std::uint64_t>(rng.bit() & 1) << i;
  return kk_core(s, k, free_bits);
}

void check_fixed(int j, int n);

/// One (j,n) threshold step.
template <BitSource R>
PixelShares encode_pixel_fixed(Pixel s, int j, int n, R& rng) {
  check_fixed(j, n);
  // Partial Fisher-Yates: the first j entries form a uniform ordered
  // j-subset of the share positions.
  std::array<int, kMaxShares> pos{};
  for (int i = 0; i < n; ++i) pos[i] = i;
  for (int i = 0; i < j; ++i) {
    const int pick = i + static_cast<int>(rng.below(static_cast<std::uint32_t>(n - i)));
    std::swap(pos[i], pos[pick]);
  }
  std::uint64_t core_free = 0;
  for (int i = 0; i < j - 1; ++i) core_free |= static_cast<std::uint64_t>(rng.bit() & 1) << i;
  std::uint64_t filler = 0;
  for (int i = 0; i < n - j; ++i) filler |= static_cast<std::uint64_t>(rng.bit() & 1) << i;
  return lay_out(s, n, std::span<const int>(pos.data(), static_cast<std::size_t>(j)), core_free,
                 filler);
}

template <BitSource R>
PixelShares encode_pixel_averaged(Pixel s, SchemeParams scheme, R& rng) {
  scheme.validate();
  const int j = scheme.k + static_cast<int>(rng.below(static_cast<std::uint32_t>(scheme.n - scheme.k + 1)));
  return encode_pixel_fixed(s, j, scheme.n, rng);
}

template <BitSource R>
PixelShares encode_pixel(Pixel s, const EncodingPolicy& policy, R& rng) {
  if (policy.kind() == EncodingPolicy::Kind::kFixed) {
    return encode_pixel_fixed(s, policy.j(), policy.scheme().n, rng);
  }
  return encode_pixel_averaged(s, policy.scheme(), rng);
}

/// OR: black iff any bit is black. XOR: parity. Throws on empty input.
Pixel stack(std::span<const Pixel> bits, StackOp op);

/// Stacks the shares selected by `subset` (bit i = share i+1).
constexpr Pixel stack_mask(std::uint64_t shares, std::uint64_t subset, StackOp op) {
  const std::uint64_t sel = shares & subset;
  if (op == StackOp::kOr) return to_pixel(sel != 0);
  return to_pixel(std::popcount(sel) & 1);
}

/// Mask selecting shares 1..t.
constexpr std::uint64_t first_shares(int t) { return t >= 64 ? ~0ULL : ((1ULL << t) - 1); }

}  // namespace rgvss::codec
