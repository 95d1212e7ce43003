#pragma once

// Deterministic bit sources for the share encoder.
//
// Every encoded pixel (and every Monte Carlo chunk) owns an independent
// stream whose starting state is a pure function of (master seed, index):
//
//   state0 = mix64(master_seed ^ mix64(index + 0x9e3779b97f4a7c15))
//
// where mix64 is the SplitMix64 finalizer. The stream then advances as
// SplitMix64 (state += 0x9e3779b97f4a7c15; output = mix64(state)).
// Results therefore do not depend on processing order or thread count.

#include <concepts>
#include <cstdint>

namespace rgvss {

/// Anything that hands out unbiased bits and unbiased integers in [0, bound).
template <typename T>
concept BitSource = requires(T& src, std::uint32_t bound) {
  { src.bit() } -> std::convertible_to<int>;
  { src.below(bound) } -> std::convertible_to<std::uint32_t>;
};

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t stream_seed(std::uint64_t master, std::uint64_t index) {
  return mix64(master ^ mix64(index + kGolden));
}

/// SplitMix64 stream with a 64-bit bit buffer.
class SplitMixBits {
 public:
  constexpr explicit SplitMixBits(std::uint64_t state) : state_(state) {}
  constexpr SplitMixBits(std::uint64_t master, std::uint64_t index)
      : state_(stream_seed(master, index)) {}

  constexpr std::uint64_t next() {
    state_ += kGolden;
    return mix64(state_);
  }

  constexpr int bit() {
    if (avail_ == 0) {
      buf_ = next();
      avail_ = 64;
    }
    int b = static_cast<int>(buf_ & 1U);
    buf_ >>= 1;
    --avail_;
    return b;
  }

  /// `count` <= 64 fresh bits packed little-endian.
  constexpr std::uint64_t bits(int count) {
    std::uint64_t out = 0;
    for (int i = 0; i < count; ++i) out |= static_cast<std::uint64_t>(bit()) << i;
    return out;
  }

  /// Uniform in [0, bound), bound >= 1. Lemire's multiply-shift with rejection.
  constexpr std::uint32_t below(std::uint32_t bound) {
    std::uint64_t m = static_cast<std::uint64_t>(static_cast<std::uint32_t>(next())) * bound;
    auto low = static_cast<std::uint32_t>(m);
    if (low < bound) {
      const std::uint32_t threshold = (0U - bound) % bound;
      while (low < threshold) {
        m = static_cast<std::uint64_t>(static_cast<std::uint32_t>(next())) * bound;
        low = static_cast<std::uint32_t>(m);
      }
    }
    return static_cast<std::uint32_t>(m >> 32);
  }

 private:
  std::uint64_t state_;
  std::uint64_t buf_ = 0;
  int avail_ = 0;
};

static_assert(BitSource<SplitMixBits>);

}  // namespace rgvss
