#pragma once

// Ground truth for the closed forms: exact expectations by walking every
// outcome of the encoder's random choices, and seeded Monte Carlo.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "rgvss/codec.hpp"
#include "rgvss/ratio.hpp"
#include "rgvss/scheme.hpp"

namespace rgvss::oracle {

inline constexpr int kDefaultEnumCap = 8;

/// RGVSS_ENUM_CAP if set to a positive integer, else kDefaultEnumCap.
int enumeration_cap();

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EnumerationResult {
  TransmissionSpec spec;
  codec::EncodingPolicy policy;
  Ratio exact;
  /// Equally likely outcomes visited per j: C(n,j) placements times
  /// 2^(j-1) core patterns times 2^(n-j) filler patterns, summed over j.
  std::uint64_t outcome_count = 0;
};

/// Exact expected white fraction of stacking shares 1..spec.t.
/// spec.scheme must equal policy.scheme(). Throws CapExceeded when n > cap.
EnumerationResult enumerate_transmission(const codec::EncodingPolicy& policy,
                                         const TransmissionSpec& spec,
                                         int cap = enumeration_cap());

/// Same, for an arbitrary nonempty set of shares (bit i = share i+1).
Ratio enumerate_subset_transmission(const codec::EncodingPolicy& policy, std::uint64_t subset,
                                    StackOp op, Pixel s, int cap = enumeration_cap());

/// True iff every t-subset of the n shares has the same exact transmission.
bool enumerate_all_subsets_check(const codec::EncodingPolicy& policy, int t, StackOp op, Pixel s,
                                 int cap = enumeration_cap());

/// Trials are split into chunks of kChunkTrials; chunk c draws from
/// SplitMixBits(seed, c), so the count does not depend on thread count.
inline constexpr std::uint64_t kChunkTrials = std::uint64_t{1} << 16;

struct McEstimate {
  TransmissionSpec spec;
  std::uint64_t trials = 0;
  std::uint64_t white_count = 0;
  double estimate = 0.0;
  double std_error = 0.0;  // sqrt(estimate (1 - estimate) / trials)

  /// |estimate - exact| in units of std_error. When std_error is 0 the
  /// binomial sigma of `exact` is used instead; 0 if both are 0 and equal.
  double z_score(const Ratio& exact) const;
};

/// OpenMP-parallel over chunks.
McEstimate monte_carlo_transmission(const codec::EncodingPolicy& policy,
                                    const TransmissionSpec& spec, std::uint64_t trials,
                                    std::uint64_t seed);

namespace serial {
McEstimate monte_carlo_transmission(const codec::EncodingPolicy& policy,
                                    const TransmissionSpec& spec, std::uint64_t trials,
                                    std::uint64_t seed);
}  // namespace serial

/// Monte Carlo deviations beyond this many standard errors fail verification.
inline constexpr double kVerifySigma = 5.0;

struct VerifyEntry {
  int t = 0;
  StackOp op = StackOp::kOr;
  Pixel s = Pixel::kWhite;
  Ratio closed_form;
  Ratio enumerated;
  McEstimate monte_carlo;
  double z = 0.0;
  bool exact_match = false;
  bool within_3sigma = false;
  bool within_5sigma = false;
  bool subsets_agree = false;

  bool pass() const { return exact_match && within_5sigma && subsets_agree; }
};

struct VerifyContrast {
  int t = 0;
  StackOp op = StackOp::kOr;
  Ratio closed_form;
  Ratio enumerated;
};

struct VerifyReport {
  SchemeParams scheme;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<VerifyEntry> entries;     // t = 1..n, op, s
  std::vector<VerifyContrast> contrasts;  // t = 1..n, op
  bool all_pass() const;
};

/// Closed form vs enumeration (exact) vs Monte Carlo (within kVerifySigma)
/// for every t = 1..n, both ops and both secret colors, under the averaged
/// policy. Entry i uses Monte Carlo seed stream_seed(seed, i).
VerifyReport verify_scheme(SchemeParams scheme, std::uint64_t trials, std::uint64_t seed,
                           int cap = enumeration_cap());

}  // namespace rgvss::oracle
