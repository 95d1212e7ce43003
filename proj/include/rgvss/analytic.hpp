#pragma once

// Closed-form light transmission and contrast of the random-grid (k,n)
// scheme with OR and XOR decryption.
//
// A secret pixel is encoded by a (j,n) threshold sub-scheme, j drawn
// uniformly from {k, ..., n}. The expected white fraction of a t-share
// stack is therefore the mean of the per-j transmissions, and contrast
// compares the white-region and black-region means.

#include <vector>

#include "rgvss/ratio.hpp"
#include "rgvss/scheme.hpp"

namespace rgvss::analytic {

/// Expected white fraction of an OR stack of t shares from the (k,n)
/// sub-scheme:
///   t >= k, s = 0:  q (1/2)^(t-1) + (1 - q) (1/2)^t,  q = C(t,k)/C(n,k)
///   t >= k, s = 1:  (1 - q) (1/2)^t
///   t <  k:         (1/2)^t
Ratio fixed_or_transmission(int k, int n, int t, Pixel s);

/// Expected white fraction of an XOR of t shares from the (k,n) sub-scheme:
/// (1/2)(1 + 1/C(n,k)) for t = k and s = 0, (1/2)(1 - 1/C(n,k)) for t = k
/// and s = 1, and 1/2 otherwise.
Ratio fixed_xor_transmission(int k, int n, int t, Pixel s);

Ratio fixed_transmission(StackOp op, int k, int n, int t, Pixel s);

/// Mean of fixed_transmission over sub-scheme thresholds j = k..n.
Ratio avg_transmission(const TransmissionSpec& spec);

/// (t0 - t1) / (1 + t1). Throws DomainError when t0 < t1.
Ratio contrast(const Ratio& t0, const Ratio& t1);

/// Contrast of the averaged scheme for a t-share stack. Zero for t < k.
Ratio scheme_contrast(SchemeParams scheme, int t, StackOp op);

struct ContrastRow {
  SchemeParams scheme;
  int t = 0;
  Ratio alpha_or;
  Ratio alpha_xor;
  Ratio t0_or;
  Ratio t1_or;
  Ratio t0_xor;
  Ratio t1_xor;
};

/// One row per t = k..n.
std::vector<ContrastRow> contrast_table(SchemeParams scheme);

/// A row of the published comparison: contrast values as originally
/// claimed for the scheme next to the recomputed ones.
struct CorrigendumRow {
  SchemeParams scheme;
  int t = 0;
  Ratio claimed_or;
  Ratio claimed_xor;
  Ratio corrected_or;
  Ratio corrected_xor;
  bool or_match = false;
  bool xor_match = false;
};

/// Previously published contrast values, as printed. Reference data only.
struct ClaimedContrast {
  SchemeParams scheme;
  int t;
  Ratio alpha_or;
  Ratio alpha_xor;
};
const std::vector<ClaimedContrast>& claimed_contrasts();

/// Joins claimed_contrasts() with contrast_table() for the same schemes.
std::vector<CorrigendumRow> corrigendum_report();

}  // namespace rgvss::analytic
