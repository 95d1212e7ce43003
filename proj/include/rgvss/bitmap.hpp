#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rgvss/codec.hpp"
#include "rgvss/scheme.hpp"

namespace rgvss {

/// Rectangular binary image, row-major. 1 = black, 0 = white.
class Bitmap {
 public:
  Bitmap() = default;
  /// All-white image. Throws ParameterError for non-positive dimensions.
  Bitmap(int width, int height);
  Bitmap(int width, int height, std::vector<Pixel> pixels);

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t size() const { return pixels_.size(); }
  bool empty() const { return pixels_.empty(); }

  Pixel at(int x, int y) const { return pixels_[index(x, y)]; }
  void set(int x, int y, Pixel p) { pixels_[index(x, y)] = p; }
  std::span<const Pixel> pixels() const { return pixels_; }
  std::span<Pixel> pixels() { return pixels_; }

  bool same_shape(const Bitmap& o) const { return width_ == o.width_ && height_ == o.height_; }

  friend bool operator==(const Bitmap&, const Bitmap&) = default;

 private:
  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(x);
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<Pixel> pixels_;
};

/// Top half white, bottom half black.
Bitmap test_card(int width = 256, int height = 256);

struct ShareSet {
  SchemeParams scheme;
  codec::EncodingPolicy policy;
  std::uint64_t master_seed = 0;
  std::vector<Bitmap> shares;
};

/// Encodes every pixel independently; pixel p (row-major index) draws from
/// SplitMixBits(seed, p). Parallel over rows with OpenMP.
ShareSet encode_image(const Bitmap& secret, const codec::EncodingPolicy& policy,
                      std::uint64_t seed);

/// Pixelwise stack of the given shares. Parallel over pixels.
Bitmap reconstruct(std::span<const Bitmap> shares, StackOp op);

/// Stacks shares by 0-based index into a ShareSet.
Bitmap reconstruct(const ShareSet& set, std::span<const int> indices, StackOp op);

/// White pixels of `recon` inside the region where `secret` equals `region`.
struct RegionTransmission {
  std::size_t white = 0;
  std::size_t total = 0;
  double value() const { return static_cast<double>(white) / static_cast<double>(total); }
};

/// Throws ParameterError on shape mismatch or an empty region.
RegionTransmission measure_transmission(const Bitmap& recon, const Bitmap& secret, Pixel region);

/// Single-threaded reference versions of the parallel kernels above. They
/// must agree bit for bit with the parallel ones.
namespace serial {
ShareSet encode_image(const Bitmap& secret, const codec::EncodingPolicy& policy,
                      std::uint64_t seed);
Bitmap reconstruct(std::span<const Bitmap> shares, StackOp op);
}  // namespace serial

}  // namespace rgvss
