#include "rgvss/bitmap.hpp"

#include <string>
#include <utility>

#include "rgvss/random.hpp"

namespace rgvss {

Bitmap::Bitmap(int width, int height)
    : Bitmap(width, height,
             std::vector<Pixel>(width > 0 && height > 0 ? static_cast<std::size_t>(width) *
                                                              static_cast<std::size_t>(height)
                                                        : 0,
                                Pixel::kWhite)) {}

Bitmap::Bitmap(int width, int height, std::vector<Pixel> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (width <= 0 || height <= 0) {
    throw ParameterError("bitmap dimensions must be positive, got " + std::to_string(width) +
                         "x" + std::to_string(height));
  }
  if (pixels_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
    throw ParameterError("bitmap pixel count does not match " + std::to_string(width) + "x" +
                         std::to_string(height));
  }
}

Bitmap test_card(int width, int height) {
  Bitmap card(width, height);
  for (int y = height / 2; y < height; ++y)
    for (int x = 0; x < width; ++x) card.set(x, y, Pixel::kBlack);
  return card;
}

namespace {

ShareSet blank_shares(const Bitmap& secret, const codec::EncodingPolicy& policy,
                      std::uint64_t seed) {
  if (secret.empty()) throw ParameterError("encode_image: empty secret");
  ShareSet set{policy.scheme(), policy, seed, {}};
  set.shares.assign(static_cast<std::size_t>(policy.scheme().n),
                    Bitmap(secret.width(), secret.height()));
  return set;
}

inline void encode_one(const Bitmap& secret, const codec::EncodingPolicy& policy,
                       std::uint64_t seed, std::size_t p, ShareSet& set) {
  SplitMixBits rng(seed, p);
  const codec::PixelShares bits = codec::encode_pixel(secret.pixels()[p], policy, rng);
  for (int i = 0; i < bits.size(); ++i) set.shares[static_cast<std::size_t>(i)].pixels()[p] = bits[i];
}

void check_stackable(std::span<const Bitmap> shares) {
  if (shares.empty()) throw ParameterError("reconstruct: no shares given");
  for (const Bitmap& b : shares) {
    if (!b.same_shape(shares.front())) {
      throw ParameterError("reconstruct: share dimensions differ (" +
                           std::to_string(b.width()) + "x" + std::to_string(b.height()) +
                           " vs " + std::to_string(shares.front().width()) + "x" +
                           std::to_string(shares.front().height()) + ")");
    }
  }
}

inline Pixel stack_at(std::span<const Bitmap> shares, std::size_t p, StackOp op) {
  int acc = 0;
  for (const Bitmap& b : shares) {
    const int bit = to_bit(b.pixels()[p]);
    acc = op == StackOp::kOr ? (acc | bit) : (acc ^ bit);
  }
  return to_pixel(acc);
}

}  // namespace

ShareSet encode_image(const Bitmap& secret, const codec::EncodingPolicy& policy,
                      std::uint64_t seed) {
  ShareSet set = blank_shares(secret, policy, seed);
  const auto count = static_cast<std::int64_t>(secret.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t p = 0; p < count; ++p) {
    encode_one(secret, policy, seed, static_cast<std::size_t>(p), set);
  }
  return set;
}

Bitmap reconstruct(std::span<const Bitmap> shares, StackOp op) {
  check_stackable(shares);
  Bitmap out(shares.front().width(), shares.front().height());
  const auto count = static_cast<std::int64_t>(out.size());
  auto px = out.pixels();
#pragma omp parallel for schedule(static)
  for (std::int64_t p = 0; p < count; ++p) {
    px[static_cast<std::size_t>(p)] = stack_at(shares, static_cast<std::size_t>(p), op);
  }
  return out;
}

Bitmap reconstruct(const ShareSet& set, std::span<const int> indices, StackOp op) {
  std::vector<Bitmap> chosen;
  chosen.reserve(indices.size());
  for (int i : indices) {
    if (i < 0 || static_cast<std::size_t>(i) >= set.shares.size()) {
      throw ParameterError("reconstruct: share index " + std::to_string(i) + " out of range");
    }
    chosen.push_back(set.shares[static_cast<std::size_t>(i)]);
  }
  return reconstruct(chosen, op);
}

RegionTransmission measure_transmission(const Bitmap& recon, const Bitmap& secret, Pixel region) {
  if (!recon.same_shape(secret)) throw ParameterError("measure_transmission: shape mismatch");
  RegionTransmission m;
  const auto rp = recon.pixels();
  const auto sp = secret.pixels();
  for (std::size_t p = 0; p < sp.size(); ++p) {
    if (sp[p] != region) continue;
    ++m.total;
    if (rp[p] == Pixel::kWhite) ++m.white;
  }
  if (m.total == 0) {
    throw ParameterError(std::string("measure_transmission: secret has no ") +
                         (region == Pixel::kWhite ? "white" : "black") + " pixels");
  }
  return m;
}

namespace serial {

ShareSet encode_image(const Bitmap& secret, const codec::EncodingPolicy& policy,
                      std::uint64_t seed) {
  ShareSet set = blank_shares(secret, policy, seed);
  for (std::size_t p = 0; p < secret.size(); ++p) encode_one(secret, policy, seed, p, set);
  return set;
}

Bitmap reconstruct(std::span<const Bitmap> shares, StackOp op) {
  check_stackable(shares);
  Bitmap out(shares.front().width(), shares.front().height());
  for (std::size_t p = 0; p < out.size(); ++p) out.pixels()[p] = stack_at(shares, p, op);
  return out;
}

}  // namespace serial
}  // namespace rgvss
