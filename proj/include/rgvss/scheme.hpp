#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rgvss {

/// Bad (k, n, t, j, s) combinations and similar caller errors.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// 0 is white (transparent), 1 is black (opaque).
enum class Pixel : std::uint8_t { kWhite = 0, kBlack = 1 };

constexpr Pixel to_pixel(int bit) { return bit ? Pixel::kBlack : Pixel::kWhite; }
constexpr int to_bit(Pixel p) { return static_cast<int>(p); }

/// How t shares are combined: physical stacking (OR) or parity (XOR).
enum class StackOp { kOr, kXor };

std::string_view to_string(StackOp op);
/// Accepts "or"/"xor" in any case.
StackOp parse_stack_op(std::string_view text);

/// (k, n) threshold parameters, 2 <= k <= n.
struct SchemeParams {
  int k = 2;
  int n = 2;

  /// Throws ParameterError unless 2 <= k <= n.
  static SchemeParams make(int k, int n);

  void validate() const;
  std::string str() const;  // "(k,n)"

  friend bool operator==(const SchemeParams&, const SchemeParams&) = default;
};

/// One expected light-transmission quantity: stack shares 1..t of a scheme
/// with `op` over the region where the secret pixel equals `s`.
struct TransmissionSpec {
  SchemeParams scheme;
  int t = 1;
  StackOp op = StackOp::kOr;
  Pixel s = Pixel::kWhite;

  /// Throws ParameterError unless the scheme is valid and 1 <= t <= n.
  void validate() const;
};

}  // namespace rgvss
