#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace rgvss {

using BigInt = boost::multiprecision::cpp_int;

/// Raised when an arithmetic result would leave the nonnegative rationals
/// (zero denominator, negative value, negative difference).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exact nonnegative rational, always stored in lowest terms with a
/// positive denominator. Every light transmission and contrast value in
/// the library is a Ratio.
class Ratio {
 public:
  Ratio() = default;
  Ratio(BigInt num, BigInt den);
  // NOLINTNEXTLINE(google-explicit-constructor)
  Ratio(std::int64_t whole) : Ratio(BigInt(whole), BigInt(1)) {}

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_ == 0; }

  /// "num/den", or just "num" when the denominator is 1.
  std::string str() const;
  /// Decimal rendering with `significant` significant digits (display only).
  std::string decimal(int significant = 6) const;
  double to_double() const;

  friend Ratio operator+(const Ratio& a, const Ratio& b);
  /// Throws DomainError when b > a.
  friend Ratio operator-(const Ratio& a, const Ratio& b);
  friend Ratio operator*(const Ratio& a, const Ratio& b);
  /// Throws DomainError when b == 0.
  friend Ratio operator/(const Ratio& a, const Ratio& b);

  Ratio& operator+=(const Ratio& o) { return *this = *this + o; }
  Ratio& operator-=(const Ratio& o) { return *this = *this - o; }
  Ratio& operator*=(const Ratio& o) { return *this = *this * o; }
  Ratio& operator/=(const Ratio& o) { return *this = *this / o; }

  friend bool operator==(const Ratio& a, const Ratio& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b);

 private:
  BigInt num_ = 0;
  BigInt den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Ratio& r);

/// Checked constructor; same contract as Ratio(num, den).
Ratio ratio(const BigInt& num, const BigInt& den);

/// (1/2)^e for e >= 0.
Ratio half_pow(int e);

/// C(n, k); zero when k < 0 or k > n.
BigInt binom(std::int64_t n, std::int64_t k);

/// Parses "a/b" or "a" into a Ratio.
Ratio parse_ratio(const std::string& text);

}  // namespace rgvss
