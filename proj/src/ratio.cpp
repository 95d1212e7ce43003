#include "rgvss/ratio.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <utility>

namespace rgvss {

Ratio::Ratio(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw DomainError("ratio: zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ < 0) throw DomainError("ratio: negative value " + num_.str() + "/" + den_.str());
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

std::string Ratio::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

double Ratio::to_double() const {
  // Scale down huge operands so the conversion cannot overflow to inf/inf.
  BigInt n = num_;
  BigInt d = den_;
  while (msb(d) > 1000) {
    n >>= 64;
    d >>= 64;
  }
  return n.convert_to<double>() / d.convert_to<double>();
}

std::string Ratio::decimal(int significant) const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant, to_double());
  return buf;
}

Ratio operator+(const Ratio& a, const Ratio& b) {
  return Ratio(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Ratio operator-(const Ratio& a, const Ratio& b) {
  BigInt n = a.num_ * b.den_ - b.num_ * a.den_;
  if (n < 0) throw DomainError("ratio: " + a.str() + " - " + b.str() + " is negative");
  return Ratio(std::move(n), a.den_ * b.den_);
}

Ratio operator*(const Ratio& a, const Ratio& b) {
  return Ratio(a.num_ * b.num_, a.den_ * b.den_);
}

Ratio operator/(const Ratio& a, const Ratio& b) {
  if (b.is_zero()) throw DomainError("ratio: division by zero");
  return Ratio(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Ratio& r) { return os << r.str(); }

Ratio ratio(const BigInt& num, const BigInt& den) { return Ratio(num, den); }

Ratio half_pow(int e) {
  if (e < 0) throw DomainError("half_pow: negative exponent");
  return Ratio(BigInt(1), BigInt(1) << e);
}

BigInt binom(std::int64_t n, std::int64_t k) {
  if (n < 0) throw DomainError("binom: negative n");
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: result is C(n-k+i, i) here
  }
  return result;
}

Ratio parse_ratio(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Ratio(BigInt(text), BigInt(1));
    return Ratio(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const DomainError&) {
    throw;
  } catch (const std::exception&) {
    throw DomainError("ratio: cannot parse '" + text + "'");
  }
}

}  // namespace rgvss
