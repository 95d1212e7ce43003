#include <doctest.h>

#include <random>
#include <sstream>

#include "rgvss/ratio.hpp"
#include "test_support.hpp"

using rgvss::BigInt;
using rgvss::binom;
using rgvss::DomainError;
using rgvss::Ratio;

namespace {

bool is_reduced(const Ratio& r) {
  return r.den() >= 1 && boost::multiprecision::gcd(r.num(), r.den()) == 1;
}

}  // namespace

TEST_CASE("construction reduces to lowest terms") {
  CHECK(Ratio(15, 96) == Ratio(5, 32));
  CHECK(Ratio(15, 96).num() == 5);
  CHECK(Ratio(15, 96).den() == 32);
  // Printed unreduced in the published table.
  CHECK(Ratio(6, 105) == Ratio(2, 35));
  CHECK(Ratio(3, 126) == Ratio(1, 42));
  const Ratio zero(0, 7);
  CHECK(zero.num() == 0);
  CHECK(zero.den() == 1);
  CHECK(Ratio(-3, -6) == Ratio(1, 2));
}

TEST_CASE("construction rejects zero denominators and negative values") {
  CHECK_THROWS_AS(Ratio(1, 0), DomainError);
  CHECK_THROWS_AS(Ratio(-1, 2), DomainError);
  CHECK_THROWS_AS(Ratio(1, -2), DomainError);
}

TEST_CASE("arithmetic") {
  CHECK(Ratio(7, 24) + Ratio(5, 24) == Ratio(1, 2));
  CHECK(Ratio(7, 24) - Ratio(5, 24) == Ratio(1, 12));
  CHECK(Ratio(1, 12) / Ratio(29, 24) == Ratio(2, 29));
  CHECK(Ratio(2, 3) * Ratio(3, 4) == Ratio(1, 2));
  CHECK(Ratio(5, 24) - Ratio(5, 24) == Ratio(0));
  CHECK_THROWS_AS(Ratio(5, 24) - Ratio(7, 24), DomainError);
  CHECK_THROWS_AS(Ratio(1, 2) / Ratio(0), DomainError);
}

TEST_CASE("ordering") {
  CHECK(Ratio(1, 3) < Ratio(1, 2));
  CHECK(Ratio(2, 4) <= Ratio(1, 2));
  CHECK(Ratio(9, 20) < Ratio(7, 15));
  CHECK(Ratio(11, 20) > Ratio(8, 15));
  CHECK_FALSE(Ratio(1, 2) != Ratio(50, 100));
}

TEST_CASE("rendering") {
  CHECK(Ratio(2, 29).str() == "2/29");
  CHECK(Ratio(0, 5).str() == "0");
  CHECK(Ratio(4, 2).str() == "2");
  CHECK(Ratio(2, 29).decimal() == "0.0689655");
  CHECK(Ratio(1, 4).decimal() == "0.25");
  std::ostringstream os;
  os << Ratio(7, 24);
  CHECK(os.str() == "7/24");
  CHECK(rgvss::parse_ratio("6/105") == Ratio(2, 35));
  CHECK(rgvss::parse_ratio("3") == Ratio(3));
  CHECK_THROWS_AS(rgvss::parse_ratio("x/2"), DomainError);
}

TEST_CASE("huge operands stay exact") {
  const Ratio tiny = rgvss::half_pow(400);
  const Ratio sum = tiny + tiny;
  CHECK(sum == rgvss::half_pow(399));
  CHECK(sum.to_double() > 0.0);
  CHECK(rgvss::half_pow(0) == Ratio(1));
  CHECK_THROWS_AS(rgvss::half_pow(-1), DomainError);
}

TEST_CASE("binomial coefficients") {
  CHECK(binom(3, 2) == 3);
  CHECK(binom(5, 0) == 1);
  CHECK(binom(4, 6) == 0);
  CHECK(binom(4, -1) == 0);
  CHECK(binom(60, 30) == BigInt("118264581564861424"));
  CHECK(binom(100, 50) == BigInt("100891344545564193334812497256"));
  CHECK_THROWS_AS(binom(-1, 0), DomainError);
}

TEST_CASE("binomial symmetry and row sums") {
  for (int n = 0; n <= 20; ++n) {
    BigInt row = 0;
    for (int k = 0; k <= n; ++k) {
      CHECK(binom(n, k) == binom(n, n - k));
      row += binom(n, k);
    }
    CHECK(row == (BigInt(1) << n));
  }
}

TEST_CASE("property: results are reduced, + and * commute and associate") {
  std::mt19937_64 gen(20240611);
  for (int i = 0; i < 500; ++i) {
    const Ratio a = rgvss::testing::random_ratio(gen);
    const Ratio b = rgvss::testing::random_ratio(gen);
    const Ratio c = rgvss::testing::random_ratio(gen);
    CHECK(is_reduced(a + b));
    CHECK(is_reduced(a * b));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!b.is_zero()) {
      CHECK(is_reduced(a / b));
      CHECK((a / b) * b == a);
    }
    if (a >= b) {
      CHECK(is_reduced(a - b));
      CHECK((a - b) + b == a);
    } else {
      CHECK_THROWS_AS(a - b, DomainError);
    }
  }
}
