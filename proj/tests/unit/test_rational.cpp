#include <doctest.h>

#include <numbers>

#include "specpair/error.hpp"
#include "specpair/rational.hpp"

using namespace specpair;

TEST_SUITE("rational") {
  TEST_CASE("parse and format round trip") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-6/8") == Rational(-3, 4));
    CHECK(parse_rational("7") == Rational(7));
    CHECK(format_rational(Rational(-3, 4)) == "-3/4");
    CHECK(format_rational(Rational(4, 2)) == "2");
    for (const char* s : {"0", "1/3", "-5/7", "123456789012345678901/2"}) {
      CHECK(format_rational(parse_rational(s)) == s);
    }
  }

  TEST_CASE("malformed rationals") {
    for (const char* s : {"", "1/", "/2", "a", "1/0", "1.5", "1//2"}) {
      CHECK_THROWS_AS(parse_rational(s), Error);
    }
  }

  TEST_CASE("floor and fractional part") {
    CHECK(floor(Rational(-1, 4)) == -1);
    CHECK(fractional_part(Rational(-1, 4)) == Rational(3, 4));
    CHECK(fractional_part(Rational(9, 4)) == Rational(1, 4));
    CHECK(is_integer(Rational(6, 3)));
  }

  TEST_CASE("from_double is exact") {
    CHECK(from_double(0.25) == Rational(1, 4));
    CHECK(to_double(from_double(0.1)) == 0.1);
  }

  TEST_CASE("cispi agrees with libm and is exact at quarter turns") {
    CHECK(cispi(Rational(0)) == std::complex<double>(1, 0));
    CHECK(cispi(Rational(1, 2)) == std::complex<double>(0, 1));
    CHECK(cispi(Rational(7)) == std::complex<double>(-1, 0));
    CHECK(cispi(Rational(-1, 2)) == std::complex<double>(0, -1));
    CHECK(sinpi(Rational(1000001)) == 0.0);
    for (int p = -40; p <= 40; ++p) {
      const Rational q(p, 7);
      const double x = std::numbers::pi * p / 7.0;
      CHECK(std::abs(cispi(q) - std::complex<double>(std::cos(x), std::sin(x))) < 1e-14);
    }
  }

  TEST_CASE("cispi is antisymmetric under half turns") {
    for (int p = 0; p < 64; ++p) {
      const Rational q(p, 12);
      CHECK(cispi(q + 1) == -cispi(q));
    }
  }
}
