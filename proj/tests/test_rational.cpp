#include <doctest.h>

#include "icl/rational.hpp"

using icl::Rational;

TEST_CASE("rationals are kept in lowest terms") {
  const Rational r = icl::make_rational(6, -4);
  CHECK(r.get_num() == -3);
  CHECK(r.get_den() == 2);
  CHECK(icl::to_fraction_string(icl::make_rational(0, 7)) == "0/1");
  CHECK_THROWS_AS(icl::make_rational(1, 0), std::invalid_argument);
}

TEST_CASE("parse_rational accepts integers, fractions and decimals") {
  CHECK(icl::parse_rational("3") == 3);
  CHECK(icl::parse_rational("3/2") == icl::make_rational(3, 2));
  CHECK(icl::parse_rational("-10/4") == icl::make_rational(-5, 2));
  CHECK(icl::parse_rational("0.25") == icl::make_rational(1, 4));
  CHECK(icl::parse_rational("1.5") == icl::make_rational(3, 2));
  CHECK_THROWS(icl::parse_rational("abc"));
  CHECK_THROWS(icl::parse_rational("1/0"));
}

TEST_CASE("decimal rendering rounds half away from zero") {
  CHECK(icl::to_decimal_string(icl::make_rational(8, 27)) == "0.296296");
  CHECK(icl::to_decimal_string(icl::make_rational(8, 27), 4) == "0.2963");
  CHECK(icl::to_decimal_string(icl::make_rational(1, 3)) == "0.333333");
  CHECK(icl::to_decimal_string(icl::make_rational(2, 3)) == "0.666667");
  CHECK(icl::to_decimal_string(icl::make_rational(-1, 8), 2) == "-0.13");
  CHECK(icl::to_decimal_string(Rational(5)) == "5.000000");
  CHECK(icl::describe(icl::make_rational(5, 4)) == "5/4 (1.250000)");
}

TEST_CASE("binomial coefficients") {
  CHECK(icl::binomial(4, 2) == 6);
  CHECK(icl::binomial(5, 0) == 1);
  CHECK(icl::binomial(5, 5) == 1);
  CHECK(icl::binomial(3, 4) == 0);
  CHECK(icl::binomial(20, 10) == 184756);
}
