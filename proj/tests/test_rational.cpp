#include <limits>
#include <stdexcept>

#include "doctest.h"
#include "qgraph/rational.hpp"

using qgraph::Rational;

TEST_CASE("rational normalises sign and lowest terms") {
  Rational r(6, -8);
  CHECK(r.num() == -3);
  CHECK(r.den() == 4);
  CHECK(Rational(0, 5) == Rational(0));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational arithmetic") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(abs(Rational(-5, 7)) == Rational(5, 7));
  CHECK(Rational(7, 2).str() == "7/2");
  CHECK(Rational(-4).str() == "-4");
}

TEST_CASE("rational parse") {
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("-3/4") == Rational(-3, 4));
  CHECK(Rational::parse("0.125") == Rational(1, 8));
  CHECK(Rational::parse("2.5e-1") == Rational(1, 4));
  CHECK(Rational::parse("1.5E2") == Rational(150));
  CHECK_THROWS(Rational::parse("abc"));
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse(""));
}

TEST_CASE("rational overflow is detected") {
  const Rational big(std::numeric_limits<std::int64_t>::max());
  CHECK_THROWS_AS(big * Rational(2), std::overflow_error);
  CHECK_THROWS_AS(big + big, std::overflow_error);
}
