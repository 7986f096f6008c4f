#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "mhopf/error.hpp"
#include "mhopf/rational.hpp"

using mhopf::InputError;
using mhopf::Rational;

TEST_CASE("construction normalizes sign and gcd") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK_THROWS_AS(Rational(1, 0), InputError);
}

TEST_CASE("arithmetic is exact") {
  const Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(-a == Rational(-1, 3));
  CHECK_THROWS_AS(a / Rational(0), InputError);

  Rational big(1);
  for (int i = 0; i < 64; ++i) big *= Rational(10);
  CHECK((big - Rational(1)) + Rational(1) == big);
  CHECK(big / big == Rational(1));
}

TEST_CASE("predicates and ordering") {
  CHECK(Rational().is_zero());
  CHECK(Rational(1).is_one());
  CHECK(Rational(-3, 7).sign() == -1);
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1) <= Rational(-1));
  CHECK(Rational(5, 2) > Rational(2));
}

TEST_CASE("parse accepts integers and fractions") {
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-2") == Rational(-2));
  CHECK(Rational::parse("0") == Rational(0));
  CHECK(Rational::parse("-6/4") == Rational(-3, 2));
  CHECK_FALSE(Rational::parse("1/0").has_value());
  CHECK_FALSE(Rational::parse("").has_value());
  CHECK_FALSE(Rational::parse("one").has_value());
  CHECK_FALSE(Rational::parse("1.5").has_value());
  CHECK_THROWS_AS(Rational::parse_or_throw("x"), InputError);
}

TEST_CASE("str round-trips through parse") {
  for (const Rational& r : {Rational(3, 4), Rational(-7), Rational(0), Rational(22, 7)}) {
    CHECK(Rational::parse(r.str()) == r);
  }
  CHECK(Rational(1, 2).str() == "1/2");
  CHECK(Rational(-4, 2).str() == "-2");
  std::ostringstream os;
  os << Rational(-5, 3);
  CHECK(os.str() == "-5/3");
}
