#include "doctest.h"

#include "dltl/errors.hpp"
#include "dltl/rational.hpp"

using dltl::Rational;

TEST_CASE("rational parsing accepts integers and fractions") {
  auto half = Rational::parse("1/2");
  REQUIRE(half.has_value());
  CHECK(*half == Rational(1, 2));

  auto three = Rational::parse("3");
  REQUIRE(three.has_value());
  CHECK(*three == Rational(3));

  auto neg = Rational::parse("-2/6");
  REQUIRE(neg.has_value());
  CHECK(*neg == Rational(-1, 3));
  CHECK(neg->str() == "-1/3");
}

TEST_CASE("rational parsing rejects malformed input") {
  CHECK(!Rational::parse("").has_value());
  CHECK(!Rational::parse("1/").has_value());
  CHECK(!Rational::parse("/2").has_value());
  CHECK(!Rational::parse("1/0").has_value());
  CHECK(!Rational::parse("a/b").has_value());
  CHECK(!Rational::parse("1.5").has_value());
  CHECK(!Rational::parse("1 / 2").has_value());
  CHECK(!Rational::parse("1/2/3").has_value());
}

TEST_CASE("rational arithmetic is exact and canonical") {
  Rational a(1, 3);
  Rational b(1, 6);
  CHECK((a + b) == Rational(1, 2));
  CHECK((a - b) == Rational(1, 6));
  CHECK((a * b) == Rational(1, 18));
  CHECK((a / b) == Rational(2));
  CHECK((-a).str() == "-1/3");

  // Denominator normalization: 2/4 and 1/2 are the same value and same text.
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(3, -6).str() == "-1/2");
}

TEST_CASE("rational comparisons order by value") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(1, 2) <= Rational(2, 4));
  CHECK(Rational(5, 8) > Rational(1, 2));
  CHECK(Rational(0) >= Rational(0));
  CHECK(Rational(1, 3) != Rational(1, 4));
}

TEST_CASE("rational powers stay exact for large exponents") {
  Rational half(1, 2);
  CHECK(half.pow(0) == Rational(1));
  CHECK(half.pow(3) == Rational(1, 8));
  // 2^-40 has a 13-digit denominator; exactness matters for deep unfoldings.
  CHECK(half.pow(40) == Rational(1) / Rational(1099511627776L));
  CHECK(Rational(3, 4).pow(5) == Rational(243, 1024));
}

TEST_CASE("rational unit-interval helpers") {
  CHECK(Rational(0).in_unit_interval());
  CHECK(Rational(1).in_unit_interval());
  CHECK(Rational(17, 32).in_unit_interval());
  CHECK(!Rational(-1, 2).in_unit_interval());
  CHECK(!Rational(3, 2).in_unit_interval());
  CHECK(Rational(0).is_zero());
  CHECK(Rational(2, 2).is_one());
}

TEST_CASE("rational division by zero throws") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), dltl::ModelError);
}

TEST_CASE("rational min max and hashing") {
  CHECK(dltl::min(Rational(1, 3), Rational(1, 2)) == Rational(1, 3));
  CHECK(dltl::max(Rational(1, 3), Rational(1, 2)) == Rational(1, 2));
  // Equal values hash equally regardless of how they were built.
  CHECK(Rational(2, 4).hash() == Rational(1, 2).hash());
}
