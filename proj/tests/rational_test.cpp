#include <catch2/catch_amalgamated.hpp>

#include "qknot/rational.hpp"

using qknot::Rational;

TEST_CASE("construction normalizes") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0).is_zero());
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("arithmetic") {
  Rational a(1, 2), b(1, 3);
  CHECK(a + b == Rational(5, 6));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 6));
  CHECK(a / b == Rational(3, 2));
  CHECK(-a == Rational(-1, 2));
  CHECK_THROWS_AS(a / Rational(0), std::domain_error);
  CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(pow(Rational(5), 0) == Rational(1));
}

TEST_CASE("string round trip") {
  CHECK(Rational::from_string("-3/6") == Rational(-1, 2));
  CHECK(Rational::from_string("42") == Rational(42));
  CHECK(Rational(-1, 2).to_string() == "-1/2");
  CHECK(Rational(7).to_string() == "7");
  CHECK_THROWS_AS(Rational::from_string("x"), std::domain_error);
  CHECK_THROWS_AS(Rational::from_string("1/0"), std::domain_error);
}

TEST_CASE("big values stay exact") {
  Rational big = Rational::from_string("123456789012345678901234567890");
  CHECK(big * Rational(2) - big == big);
  CHECK((big / Rational(3)) * Rational(3) == big);
}

TEST_CASE("content gcd") {
  CHECK(Rational::content_gcd(Rational(4), Rational(6)) == Rational(2));
  CHECK(Rational::content_gcd(Rational(0), Rational(-6)) == Rational(6));
  CHECK(Rational::content_gcd(Rational(1, 2), Rational(1, 3)) == Rational(1, 6));
}
