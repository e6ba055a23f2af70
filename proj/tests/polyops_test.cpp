#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qknot/polyops.hpp"

using namespace qknot;

namespace {
const LaurentPoly Q = LaurentPoly::var("Q");
const LaurentPoly E = LaurentPoly::var("E");
const LaurentPoly q = LaurentPoly::var("q");
const LaurentPoly one{Rational(1)};

bool associate(const LaurentPoly& a, const LaurentPoly& b) {
  return a == b || a == -b;
}
}  // namespace

TEST_CASE("exact division") {
  LaurentPoly f = (Q + E) * (Q - E) * (Q + LaurentPoly(1));
  CHECK(exact_divide(f, Q + E) == (Q - E) * (Q + LaurentPoly(1)));
  CHECK_FALSE(try_divide(f, Q + LaurentPoly(2)).has_value());
  // Laurent units: monomials always divide
  CHECK(exact_divide(Q + one, Q) == one + LaurentPoly::var("Q", -1));
  CHECK_THROWS_AS(exact_divide(Q, LaurentPoly{}), std::domain_error);
}

TEST_CASE("gcd examples") {
  CHECK(associate(poly_gcd(one - q * q, one - q), one - q));
  LaurentPoly f = (Q - one) * (Q - one) * (Q + one);
  LaurentPoly g = (Q - one) * (Q + one) * (Q + one);
  CHECK(associate(poly_gcd(f, g), (Q - one) * (Q + one)));
  CHECK(poly_gcd(f, LaurentPoly{}) == f.primitive());
  CHECK(poly_gcd(LaurentPoly{}, LaurentPoly{}).is_zero());
  // monomial factors are retained
  CHECK(poly_gcd(Q.pow(3) * (one - Q), Q.pow(2)) == Q.pow(2));
}

TEST_CASE("gcd on multivariate inputs") {
  LaurentPoly h = Q * E + one;
  LaurentPoly f = h * (Q + E);
  LaurentPoly g = h * (Q - E) * (Q - E);
  CHECK(associate(poly_gcd(f, g), h));
  // coprime
  CHECK(poly_gcd(Q + one, E + one).is_constant());
}

TEST_CASE("gcd randomized: common factor recovered up to sign") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int i = 0; i < 25; ++i) {
    LaurentPoly h = Q * Rational(c(rng)) + E * Rational(c(rng)) + LaurentPoly(Rational(c(rng)));
    if (h.is_zero() || h.is_constant()) continue;
    LaurentPoly a = Q + LaurentPoly(Rational(c(rng)));
    LaurentPoly b = E + LaurentPoly(Rational(c(rng)));
    LaurentPoly g = poly_gcd(h * a, h * b);
    CHECK(divides(h.primitive(), g));
  }
}

TEST_CASE("resultant: linear case and convention") {
  LaurentPoly x = LaurentPoly::var("x");
  LaurentPoly a = LaurentPoly::var("a"), b = LaurentPoly::var("b");
  // det Sylvester([x-a],[x-b]) = a - b
  CHECK(resultant(x - a, x - b, "x") == a - b);
}

TEST_CASE("resultant: linear root evaluation") {
  LaurentPoly M = LaurentPoly::var("M");
  LaurentPoly f = M - Q;
  LaurentPoly g = E * M * Q - M * M * Q - Q + Q * Q * M + M;
  CHECK(resultant(f, g, "M") == E * Q * Q);
}

TEST_CASE("resultant: swap law") {
  LaurentPoly x = LaurentPoly::var("x");
  LaurentPoly f = x * x * Q + x + one;         // deg 2
  LaurentPoly g = x * (Q + one) - Q;           // deg 1
  LaurentPoly rfg = resultant(f, g, "x");
  LaurentPoly rgf = resultant(g, f, "x");
  // sign (-1)^(deg f * deg g) = (-1)^2 = +1
  CHECK(rfg == rgf);
  LaurentPoly h = x - Q;
  CHECK(resultant(h, g, "x") == -resultant(g, h, "x"));
}

TEST_CASE("resultant zero iff common factor in x") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> c(-3, 3);
  LaurentPoly x = LaurentPoly::var("x");
  for (int i = 0; i < 20; ++i) {
    LaurentPoly common = x + Q * Rational(c(rng));
    LaurentPoly f = common * (x + LaurentPoly(Rational(c(rng))));
    LaurentPoly g = common * (x * Rational(c(rng)) + Q);
    CHECK(resultant(f, g, "x").is_zero());
    LaurentPoly f2 = x + one;
    LaurentPoly g2 = x * x + Q;
    CHECK_FALSE(resultant(f2, g2, "x").is_zero());
  }
  CHECK_THROWS_AS(resultant(Q, Q + one, "x"), std::domain_error);
}

TEST_CASE("resultant clears Laurent content in the main variable") {
  LaurentPoly x = LaurentPoly::var("x");
  LaurentPoly f = x - Q;  // after clearing x^-1 from x^-1 f the same
  CHECK(resultant(f.shifted("x", -1) * LaurentPoly::var("x", 1), x + one, "x") ==
        resultant(f, x + one, "x"));
}

TEST_CASE("radical") {
  LaurentPoly h = one + Q * E;
  CHECK(radical(h * h) == h);
  CHECK(associate(radical(Q.pow(3) * (one - Q)), Q * (one - Q)));
  CHECK(radical(LaurentPoly(Rational(17))) == one);
  CHECK_THROWS_AS(radical(LaurentPoly{}), std::domain_error);
  // Laurent input: unit monomial stripped first
  CHECK(associate(radical((one - Q).shifted("Q", -2)), one - Q));
}

TEST_CASE("radical divisibility property") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> c(1, 3);
  for (int i = 0; i < 15; ++i) {
    LaurentPoly f = (Q + LaurentPoly(Rational(c(rng)))).pow(c(rng));
    LaurentPoly g = (Q * E + LaurentPoly(Rational(c(rng)))).pow(c(rng));
    CHECK(divides(radical(f * g), radical(f) * radical(g)));
    LaurentPoly cp1 = Q + one, cp2 = E + one;
    CHECK(associate(radical(cp1 * cp1 * cp2), cp1 * cp2));
  }
}
