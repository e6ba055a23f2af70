#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qknot/laurent.hpp"

using qknot::LaurentPoly;
using qknot::Rational;

namespace {
const LaurentPoly Q = LaurentPoly::var("Q");
const LaurentPoly E = LaurentPoly::var("E");
const LaurentPoly q = LaurentPoly::var("q");

LaurentPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(0, 4), expo(-2, 3), coef(-5, 5);
  LaurentPoly p;
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    LaurentPoly term{Rational(coef(rng))};
    term = term * LaurentPoly::var("Q", expo(rng));
    term = term * LaurentPoly::var("E", expo(rng));
    p += term;
  }
  return p;
}
}  // namespace

TEST_CASE("basic arithmetic matches hand results") {
  CHECK((Q + E) + (LaurentPoly(-1) + E) == Q - LaurentPoly(1) + E * LaurentPoly(2));
  CHECK((LaurentPoly(1) - q) * (LaurentPoly(1) + q) == LaurentPoly(1) - q * q);
  CHECK(LaurentPoly::var("Q", 2) * LaurentPoly::var("Q", -2) == LaurentPoly(1));
}

TEST_CASE("variable contexts merge by name") {
  LaurentPoly a = Q + LaurentPoly(1);
  LaurentPoly b = E + LaurentPoly(1);
  LaurentPoly p = a * b;
  CHECK(p.vars() == std::vector<std::string>{"E", "Q"});
  CHECK(p.degree("Q") == 1);
  CHECK(p.degree("E") == 1);
  CHECK(p.term_count() == 4);
}

TEST_CASE("unused variables are pruned") {
  LaurentPoly p = (Q + E) - E;
  CHECK(p.vars() == std::vector<std::string>{"Q"});
  CHECK(p == Q);
  LaurentPoly z = (Q + E) - (Q + E);
  CHECK(z.is_zero());
  CHECK(z.vars().empty());
}

TEST_CASE("ring laws on random polynomials") {
  std::mt19937 rng(20240817);
  for (int i = 0; i < 60; ++i) {
    LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("degrees and exponents") {
  LaurentPoly p = Q * Q + E * LaurentPoly::var("Q", -3);
  CHECK(p.degree("Q") == 2);
  CHECK(p.min_exponent("Q") == -3);
  CHECK(p.total_degree() == 2);
  CHECK_FALSE(p.is_polynomial());
  CHECK(p.monic_shift().is_polynomial());
}

TEST_CASE("derivative, eval, substitutions") {
  LaurentPoly p = Q * Q * Rational(3) + Q + LaurentPoly(5);
  CHECK(p.derivative("Q") == Q * Rational(6) + LaurentPoly(1));
  CHECK(p.eval_var("Q", Rational(2)) == LaurentPoly(Rational(19)));
  CHECK_THROWS_AS(LaurentPoly::var("Q", -1).eval_var("Q", Rational(0)), std::domain_error);

  // Q -> q^3
  LaurentPoly s = (Q * E).subst_monomial("Q", Rational(1), "q", 3);
  CHECK(s == E * LaurentPoly::var("q", 3));
  // Q -> qQ
  LaurentPoly t = Q.subst_monomial("Q", Rational(1), "q", 1) * Q;
  CHECK(t.degree("q") == 1);
}

TEST_CASE("rename with exponent scaling") {
  LaurentPoly u2 = LaurentPoly::var("u", 2) + LaurentPoly::var("u", -4);
  CHECK(u2.rename_scaled("u", "q", 2) == q + LaurentPoly::var("q", -2));
  CHECK_THROWS_AS((LaurentPoly::var("u", 3)).rename_scaled("u", "q", 2), std::domain_error);
}

TEST_CASE("content and primitive") {
  LaurentPoly p = Q * Rational(4) + LaurentPoly(6);
  CHECK(p.content() == Rational(2));
  CHECK(p.primitive() == Q * Rational(2) + LaurentPoly(3));
  LaurentPoly m = -Q;
  CHECK(m.primitive() == Q);  // positive leading coefficient
  LaurentPoly half = Q * Rational(1, 2) + LaurentPoly(Rational(3, 2));
  CHECK(half.primitive() == Q + LaurentPoly(3));
}

TEST_CASE("string form is deterministic") {
  LaurentPoly p = Q * Q - E + LaurentPoly(1) - LaurentPoly::var("Q", -1);
  CHECK(p.to_string() == "-E + Q^2 + 1 - Q^-1");
  CHECK(LaurentPoly{}.to_string() == "0");
}
