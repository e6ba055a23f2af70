#include <catch2/catch_amalgamated.hpp>

#include "qknot/qseries.hpp"

using namespace qknot;

namespace {
const LaurentPoly one{Rational(1)};

LaurentPoly qp(int e) { return LaurentPoly::var("q", e); }

LaurentPoly parse_qpoly(std::initializer_list<std::pair<int, long>> terms) {
  LaurentPoly r;
  for (auto& [e, c] : terms) r += qp(e) * Rational(c);
  return r;
}
}  // namespace

TEST_CASE("q-factorial branches") {
  CHECK(q_pochhammer(1, 0) == RationalFunction(Rational(1)));
  // (q;q)_2 = (1-q)(1-q^2)
  CHECK(q_pochhammer(1, 2) == RationalFunction((one - qp(1)) * (one - qp(2))));
  // negative length without pole: (q^3;q)_{-2} = 1/((1-q^2)(1-q))
  CHECK(q_pochhammer(3, -2) ==
        RationalFunction(one, (one - qp(2)) * (one - qp(1))));
  // pole in the reciprocal branch
  CHECK_THROWS_AS(q_pochhammer(1, -1), std::domain_error);
  // the reciprocal-zero convention
  CHECK(inv_q_pochhammer(1, -1).is_zero());
  CHECK(inv_q_pochhammer(1, 2) == q_pochhammer(1, 2).inverse());
}

TEST_CASE("q-binomials") {
  CHECK(q_binomial(2, 1) == one + qp(1));
  CHECK(q_binomial(7, 0) == one);
  CHECK(q_binomial(3, -1).is_zero());
  CHECK(q_binomial(1, 2).is_zero());  // n > m >= 0 vanishes via (q^0;q) factor
  CHECK(q_binomial(4, 2) == parse_qpoly({{0, 1}, {1, 1}, {2, 2}, {3, 1}, {4, 1}}));
  // negative top argument: still a Laurent polynomial
  CHECK(q_binomial(-1, 1) == -qp(-1));
  CHECK(q_binomial(-1, 0) == one);
}

TEST_CASE("block coefficients") {
  CHECK(block_coeff(5, 0) == one);
  CHECK(block_coeff(1, 1).is_zero());   // k >= n
  CHECK(block_coeff(3, 4).is_zero());
  CHECK(block_coeff(2, 1) == parse_qpoly({{-1, 1}, {0, 1}, {1, 1}}));
  // integrality: only even u-powers survive the brace product
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k < n; ++k) CHECK_NOTHROW(block_coeff(n, k));
}

TEST_CASE("cyclotomic values: trivial knot and base cases") {
  CHECK(cyclotomic_twist(0, 0).value == one);
  for (int n = 1; n <= 6; ++n) CHECK(cyclotomic_twist(0, n).value.is_zero());
  for (int p = -3; p <= 3; ++p) CHECK(cyclotomic_twist(p, 0).value == one);
}

TEST_CASE("cyclotomic values: frozen small cases") {
  CHECK(cyclotomic_twist(1, 1).value == -qp(2));
  CHECK(cyclotomic_twist(1, 2).value == qp(5));
  CHECK(cyclotomic_twist(1, 3).value == -qp(9));
  CHECK(cyclotomic_twist(-1, 1).value == one);
  CHECK(cyclotomic_twist(-1, 3).value == one);
  CHECK(cyclotomic_twist(2, 1).value == parse_qpoly({{2, -1}, {4, -1}}));
  CHECK(cyclotomic_twist(2, 2).value == parse_qpoly({{5, 1}, {7, 1}, {8, 1}, {11, 1}}));
  CHECK(cyclotomic_twist(-2, 2).value == parse_qpoly({{0, 1}, {-2, 1}, {-3, 1}, {-6, 1}}));
  CHECK(cyclotomic_twist(-2, 3).value ==
        parse_qpoly({{0, 1}, {-2, 1}, {-3, 1}, {-4, 1}, {-6, 1}, {-7, 1}, {-8, 1}, {-12, 1}}));
}

TEST_CASE("integrality across the small grid") {
  for (int p = -5; p <= 5; ++p)
    for (int n = 0; n <= 8; ++n) CHECK_NOTHROW(cyclotomic_twist(p, n));
}

TEST_CASE("parity of the exponent form") {
  for (int n = 0; n <= 10; ++n)
    for (int k = 0; k <= n; ++k) {
      long a = static_cast<long>(n) * (n + 3);
      long b = static_cast<long>(k) * (k - 1);
      CHECK((a % 2 + 2) % 2 == 0);
      CHECK((b % 2 + 2) % 2 == 0);
    }
}

TEST_CASE("colored Jones") {
  for (int n = 1; n <= 5; ++n) CHECK(colored_jones_twist(0, n) == one);
  for (int p = -3; p <= 3; ++p) CHECK(colored_jones_twist(p, 1) == one);
  CHECK(colored_jones_twist(1, 2) == parse_qpoly({{0, 1}, {1, -1}, {2, -1}, {3, -1}}));
  CHECK_THROWS_AS(colored_jones_twist(1, 0), std::domain_error);
  // transform stays integral although C(n,k) lives over q^{1/2}
  for (int p = -3; p <= 3; ++p)
    for (int n = 1; n <= 5; ++n) CHECK_NOTHROW(colored_jones_twist(p, n));
}

TEST_CASE("q = 1 evaluation law") {
  for (int n = 0; n <= 6; ++n) {
    CHECK(eval_q1(0, n) == (n == 0 ? Rational(1) : Rational(0)));
    CHECK(eval_q1(1, n) == (n % 2 == 0 ? Rational(1) : Rational(-1)));
  }
  for (int p = -4; p <= 4; ++p)
    for (int n = 0; n <= 6; ++n) CHECK(eval_q1(p, n) == pow(Rational(-p), n));
}

TEST_CASE("Alexander polynomial") {
  CHECK(alexander_twist(0) == one);
  LaurentPoly M = LaurentPoly::var("M"), Mi = LaurentPoly::var("M", -1);
  CHECK(alexander_twist(1) == M - one + Mi);
  for (int p = -5; p <= 5; ++p) {
    // symmetry under M -> 1/M
    LaurentPoly d = alexander_twist(p);
    LaurentPoly sym;
    for (auto& [e, c] : d.terms()) {
      int ex = e.empty() ? 0 : e[0];
      sym += LaurentPoly::var("M", -ex) * c;
    }
    CHECK(d == sym);
  }
}

TEST_CASE("generating function identity") {
  CHECK(genfun_check(0, 5));
  CHECK(genfun_check(1, 6));
  CHECK(genfun_check(-3, 8));
  for (int p = -2; p <= 2; ++p) CHECK(genfun_check(p, 5));
}

TEST_CASE("cyclotomic sequence memoizes") {
  QSequence s = cyclotomic_sequence(2);
  CHECK(s.at(3) == s.at(3));
  CHECK(s.at(0) == RationalFunction(Rational(1)));
}
