#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qknot/weyl.hpp"

using namespace qknot;

namespace {
const LaurentPoly Q = LaurentPoly::var("Q");
const LaurentPoly E = LaurentPoly::var("E");
const LaurentPoly q = LaurentPoly::var("q");
const LaurentPoly one{Rational(1)};

WeylOp random_op(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(0, 2), c(-3, 3), e(0, 2);
  std::map<int, RationalFunction> m;
  int d = deg(rng);
  for (int j = 0; j <= d; ++j) {
    LaurentPoly num = Q * Rational(c(rng)) + LaurentPoly(Rational(c(rng)));
    LaurentPoly den = Q.pow(e(rng)) * Rational(1) + one;
    if (!num.is_zero()) m[j] = RationalFunction(num, den);
  }
  return WeylOp(std::move(m));
}
}  // namespace

TEST_CASE("commutation relation E Q = q Q E") {
  WeylOp lhs = WeylOp::shift() * WeylOp::q_power();
  WeylOp rhs = RationalFunction(q * Q) * WeylOp::shift();
  CHECK(lhs == rhs);
}

TEST_CASE("localized twist on rational coefficients") {
  RationalFunction alpha(one, one - Q);
  WeylOp lhs = WeylOp::shift() * WeylOp(alpha);
  WeylOp want = RationalFunction(one, one - q * Q) * WeylOp::shift();
  CHECK(lhs == want);
}

TEST_CASE("identity and degree law") {
  std::mt19937 rng(99);
  WeylOp id{RationalFunction(Rational(1))};
  for (int i = 0; i < 30; ++i) {
    WeylOp a = random_op(rng), b = random_op(rng);
    CHECK(id * a == a);
    CHECK(a * id == a);
    if (!a.is_zero() && !b.is_zero())
      CHECK((a * b).e_degree() == a.e_degree() + b.e_degree());
  }
}

TEST_CASE("associativity and distributivity") {
  std::mt19937 rng(2024);
  for (int i = 0; i < 20; ++i) {
    WeylOp a = random_op(rng), b = random_op(rng), c = random_op(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("application to sequences") {
  QSequence ones = QSequence::ones();
  WeylOp em1 = WeylOp::shift() - WeylOp(RationalFunction(Rational(1)));
  for (int n = 0; n < 6; ++n) CHECK(em1.apply(ones, n).is_zero());

  // (Q f)(n) = q^n f(n)
  WeylOp qop = WeylOp::q_power();
  CHECK(qop.apply(ones, 3) == RationalFunction(LaurentPoly::var("q", 3)));

  // operator composition agrees with sequential application
  std::mt19937 rng(7);
  QSequence f([](int n) { return RationalFunction(LaurentPoly::var("q", n * n % 5)); });
  for (int i = 0; i < 10; ++i) {
    WeylOp a = random_op(rng), b = random_op(rng);
    QSequence bf([b, f](int n) { return b.apply(f, n); });
    for (int n = 0; n < 4; ++n) CHECK((a * b).apply(f, n) == a.apply(bf, n));
  }
}

TEST_CASE("pole detection in application") {
  // coefficient 1/(Q - q^2) blows up at n = 2
  WeylOp p{RationalFunction(one, Q - LaurentPoly::var("q", 2))};
  CHECK_NOTHROW(p.apply(QSequence::ones(), 1));
  CHECK_THROWS_AS(p.apply(QSequence::ones(), 2), std::domain_error);
}

TEST_CASE("op_reverse") {
  CHECK(op_reverse(Q + E) == one + Q * E);
  CHECK(op_reverse(E) == one);
  // involution on polynomials with nonzero constant E-term
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> c(1, 4);
  for (int i = 0; i < 20; ++i) {
    LaurentPoly p = LaurentPoly(Rational(c(rng))) + Q * E * Rational(c(rng)) +
                    E * E * Rational(c(rng)) + LaurentPoly::var("Q", -1) * Rational(c(rng));
    CHECK(op_reverse(op_reverse(p)) == p);
    CHECK(op_reverse(p).degree("E") == p.degree("E"));
  }
  CHECK_THROWS_AS(op_reverse(LaurentPoly::var("E", -1)), std::domain_error);
}

TEST_CASE("specialize") {
  // E + q^2 Q at q -> 1 gives E + Q
  WeylOp c1 = WeylOp::from_poly(E + LaurentPoly::var("q", 2) * Q);
  CHECK(c1.specialize("q").as_poly() == E + Q);
  // identity specializes to 1
  WeylOp id{RationalFunction(Rational(1))};
  CHECK(id.specialize("q").as_poly() == one);
  CHECK(id.specialize("Q").as_poly() == one);
  // pole: coefficient 1/(1-Q) at Q -> 1
  WeylOp bad{RationalFunction(one, one - Q)};
  CHECK_THROWS_AS(bad.specialize("Q"), std::domain_error);
}

TEST_CASE("sequence cache is deterministic") {
  int calls = 0;
  QSequence f([&calls](int n) {
    ++calls;
    return RationalFunction(LaurentPoly::var("q", n));
  });
  auto a = f.at(5);
  auto b = f.at(5);
  CHECK(a == b);
  CHECK(calls == 1);
  CHECK_THROWS_AS(f.at(-1), std::domain_error);
}
