#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qknot/weyl.hpp"

namespace qknot {

/// Quantum factorial (q^a; q)_n with the unbalanced three-branch definition.
/// For n < 0 the value is the reciprocal of a finite product; if that product
/// contains a vanishing factor the value is a pole and this throws. See
/// inv_q_pochhammer for the reciprocal-zero convention.
inline RationalFunction q_pochhammer(int a, int n) {
  const LaurentPoly one{Rational(1)};
  if (n == 0) return RationalFunction(Rational(1));
  if (n > 0) {
    LaurentPoly r = one;
    for (int j = 0; j < n; ++j) r *= one - LaurentPoly::var(kBaseVar, a + j);
    return RationalFunction(r);
  }
  LaurentPoly r = one;
  for (int j = 1; j <= -n; ++j) {
    if (a - j == 0)
      throw std::domain_error("q_pochhammer: zero factor in reciprocal branch (a=" +
                              std::to_string(a) + ", n=" + std::to_string(n) + ")");
    r *= one - LaurentPoly::var(kBaseVar, a - j);
  }
  return RationalFunction(one, r);
}

/// 1 / (q^a; q)_n, with the convention that a pole of the factorial makes the
/// reciprocal exactly 0 (this is what truncates the cyclotomic sum).
inline RationalFunction inv_q_pochhammer(int a, int n) {
  if (n >= 0) return q_pochhammer(a, n).inverse();
  LaurentPoly r{Rational(1)};
  const LaurentPoly one{Rational(1)};
  for (int j = 1; j <= -n; ++j) {
    if (a - j == 0) return RationalFunction();  // reciprocal of a pole
    r *= one - LaurentPoly::var(kBaseVar, a - j);
  }
  return RationalFunction(r);
}

/// Gaussian binomial [m over n]_q = (q^{m-n+1};q)_n / (q;q)_n for n >= 0,
/// 0 otherwise. A Laurent polynomial for every integer m.
inline LaurentPoly q_binomial(int m, int n) {
  if (n < 0) return {};
  if (n == 0) return LaurentPoly(Rational(1));
  RationalFunction v = q_pochhammer(m - n + 1, n) / q_pochhammer(1, n);
  return v.as_poly();
}

namespace qdense {

/// Dense univariate Laurent polynomial in q: value = sum c[i] q^{off+i}.
/// The workhorse behind the cyclotomic summation, where the sparse map
/// representation would be needlessly slow.
struct DenseQ {
  int off = 0;
  std::vector<Rational> c;  // c.front() and c.back() nonzero unless empty

  static DenseQ one() { return DenseQ{0, {Rational(1)}}; }
  bool is_zero() const { return c.empty(); }

  void trim() {
    std::size_t lead = c.size();
    while (lead > 0 && c[lead - 1].is_zero()) --lead;
    c.resize(lead);
    std::size_t low = 0;
    while (low < c.size() && c[low].is_zero()) ++low;
    if (low) {
      c.erase(c.begin(), c.begin() + static_cast<long>(low));
      off += static_cast<int>(low);
    }
    if (c.empty()) off = 0;
  }

  /// *this *= (1 - q^j), j >= 1.
  void mul_binomial(int j) {
    if (is_zero()) return;
    std::vector<Rational> r(c.size() + j);
    for (std::size_t i = 0; i < c.size(); ++i) r[i] = c[i];
    for (std::size_t i = 0; i < c.size(); ++i) r[i + j] -= c[i];
    c = std::move(r);
    trim();
  }

  /// *this /= (1 - q^j); throws when not exactly divisible.
  void div_binomial(int j) {
    if (is_zero()) return;
    if (static_cast<std::size_t>(j) >= c.size())
      throw std::domain_error("DenseQ: not divisible by 1-q^" + std::to_string(j));
    // g_i = f_i + g_{i-j} solves f = g - q^j g
    std::vector<Rational> g(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      g[i] = c[i];
      if (i >= static_cast<std::size_t>(j)) g[i] += g[i - j];
    }
    for (std::size_t i = c.size() - j; i < c.size(); ++i)
      if (!g[i].is_zero())
        throw std::domain_error("DenseQ: not divisible by 1-q^" + std::to_string(j));
    g.resize(c.size() - j);
    c = std::move(g);
    trim();
  }

  void scale(const Rational& s) {
    if (s.is_zero()) { c.clear(); off = 0; return; }
    for (auto& x : c) x *= s;
  }

  /// acc += s * q^shift * this
  void add_scaled_into(DenseQ& acc, const Rational& s, int shift) const {
    if (is_zero() || s.is_zero()) return;
    int lo = off + shift;
    int hi = lo + static_cast<int>(c.size());
    if (acc.is_zero()) {
      acc.off = lo;
      acc.c.assign(c.size(), Rational(0));
    }
    int new_lo = std::min(acc.off, lo);
    int new_hi = std::max(acc.off + static_cast<int>(acc.c.size()), hi);
    if (new_lo != acc.off || new_hi != acc.off + static_cast<int>(acc.c.size())) {
      std::vector<Rational> r(new_hi - new_lo);
      for (std::size_t i = 0; i < acc.c.size(); ++i) r[acc.off - new_lo + i] = acc.c[i];
      acc.c = std::move(r);
      acc.off = new_lo;
    }
    for (std::size_t i = 0; i < c.size(); ++i) acc.c[lo - acc.off + i] += c[i] * s;
    acc.trim();
  }

  LaurentPoly to_laurent() const {
    std::vector<std::pair<ExpVec, Rational>> terms;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (!c[i].is_zero()) terms.push_back({{off + static_cast<int>(i)}, c[i]});
    return LaurentPoly::from_terms({kBaseVar}, std::move(terms));
  }
};

}  // namespace qdense

/// A computed cyclotomic value of a twist knot: an integral Laurent
/// polynomial in q.
struct CyclotomicValue {
  int p = 0;
  int n = 0;
  LaurentPoly value;
};

/// Cyclotomic function of the twist knot K_p at color n, by direct summation
/// over k = 0..n (the reciprocal-zero convention kills every k > n summand).
/// The summands are proper rational functions with poles at q = 1; only the
/// full sum collapses to an integral Laurent polynomial, which is verified.
inline CyclotomicValue cyclotomic_twist(int p, int n) {
  using qdense::DenseQ;
  if (n < 0) throw std::domain_error("cyclotomic_twist: negative color");

  // summand_k = sigma q^{e_k} (q^{2k+1}-1) (q;q)_n / ((q;q)_{n+k+1}(q;q)_{n-k})
  // over the common denominator D = (q;q)_{2n+1} (q;q)_n the k-th numerator is
  //   sigma q^{e_k} (q^{2k+1}-1) T_k,
  //   T_k = (q;q)_n * prod_{j=n+k+2}^{2n+1}(1-q^j) * prod_{j=n-k+1}^{n}(1-q^j)
  // maintained incrementally: T_k = T_{k-1} * (1-q^{n-k+1}) / (1-q^{n+k+1}).
  DenseQ T = DenseQ::one();
  for (int j = 1; j <= n; ++j) T.mul_binomial(j);              // (q;q)_n
  for (int j = n + 2; j <= 2 * n + 1; ++j) T.mul_binomial(j);  // A_0

  DenseQ acc;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) {
      T.mul_binomial(n - k + 1);
      T.div_binomial(n + k + 1);
    }
    long e = static_cast<long>(n) * (n + 3) / 2 + static_cast<long>(p) * k * (k + 1) +
             static_cast<long>(k) * (k - 1) / 2;
    Rational sigma((n + k + 1) % 2 == 0 ? 1 : -1);
    // (q^{2k+1} - 1) * q^e * sigma * T
    T.add_scaled_into(acc, sigma, static_cast<int>(e) + 2 * k + 1);
    T.add_scaled_into(acc, -sigma, static_cast<int>(e));
  }

  for (int j = 1; j <= 2 * n + 1; ++j) acc.div_binomial(j);
  for (int j = 1; j <= n; ++j) acc.div_binomial(j);

  for (auto& x : acc.c)
    if (!x.is_integer())
      throw std::domain_error("cyclotomic_twist: value not in Z[q^{+-}] at p=" +
                              std::to_string(p) + ", n=" + std::to_string(n));
  return {p, n, acc.to_laurent()};
}

/// The cyclotomic function as a memoized sequence over Q(q).
inline QSequence cyclotomic_sequence(int p) {
  return QSequence([p](int n) { return RationalFunction(cyclotomic_twist(p, n).value); });
}

/// Block coefficient C(n,k): the product of the 2k braces
/// {n-k}...{n-1}{n+1}...{n+k}, computed over u = q^{1/2} and folded back to
/// integral q powers. Zero whenever a brace index vanishes (k >= n).
inline LaurentPoly block_coeff(int n, int k) {
  if (k < 0) return {};
  if (k == 0) return LaurentPoly(Rational(1));
  auto brace = [](int a) -> LaurentPoly {
    // {a} = (u^a - u^-a)/(u - u^-1) = sign(a) * sum_t u^{|a|-1-2t}
    if (a == 0) return {};
    int m = a > 0 ? a : -a;
    LaurentPoly r;
    for (int t = 0; t < m; ++t) r += LaurentPoly::var("u", m - 1 - 2 * t);
    return a > 0 ? r : -r;
  };
  LaurentPoly prod{Rational(1)};
  for (int a = n - k; a <= n - 1; ++a) {
    prod *= brace(a);
    if (prod.is_zero()) return {};
  }
  for (int a = n + 1; a <= n + k; ++a) prod *= brace(a);
  return prod.rename_scaled("u", kBaseVar, 2);
}

/// Colored Jones function of the twist knot K_p for color n >= 1:
/// J_p(n) = sum_{k=0}^{n-1} C(n,k) Jhat_p(k), an element of Z[q^{+-}].
inline LaurentPoly colored_jones_twist(int p, int n) {
  if (n < 1) throw std::domain_error("colored_jones_twist: color must be >= 1");
  LaurentPoly r;
  for (int k = 0; k <= n - 1; ++k) {
    LaurentPoly c = block_coeff(n, k);
    if (c.is_zero()) continue;
    r += c * cyclotomic_twist(p, k).value;
  }
  return r;
}

/// Evaluation of the cyclotomic value at q = 1 (on the summed polynomial;
/// the individual summands have poles there).
inline Rational eval_q1(int p, int n) {
  return cyclotomic_twist(p, n).value.eval_var(kBaseVar, Rational(1)).constant_value();
}

/// Alexander polynomial of the twist knot K_p: 1 + p(M + M^{-1} - 2).
inline LaurentPoly alexander_twist(int p) {
  LaurentPoly M = LaurentPoly::var("M");
  LaurentPoly Minv = LaurentPoly::var("M", -1);
  return LaurentPoly(Rational(1)) + (M + Minv - LaurentPoly(Rational(2))) * Rational(p);
}

/// Generating-function identity at q = 1: with z = M - 2 + M^{-1},
/// Delta_p(M) * sum_{n<=N} I_p(n) z^n = 1 (mod z^{N+1}) in Z[M^{+-}].
inline bool genfun_check(int p, int N) {
  LaurentPoly z = LaurentPoly::var("M") + LaurentPoly::var("M", -1) - LaurentPoly(Rational(2));
  LaurentPoly sum;
  LaurentPoly zn{Rational(1)};
  for (int n = 0; n <= N; ++n) {
    sum += zn * eval_q1(p, n);
    zn *= z;
  }
  LaurentPoly g = alexander_twist(p) * sum - LaurentPoly(Rational(1));
  return try_divide(g, zn).has_value();  // zn = z^{N+1} here
}

}  // namespace qknot
