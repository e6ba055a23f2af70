#pragma once

#include <cctype>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "qknot/qseries.hpp"
#include "qknot/weyl.hpp"

namespace qknot {

/// Integer binomial, generalized to negative tops by the falling-factorial
/// product; zero for negative bottoms.
inline Rational int_binomial(long m, long r) {
  if (r < 0) return Rational(0);
  Rational v(1);
  for (long t = 1; t <= r; ++t) v *= Rational(m - t + 1, t);
  return v;
}

/// Non-commutative C-polynomial of the twist knot K_p: monic of E-degree |p|
/// with coefficients in Z[Q^{+-}, q^{+-}].
struct CPolyNC {
  int p = 0;
  WeylOp op;
};

/// Commutative C-polynomial: monic in E of degree |p| over Z[Q^{+-}].
struct CPolyC {
  int p = 0;
  LaurentPoly poly;  // in (E, Q)
};

/// E^i coefficient of the non-commutative C-polynomial, built symbolically
/// through the q^n -> Q rewriting. Every quantum binomial in the closed form
/// has arguments constant in n; the n-dependence enters only through explicit
/// q-powers and the factorial ratio, both of which rewrite exactly:
///   q^{(p-i)(n+p+1)}            -> Q^{p-i} q^{(p-i)(p+1)}
///   (q;q)_{n+p-1}/(q;q)_{n+i}   -> prod_{j=i+1}^{p-1} (1 - q^j Q)
///   q^{(2n+p+i+1)j}             -> Q^{2j} q^{(p+i+1)j}
/// and analogously on the negative branch.
inline LaurentPoly nc_cpoly_coeff(int p, int i) {
  const LaurentPoly one{Rational(1)};
  const LaurentPoly Q = LaurentPoly::var(kQPowerVar);
  auto qpow = [](long e) { return LaurentPoly::var(kBaseVar, static_cast<int>(e)); };
  auto Qpow = [](long e) { return LaurentPoly::var(kQPowerVar, static_cast<int>(e)); };

  if (p == 0) return {};
  if (p > 0) {
    LaurentPoly pref = Qpow(p - i) * qpow(static_cast<long>(p - i) * (p + 1));
    LaurentPoly fac = one;
    for (int j = i + 1; j <= p - 1; ++j) fac *= one - qpow(j) * Q;
    LaurentPoly s1, s2;
    for (int j = 0; j <= i; ++j)
      s1 += Qpow(2 * j) * qpow(static_cast<long>(p + i + 1) * j) *
            (q_binomial(p - j, p - i) * q_binomial(p - i + j - 1, j));
    for (int j = 0; j <= i - 1; ++j)
      s2 += Qpow(2 * j + 1) * qpow(static_cast<long>(p + i + 1) * j + p) *
            (q_binomial(p - j - 1, p - i) * q_binomial(p - i + j - 1, j));
    return pref * fac * (s1 - s2);
  }
  LaurentPoly pref = Qpow(p - i + 1) * qpow(static_cast<long>(-p) * (p - i + 1));
  LaurentPoly fac = one;
  for (int j = i + 1; j <= -p - 1; ++j) fac *= one - qpow(j) * Q;
  LaurentPoly s1, s2;
  for (int j = 0; j <= i; ++j)
    s1 += Qpow(2 * j) * qpow(static_cast<long>(i - p) * j) *
          (q_binomial(-p - j - 1, i - j) * q_binomial(-p - i + j, j));
  for (int j = 0; j <= i - 1; ++j)
    s2 += Qpow(2 * j + 1) * qpow(static_cast<long>(i - p) * j - p) *
          (q_binomial(-p - j - 2, i - j - 1) * q_binomial(-p - i + j, j));
  return pref * fac * (-s1 + s2);
}

inline CPolyNC nc_cpoly(int p) {
  std::map<int, RationalFunction> coeffs;
  coeffs[std::abs(p)] = RationalFunction(Rational(1));
  for (int i = 0; i < std::abs(p); ++i) {
    LaurentPoly c = nc_cpoly_coeff(p, i);
    if (!c.is_zero()) coeffs[i] = RationalFunction(c);
  }
  return {p, WeylOp(std::move(coeffs))};
}

/// E^i coefficient of the commutative C-polynomial (binomial closed form).
inline LaurentPoly cpoly_closed_coeff(int p, int i) {
  const LaurentPoly one{Rational(1)};
  const LaurentPoly Q = LaurentPoly::var(kQPowerVar);
  auto Qpow = [](long e) { return LaurentPoly::var(kQPowerVar, static_cast<int>(e)); };
  if (p == 0) return {};
  if (p > 0) {
    LaurentPoly pref = Qpow(p - i) * (one - Q).pow(p - i - 1);
    LaurentPoly s1, s2;
    for (int j = 0; j <= i; ++j)
      s1 += Qpow(2 * j) * (int_binomial(p - j, p - i) * int_binomial(p - i + j - 1, j));
    for (int j = 0; j <= i - 1; ++j)
      s2 += Qpow(2 * j + 1) * (int_binomial(p - j - 1, p - i) * int_binomial(p - i + j - 1, j));
    return pref * (s1 - s2);
  }
  LaurentPoly pref = Qpow(p - i + 1) * (one - Q).pow(-p - i - 1);
  LaurentPoly s1, s2;
  for (int j = 0; j <= i; ++j)
    s1 += Qpow(2 * j) * (int_binomial(-p - j - 1, i - j) * int_binomial(-p - i + j, j));
  for (int j = 0; j <= i - 1; ++j)
    s2 += Qpow(2 * j + 1) * (int_binomial(-p - j - 2, i - j - 1) * int_binomial(-p - i + j, j));
  return pref * (-s1 + s2);
}

inline CPolyC cpoly_closed(int p) {
  LaurentPoly r = LaurentPoly::var(kShiftVar, std::abs(p));
  for (int i = 0; i < std::abs(p); ++i)
    r += cpoly_closed_coeff(p, i).shifted(kShiftVar, i);
  return {p, r};
}

/// Commutative C-polynomial generated by the 3-term relations from the base
/// cases C_0 = 1, C_1 = Q + E, C_{-1} = -1 + E.
inline CPolyC cpoly_recursive(int p) {
  const LaurentPoly one{Rational(1)};
  const LaurentPoly Q = LaurentPoly::var(kQPowerVar);
  const LaurentPoly E = LaurentPoly::var(kShiftVar);
  const LaurentPoly bracket = Q - Q * Q + E + Q * Q * E;
  if (p == 0) return {0, one};
  if (p > 0) {
    LaurentPoly prev = one, cur = Q + E;
    for (int k = 1; k < p; ++k) {
      LaurentPoly next = bracket * cur - Q * Q * E * E * prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    return {p, cur};
  }
  const LaurentPoly Qm2 = LaurentPoly::var(kQPowerVar, -2);
  LaurentPoly prev = one, cur = -one + E;
  for (int k = 1; k < -p; ++k) {
    LaurentPoly next = bracket * Qm2 * cur - E * E * Qm2 * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return {p, cur};
}

/// Backward-shift form D_p = C_p^op, i.e. E-coefficients reversed.
inline CPolyC backward_form(int p) { return {p, op_reverse(cpoly_closed(p).poly)}; }

/// The i-th backward-recursion coefficient of the non-commutative operator,
/// as a Laurent polynomial in (q, Q): the recursion reads
/// value(n) + sum_{i=1}^{|p|} a'_p(n,i) value(n-i) = 0 for n >= |p|.
/// The factorial ratio (q;q)_{n-1}/(q;q)_{n-i} rewrites to
/// prod_{j=1}^{i-1} (1 - q^{-j} Q), valid wherever n >= i.
inline LaurentPoly nc_backward_coeff(int p, int i) {
  if (i < 1 || i > std::abs(p))
    throw std::domain_error("nc_backward_coeff: index out of range");
  const LaurentPoly one{Rational(1)};
  const LaurentPoly Q = LaurentPoly::var(kQPowerVar);
  auto qpow = [](long e) { return LaurentPoly::var(kBaseVar, static_cast<int>(e)); };
  auto Qpow = [](long e) { return LaurentPoly::var(kQPowerVar, static_cast<int>(e)); };
  LaurentPoly fac = one;
  for (int j = 1; j <= i - 1; ++j) fac *= one - qpow(-j) * Q;
  if (p > 0) {
    LaurentPoly s1, s2;
    for (int j = 0; j <= p - i; ++j)
      s1 += Qpow(2 * j) * qpow(static_cast<long>(1 - i) * j) *
            (q_binomial(p - j, i) * q_binomial(i + j - 1, j));
    for (int j = 0; j <= p - i - 1; ++j)
      s2 += Qpow(2 * j + 1) * qpow(static_cast<long>(1 - i) * j) *
            (q_binomial(p - j - 1, i) * q_binomial(i + j - 1, j));
    return Qpow(i) * qpow(i) * fac * (s1 - s2);
  }
  LaurentPoly s1, s2;
  for (int j = 0; j <= -p - i; ++j)
    s1 += Qpow(2 * j) * qpow(static_cast<long>(-i) * j) *
          (q_binomial(-p - j - 1, i - 1) * q_binomial(i + j, j));
  for (int j = 0; j <= -p - i - 1; ++j)
    s2 += Qpow(2 * j + 1) * qpow(static_cast<long>(-i) * j) *
          (q_binomial(-p - j - 2, i - 1) * q_binomial(i + j, j));
  return Qpow(2 * p + i + 1) * fac * (-s1 + s2);
}

/// True iff the reversed C-polynomial specialized at E = M - 2 + M^{-1},
/// Q = 1 equals the Alexander polynomial of K_p.
inline bool alexander_specialization(int p) {
  LaurentPoly d = backward_form(p).poly;
  RationalFunction em(LaurentPoly::var("M") - LaurentPoly(Rational(2)) +
                      LaurentPoly::var("M", -1));
  RationalFunction v = poly_substitute(
      d, {{kShiftVar, em}, {kQPowerVar, RationalFunction(Rational(1))}});
  return v == RationalFunction(alexander_twist(p));
}

// ---------------------------------------------------------------------------
// Coefficient tables
// ---------------------------------------------------------------------------

/// Matrix view of an operator's coefficients: cell (i, j) holds the
/// q-polynomial multiplying Q^j E^i.
struct CoeffTable {
  int p = 0;
  int e_degree = 0;
  int q_min = 0, q_max = 0;                    // column range in Q
  std::map<std::pair<int, int>, LaurentPoly> cells;  // (e_deg, q_exp) -> poly in q
};

inline CoeffTable coeff_table(const CPolyNC& c) {
  CoeffTable t;
  t.p = c.p;
  t.e_degree = c.op.e_degree();
  bool first = true;
  for (auto& [i, coeff] : c.op.coeffs()) {
    const LaurentPoly& poly = coeff.as_poly();
    int lo = poly.min_exponent(kQPowerVar);
    int hi = poly.degree(kQPowerVar);
    for (int j = lo; j <= hi; ++j) {
      LaurentPoly cell = poly.coeff_of(kQPowerVar, j);
      if (cell.is_zero()) continue;
      t.cells[{i, j}] = cell;
      if (first || j < t.q_min) t.q_min = j;
      if (first || j > t.q_max) t.q_max = j;
      first = false;
    }
  }
  return t;
}

/// Built-in coefficient tables for |p| <= 3, embedded verbatim as fixtures.
inline const std::map<int, std::vector<std::tuple<int, int, std::vector<std::pair<int, long>>>>>&
golden_tables() {
  using Cell = std::vector<std::pair<int, long>>;  // list of (q-exponent, coefficient)
  using Row = std::tuple<int, int, Cell>;          // (e_degree, q_exponent, poly)
  static const std::map<int, std::vector<Row>> tables = {
      {1, {{0, 1, {{2, 1}}}, {1, 0, {{0, 1}}}}},
      {2,
       {{0, 2, {{6, 1}}},
        {0, 3, {{7, -1}}},
        {1, 1, {{3, 1}, {4, 1}}},
        {1, 2, {{5, -1}}},
        {1, 3, {{7, 1}}},
        {2, 0, {{0, 1}}}}},
      {3,
       {{0, 3, {{12, 1}}},
        {0, 4, {{13, -1}, {14, -1}}},
        {0, 5, {{15, 1}}},
        {1, 2, {{8, 1}, {9, 1}, {10, 1}}},
        {1, 3, {{10, -1}, {11, -2}, {12, -1}}},
        {1, 4, {{13, 2}, {14, 1}}},
        {1, 5, {{15, -1}, {16, -1}}},
        {2, 1, {{4, 1}, {5, 1}, {6, 1}}},
        {2, 2, {{7, -1}, {8, -1}}},
        {2, 3, {{10, 1}, {11, 1}}},
        {2, 4, {{13, -1}}},
        {2, 5, {{16, 1}}},
        {3, 0, {{0, 1}}}}},
      {-1, {{0, 0, {{0, -1}}}, {1, 0, {{0, 1}}}}},
      {-2,
       {{0, -1, {{-2, -1}}},
        {0, 0, {{-1, 1}}},
        {1, -2, {{-4, -1}}},
        {1, -1, {{-2, 1}}},
        {1, 0, {{-1, -1}, {0, -1}}},
        {2, 0, {{0, 1}}}}},
      {-3,
       {{0, -2, {{-6, -1}}},
        {0, -1, {{-5, 1}, {-4, 1}}},
        {0, 0, {{-3, -1}}},
        {1, -3, {{-9, -1}, {-8, -1}}},
        {1, -2, {{-7, 1}, {-6, 2}}},
        {1, -1, {{-5, -1}, {-4, -2}, {-3, -1}}},
        {1, 0, {{-3, 1}, {-2, 1}, {-1, 1}}},
        {2, -4, {{-12, -1}}},
        {2, -3, {{-9, 1}}},
        {2, -2, {{-7, -1}, {-6, -1}}},
        {2, -1, {{-4, 1}, {-3, 1}}},
        {2, 0, {{-2, -1}, {-1, -1}, {0, -1}}},
        {3, 0, {{0, 1}}}}},
  };
  return tables;
}

/// Compares the computed table against the built-in fixture for |p| <= 3.
/// Throws naming the first differing cell.
inline CoeffTable appendix_table(int p) {
  CoeffTable t = coeff_table(nc_cpoly(p));
  if (std::abs(p) > 3 || p == 0) return t;
  auto it = golden_tables().find(p);
  std::map<std::pair<int, int>, LaurentPoly> want;
  for (auto& [i, j, cell] : it->second) {
    LaurentPoly poly;
    for (auto& [e, c] : cell) poly += LaurentPoly::monomial(Rational(c), kBaseVar, e);
    want[{i, j}] = poly;
  }
  for (auto& [key, cell] : want) {
    auto found = t.cells.find(key);
    if (found == t.cells.end() || found->second != cell)
      throw std::domain_error("appendix_table: mismatch at E^" + std::to_string(key.first) +
                              " Q^" + std::to_string(key.second) + " for p=" + std::to_string(p));
  }
  for (auto& [key, cell] : t.cells) {
    if (!want.count(key))
      throw std::domain_error("appendix_table: unexpected cell E^" + std::to_string(key.first) +
                              " Q^" + std::to_string(key.second) + " for p=" + std::to_string(p));
  }
  return t;
}

inline std::string format_table_matrix(const CoeffTable& t) {
  std::ostringstream os;
  os << "C_" << t.p;
  for (int j = t.q_min; j <= t.q_max; ++j) os << "\tQ^" << j;
  os << "\n";
  for (int i = 0; i <= t.e_degree; ++i) {
    os << "E^" << i;
    for (int j = t.q_min; j <= t.q_max; ++j) {
      auto it = t.cells.find({i, j});
      os << "\t" << (it == t.cells.end() ? "0" : it->second.to_string());
    }
    os << "\n";
  }
  return os.str();
}

inline std::string format_table_latex(const CoeffTable& t) {
  auto cell_tex = [](const LaurentPoly& p) {
    std::string s = p.to_string();
    std::string r;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '^') {
        r += "^{";
        std::size_t j = i + 1;
        if (j < s.size() && s[j] == '-') { r += '-'; ++j; }
        while (j < s.size() && isdigit(static_cast<unsigned char>(s[j]))) r += s[j++];
        r += '}';
        i = j - 1;
      } else if (s[i] == '*') {
        r += ' ';
      } else {
        r += s[i];
      }
    }
    return r;
  };
  std::ostringstream os;
  os << "\\begin{array}{c|";
  for (int j = t.q_min; j <= t.q_max; ++j) os << "c";
  os << "}\n";
  os << "C_{" << t.p << "}";
  for (int j = t.q_min; j <= t.q_max; ++j) os << " & Q^{" << j << "}";
  os << " \\\\ \\hline\n";
  for (int i = 0; i <= t.e_degree; ++i) {
    os << "E^{" << i << "}";
    for (int j = t.q_min; j <= t.q_max; ++j) {
      auto it = t.cells.find({i, j});
      os << " & " << (it == t.cells.end() ? "0" : cell_tex(it->second));
    }
    os << " \\\\\n";
  }
  os << "\\end{array}\n";
  return os.str();
}

}  // namespace qknot
