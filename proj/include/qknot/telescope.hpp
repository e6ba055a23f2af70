#pragma once

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qknot/cpoly.hpp"
#include "qknot/weyl.hpp"

namespace qknot {

inline constexpr const char* kKVar = "K";

/// A q-proper hypergeometric term F(n,k), represented by its two shift
/// ratios as rational functions in (q, Q = q^n, K = q^k). Construction
/// checks the mixed-shift compatibility
///   ratio_n(Q, qK) ratio_k(Q, K) = ratio_k(qQ, K) ratio_n(Q, K).
struct HGTerm {
  RationalFunction ratio_n;  // F(n+1, k) / F(n, k)
  RationalFunction ratio_k;  // F(n, k+1) / F(n, k)

  HGTerm(RationalFunction rn, RationalFunction rk)
      : ratio_n(std::move(rn)), ratio_k(std::move(rk)) {
    if (ratio_n.is_zero() || ratio_k.is_zero())
      throw std::domain_error("HGTerm: zero shift ratio");
    RationalFunction lhs = ratio_n.subst_shift(kKVar, kBaseVar, 1) * ratio_k;
    RationalFunction rhs = ratio_k.subst_shift(kQPowerVar, kBaseVar, 1) * ratio_n;
    if (lhs != rhs) throw std::domain_error("HGTerm: shift ratios are incompatible");
  }
};

/// F(n+dn, k+dk) / F(n, k) by composing the two ratios; shifts of either sign.
/// Throws naming the shift if an intermediate composition divides by zero.
inline RationalFunction shift_ratio(const HGTerm& t, int dn, int dk) {
  RationalFunction r(Rational(1));
  int qn = 0;  // current n offset
  try {
    for (; qn < dn; ++qn) r = r * t.ratio_n.subst_shift(kQPowerVar, kBaseVar, qn);
    for (; qn > dn; --qn) r = r / t.ratio_n.subst_shift(kQPowerVar, kBaseVar, qn - 1);
  } catch (const std::domain_error&) {
    throw std::domain_error("shift_ratio: pole composing n-shift at offset " +
                            std::to_string(qn));
  }
  RationalFunction rk = t.ratio_k.subst_shift(kQPowerVar, kBaseVar, dn);
  int qk = 0;
  try {
    for (; qk < dk; ++qk) r = r * rk.subst_shift(kKVar, kBaseVar, qk);
    for (; qk > dk; --qk) r = r / rk.subst_shift(kKVar, kBaseVar, qk - 1);
  } catch (const std::domain_error&) {
    throw std::domain_error("shift_ratio: pole composing k-shift at offset " +
                            std::to_string(qk));
  }
  return r;
}

/// True iff sum_i a_i F(n+i, k) = 0 as a rational identity (after dividing
/// by F(n,k)). Coefficients are k-free: rational in (q, Q).
inline bool verify_kfree(const HGTerm& t, const std::vector<RationalFunction>& coeffs) {
  RationalFunction acc;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (!coeffs[i].is_zero()) acc += coeffs[i] * shift_ratio(t, static_cast<int>(i), 0);
  return acc.is_zero();
}

/// Telescoping certificate: coefficients a_0..a_I in (q, Q) and the rational
/// multiplier Cert(q, Q, K) with G(n,k) = Cert(n,k) F(n,k).
struct Certificate {
  std::vector<RationalFunction> coeffs;
  RationalFunction cert;
};

/// True iff sum_i a_i F(n+i,k) = G(n,k+1) - G(n,k) with G = cert * F,
/// identically in (q, Q, K).
inline bool verify_certificate(const HGTerm& t, const Certificate& c) {
  RationalFunction lhs;
  for (std::size_t i = 0; i < c.coeffs.size(); ++i)
    if (!c.coeffs[i].is_zero()) lhs += c.coeffs[i] * shift_ratio(t, static_cast<int>(i), 0);
  RationalFunction rhs = c.cert.subst_shift(kKVar, kBaseVar, 1) * t.ratio_k - c.cert;
  return lhs == rhs;
}

namespace lindetail {

/// Fraction-free (Bareiss) row echelon reduction in place. Returns the list
/// of pivot columns. Entries are Laurent polynomials.
inline std::vector<int> bareiss_echelon(std::vector<std::vector<LaurentPoly>>& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  int rows = static_cast<int>(m.size());
  int cols = static_cast<int>(m[0].size());
  LaurentPoly prev{Rational(1)};
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (!m[i][c].is_zero()) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        LaurentPoly t = m[i][j] * m[r][c] - m[i][c] * m[r][j];
        m[i][j] = t.is_zero() ? LaurentPoly{} : exact_divide(t, prev);
      }
      m[i][c] = LaurentPoly{};
    }
    prev = m[r][c];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// One nullspace vector per free column of the echelon form, each cleared to
/// polynomial entries with unit content.
inline std::vector<std::vector<LaurentPoly>> nullspace(std::vector<std::vector<LaurentPoly>> m) {
  std::vector<std::vector<LaurentPoly>> basis;
  if (m.empty()) return basis;
  int cols = static_cast<int>(m[0].size());
  std::vector<int> pivots = bareiss_echelon(m);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;

  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<RationalFunction> x(cols);
    x[f] = RationalFunction(Rational(1));
    for (int r = static_cast<int>(pivots.size()) - 1; r >= 0; --r) {
      int pc = pivots[r];
      RationalFunction s;
      for (int j = pc + 1; j < cols; ++j)
        if (!m[r][j].is_zero() && !x[j].is_zero())
          s += RationalFunction(m[r][j]) * x[j];
      if (!s.is_zero()) x[pc] = -(s / RationalFunction(m[r][pc]));
    }
    // clear denominators and content
    LaurentPoly lcm{Rational(1)};
    for (auto& xi : x)
      if (!xi.is_zero()) {
        LaurentPoly g = poly_gcd(lcm, xi.den());
        lcm = lcm * exact_divide(xi.den(), g);
      }
    std::vector<LaurentPoly> v(cols);
    LaurentPoly content;
    for (int j = 0; j < cols; ++j) {
      if (x[j].is_zero()) continue;
      v[j] = x[j].num() * exact_divide(lcm, x[j].den());
      content = poly_gcd(content, v[j]);
    }
    if (!content.is_constant())
      for (auto& vi : v)
        if (!vi.is_zero()) vi = exact_divide(vi, content);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace lindetail

/// A solved k-free relation sum_{i,j} a_{ij} F(n+i, k+j) = 0.
struct CelineSolution {
  int order_n = 0, order_k = 0;
  std::vector<std::vector<RationalFunction>> a;  // a[i][j], sizes (I+1) x (J+1)

  /// Coefficients of the n-recursion after summing over the full k range
  /// (the j-shifts telescope away): c_i = sum_j a_{ij}.
  std::vector<RationalFunction> summed() const {
    std::vector<RationalFunction> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      for (auto& v : a[i]) c[i] += v;
    return c;
  }

  WeylOp summed_operator() const {
    std::map<int, RationalFunction> m;
    auto c = summed();
    for (std::size_t i = 0; i < c.size(); ++i)
      if (!c[i].is_zero()) m[static_cast<int>(i)] = c[i];
    return WeylOp(std::move(m));
  }
};

/// Sister Celine's double-shift ansatz sum_{i<=I, j<=J} a_{ij} F(n+i,k+j) = 0
/// with k-free unknowns a_{ij}(q, Q): clears denominators, equates K-power
/// coefficients to zero, and solves the linear system by fraction-free
/// elimination. Returns a solution whose k-summed operator is nonzero when
/// one exists in the nullspace; otherwise any nonzero solution; nullopt when
/// only the zero solution exists. Every returned solution is re-verified.
inline std::optional<CelineSolution> celine_solve(const HGTerm& t, int I, int J) {
  if (I < 0 || J < 0) throw std::domain_error("celine_solve: negative ansatz order");
  const int cols = (I + 1) * (J + 1);
  std::vector<RationalFunction> ratios(cols);
  for (int i = 0; i <= I; ++i)
    for (int j = 0; j <= J; ++j) ratios[i * (J + 1) + j] = shift_ratio(t, i, j);

  LaurentPoly den{Rational(1)};
  for (auto& r : ratios) {
    LaurentPoly g = poly_gcd(den, r.den());
    den = den * exact_divide(r.den(), g);
  }
  std::vector<LaurentPoly> numer(cols);
  int klo = 0, khi = 0;
  for (int c = 0; c < cols; ++c) {
    numer[c] = ratios[c].num() * exact_divide(den, ratios[c].den());
    klo = std::min(klo, numer[c].min_exponent(kKVar));
    khi = std::max(khi, numer[c].degree(kKVar));
  }
  std::vector<std::vector<LaurentPoly>> m;
  for (int e = klo; e <= khi; ++e) {
    std::vector<LaurentPoly> row(cols);
    bool nonzero = false;
    for (int c = 0; c < cols; ++c) {
      row[c] = numer[c].coeff_of(kKVar, e);
      nonzero = nonzero || !row[c].is_zero();
    }
    if (nonzero) m.push_back(std::move(row));
  }

  auto basis = lindetail::nullspace(std::move(m));
  if (basis.empty()) return std::nullopt;

  auto build = [&](const std::vector<LaurentPoly>& v) {
    CelineSolution s;
    s.order_n = I;
    s.order_k = J;
    s.a.assign(I + 1, std::vector<RationalFunction>(J + 1));
    for (int i = 0; i <= I; ++i)
      for (int j = 0; j <= J; ++j) s.a[i][j] = RationalFunction(v[i * (J + 1) + j]);
    return s;
  };

  std::optional<CelineSolution> chosen;
  for (auto& v : basis) {
    CelineSolution s = build(v);
    bool nonzero_sum = false;
    for (auto& c : s.summed())
      if (!c.is_zero()) nonzero_sum = true;
    if (nonzero_sum || !chosen) {
      chosen = std::move(s);
      if (nonzero_sum) break;
    }
  }

  // soundness: the full double-shift identity must hold
  RationalFunction acc;
  for (int i = 0; i <= I; ++i)
    for (int j = 0; j <= J; ++j)
      if (!chosen->a[i][j].is_zero()) acc += chosen->a[i][j] * ratios[i * (J + 1) + j];
  if (!acc.is_zero()) throw std::logic_error("celine_solve: solver output fails verification");
  return chosen;
}

/// Assembles the recursion operator for the summed sequence. Without a
/// boundary remainder this is sum_i a_i E^i. With remainder R(q,Q) (the
/// inhomogeneous right side), the homogenized order-(I+1) operator is
///   a_I(qQ)/R(qQ) E^{I+1}
///   + sum_{i=1..I} ( a_{i-1}(qQ)/R(qQ) - a_i(Q)/R(Q) ) E^i
///   - a_0(Q)/R(Q).
inline WeylOp telescoped_operator(const std::vector<RationalFunction>& a,
                                  const std::optional<RationalFunction>& boundary) {
  if (a.empty()) throw std::domain_error("telescoped_operator: empty coefficients");
  if (!boundary) {
    std::map<int, RationalFunction> m;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!a[i].is_zero()) m[static_cast<int>(i)] = a[i];
    return WeylOp(std::move(m));
  }
  const RationalFunction& R = *boundary;
  if (R.is_zero()) throw std::domain_error("telescoped_operator: zero boundary remainder");
  RationalFunction Rup = R.subst_shift(kQPowerVar, kBaseVar, 1);
  int I = static_cast<int>(a.size()) - 1;
  std::map<int, RationalFunction> m;
  m[I + 1] = a[I].subst_shift(kQPowerVar, kBaseVar, 1) / Rup;
  for (int i = 1; i <= I; ++i) {
    RationalFunction v = a[i - 1].subst_shift(kQPowerVar, kBaseVar, 1) / Rup - a[i] / R;
    if (!v.is_zero()) m[i] = v;
  }
  RationalFunction tail = -(a[0] / R);
  if (!tail.is_zero()) m[0] = tail;
  return WeylOp(std::move(m));
}

// ---------------------------------------------------------------------------
// Built-in terms
// ---------------------------------------------------------------------------

/// The summand of the twist-knot cyclotomic sum as an HGTerm:
///   ratio_n = -q^2 Q (1-qQ) / ((1-q^2 QK)(1-qQ/K))
///   ratio_k = -q^{2p} K^{2p+1} (q^3 K^2 - 1)(1-Q/K) / ((qK^2-1)(1-q^2 QK))
inline HGTerm twist_term(int p) {
  const LaurentPoly one{Rational(1)};
  const LaurentPoly Q = LaurentPoly::var(kQPowerVar);
  const LaurentPoly K = LaurentPoly::var(kKVar);
  auto qpw = [](int e) { return LaurentPoly::var(kBaseVar, e); };
  LaurentPoly n_num = -(qpw(2) * Q) * (one - qpw(1) * Q);
  LaurentPoly n_den = (one - qpw(2) * Q * K) * (one - qpw(1) * Q * LaurentPoly::var(kKVar, -1));
  LaurentPoly k_num = -(qpw(2 * p) * LaurentPoly::var(kKVar, 2 * p + 1)) *
                      (qpw(3) * K * K - one) * (one - Q * LaurentPoly::var(kKVar, -1));
  LaurentPoly k_den = (qpw(1) * K * K - one) * (one - qpw(2) * Q * K);
  return HGTerm(RationalFunction(n_num, n_den), RationalFunction(k_num, k_den));
}

/// Alternating q-binomial summand: F(n,k) = [n over k]_q (-1)^k q^{k(k-1)/2},
/// whose full sum is 1 at n = 0 and 0 for n >= 1.
inline HGTerm qbinomial_theorem_term() {
  const LaurentPoly one{Rational(1)};
  const LaurentPoly Q = LaurentPoly::var(kQPowerVar);
  const LaurentPoly K = LaurentPoly::var(kKVar);
  auto qpw = [](int e) { return LaurentPoly::var(kBaseVar, e); };
  RationalFunction rn(one - qpw(1) * Q, one - qpw(1) * Q * LaurentPoly::var(kKVar, -1));
  RationalFunction rk(-(K - Q), one - qpw(1) * K);
  return HGTerm(rn, rk);
}

}  // namespace qknot
