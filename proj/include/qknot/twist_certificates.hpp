#pragma once

#include <string>
#include <vector>

#include "qknot/telescope.hpp"

namespace qknot {

/// One verified identity: an id, the outcome, and a witness string on failure.
struct IdentityCheck {
  std::string id;
  bool pass = false;
  std::string witness;
};

struct ApparatusReport {
  int p = 0;
  std::vector<IdentityCheck> checks;
  bool all_pass() const {
    for (auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

namespace wzdetail {

inline RationalFunction qpw(int e) {
  return RationalFunction(LaurentPoly::var(kBaseVar, e));
}
inline RationalFunction Qv() { return RationalFunction(LaurentPoly::var(kQPowerVar)); }
inline RationalFunction Kv() { return RationalFunction(LaurentPoly::var(kKVar)); }

/// Summand building blocks of the backward-coefficient expansion, as rational
/// functions in (q, Q, K); zero outside the admissible index quadrant. The
/// n-offset shifts Q by a q-power. Positive-parameter branch.
inline RationalFunction t_pos(int h, int p, int n_off, int i, int j) {
  if (i < 0 || j < 0) return {};
  RationalFunction bin(h == 1
                           ? q_binomial(p - j, p - i - j) * q_binomial(i + j - 1, j)
                           : q_binomial(p - j - 1, p - i - j - 1) * q_binomial(i + j - 1, j));
  if (bin.is_zero()) return {};
  RationalFunction Qc = Qv() * qpw(n_off);
  RationalFunction v = qpw(i * (i - 1) / 2) * Qc.pow(2 * j) * qpw((1 - i) * j) * bin;
  if (i % 2) v = -v;
  RationalFunction one(Rational(1));
  RationalFunction block = one;
  for (int m = 0; m < i; ++m) {
    block = block * (one - qpw(1 - m) * Qc * Kv());
    block = block * (one - qpw(-m) * Qc / Kv());
  }
  v = v * block / (one - Qc);
  if (h == 2) v = v * Qc;  // the q^n factor of the second coefficient family
  return v;
}

/// Negative-parameter branch.
inline RationalFunction t_neg(int h, int p, int n_off, int i, int j) {
  if (i < 0 || j < 0) return {};
  RationalFunction bin(h == 1
                           ? q_binomial(-p - j - 1, -p - i - j) * q_binomial(i + j, j)
                           : q_binomial(-p - j - 2, -p - i - j - 1) * q_binomial(i + j, j));
  if (bin.is_zero()) return {};
  RationalFunction Qc = Qv() * qpw(n_off);
  RationalFunction v = qpw(i * (i - 3) / 2 - i * j) * Qc.pow(2 * p + 1 + 2 * j) * bin;
  if (i % 2) v = -v;
  RationalFunction one(Rational(1));
  RationalFunction block = one;
  for (int m = 0; m < i; ++m) {
    block = block * (one - qpw(1 - m) * Qc * Kv());
    block = block * (one - qpw(-m) * Qc / Kv());
  }
  v = v * block / (one - Qc);
  if (h == 2) v = v * Qc;
  return v;
}

/// Coefficients of the five-term relation shared by both t-families.
inline RationalFunction coef_A(int p) {
  return qpw(p) * (Kv() - Qv()) * (Qv() - qpw(1)) * (qpw(1) * Kv() * Qv() - RationalFunction(Rational(1)));
}
inline RationalFunction coef_B() {
  return qpw(2) * Kv() * Qv().pow(2) * (Qv() - RationalFunction(Rational(1)));
}
inline RationalFunction coef_C() {
  return qpw(2) * Kv() * (Qv() - RationalFunction(Rational(1)));
}

/// r_p(n,k) = sum_{i=1}^{|p|} a'_p(n,i) F(n-i,k)/F(n,k) over the twist term.
inline RationalFunction r_sum(int p) {
  if (p == 0) return {};
  HGTerm t = twist_term(p);
  RationalFunction acc;
  for (int i = 1; i <= std::abs(p); ++i)
    acc += RationalFunction(nc_backward_coeff(p, i)) * shift_ratio(t, -i, 0);
  return acc;
}

/// The telescoping multiplier Cert_p(n,k) as a rational function in (q,Q,K).
inline RationalFunction cert_rf(int p) {
  RationalFunction one(Rational(1));
  RationalFunction num = qpw(p) * Kv().pow(p) * Qv().pow(p) * (qpw(1) * Kv() - one) * (Qv() - Kv());
  RationalFunction den = (qpw(1) * Kv().pow(2) - one) * (Qv() - one);
  return num / den;
}

/// Cert_p(n,k) - Cert_p(n,k-1) F(n,k-1)/F(n,k) - 1; equals r_p when the
/// telescoping identity holds.
inline RationalFunction defect(int p) {
  RationalFunction c = cert_rf(p);
  return c - c.subst_shift(kKVar, kBaseVar, -1) * shift_ratio(twist_term(p), 0, -1) -
         RationalFunction(Rational(1));
}

/// Left side of the summed five-term relation at instance tau for a family
/// fam: p -> rational function of (q,Q,K).
template <typename Family>
RationalFunction summed_lhs(int tau, Family&& fam) {
  RationalFunction f2 = fam(tau - 2);
  RationalFunction f1 = fam(tau - 1);
  RationalFunction f1dn = f1.subst_shift(kQPowerVar, kBaseVar, -1);
  RationalFunction f0 = fam(tau);
  return -coef_A(tau) * f1dn + coef_B() * f2 - coef_B() * f1 - coef_C() * f1 + coef_C() * f0;
}

}  // namespace wzdetail

/// Verifies the telescoping apparatus for the twist knot K_p as exact
/// rational identities in (q, Q, K):
///   (i)   the five-term recursions of both summand families t^(1), t^(2)
///         over the admissible index range,
///   (ii)  the summed five-term relation for the ratio sums r, with
///         inhomogeneous right side q^tau (q^k - q^n)(q^n - q)(q^{1+k+n} - 1),
///   (iii) the same relation satisfied by the certificate defect,
///   (iv)  the boundary value Cert_p(n, -1) = 0,
///   (v)   the certificate identity 1 + r_p = Cert_p(n,k)
///                                  - Cert_p(n,k-1) F(n,k-1)/F(n,k).
inline ApparatusReport paper_apparatus(int p) {
  using namespace wzdetail;
  if (p == 0 || std::abs(p) > 5)
    throw std::domain_error("paper_apparatus: expected fixed p with 1 <= |p| <= 5");
  ApparatusReport rep;
  rep.p = p;
  const int ap = std::abs(p);

  // (i) five-term recursions, both families
  for (int h : {1, 2}) {
    bool ok = true;
    std::string witness;
    for (int i = 1; i <= ap + 2 && ok; ++i)
      for (int j = 0; j <= ap + 2 && ok; ++j) {
        RationalFunction lhs;
        if (p > 0) {
          lhs = -coef_A(p) * t_pos(h, p - 1, -1, i - 1, j) +
                coef_B() * t_pos(h, p - 2, 0, i, j - 1) -
                coef_B() * t_pos(h, p - 1, 0, i, j - 1) - coef_C() * t_pos(h, p - 1, 0, i, j) +
                coef_C() * t_pos(h, p, 0, i, j);
        } else {
          lhs = -coef_A(p) * t_neg(h, p - 1, -1, i - 1, j) +
                coef_B() * t_neg(h, p - 2, 0, i, j) -
                coef_B() * t_neg(h, p - 1, 0, i, j - 1) - coef_C() * t_neg(h, p - 1, 0, i, j) +
                coef_C() * t_neg(h, p, 0, i, j - 1);
        }
        if (!lhs.is_zero()) {
          ok = false;
          witness = "fails at (i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")";
        }
      }
    rep.checks.push_back({"five-term t^(" + std::to_string(h) + ") family", ok, witness});
  }

  // (ii) summed relation for the ratio sums
  {
    auto fam = [&](int idx) { return (p > 0 ? idx : -idx) > 0 ? r_sum(idx) : RationalFunction(); };
    int tau_lo = p > 0 ? std::max(2, p) : p;
    int tau_hi = p > 0 ? p + 2 : std::min(-1, p + 2);
    for (int tau = tau_lo; tau <= tau_hi; ++tau) {
      RationalFunction lhs = summed_lhs(tau, fam);
      bool ok = lhs == coef_A(tau);
      rep.checks.push_back({"summed ratio relation at " + std::to_string(tau), ok,
                            ok ? "" : "left side differs from inhomogeneous term"});
    }
  }

  // (iii) summed relation for the certificate defect
  {
    auto fam = [&](int idx) { return defect(idx); };
    int tau_lo = p > 0 ? std::max(1, p) : p;
    int tau_hi = p > 0 ? p + 2 : std::min(-1, p + 2);
    for (int tau = tau_lo; tau <= tau_hi; ++tau) {
      RationalFunction lhs = summed_lhs(tau, fam);
      bool ok = lhs == coef_A(tau);
      rep.checks.push_back({"defect relation at " + std::to_string(tau), ok,
                            ok ? "" : "left side differs from inhomogeneous term"});
    }
  }

  // (iv) boundary Cert_p(n, -1) = 0
  {
    RationalFunction at_boundary =
        cert_rf(p).substituted({{kKVar, RationalFunction(LaurentPoly::var(kBaseVar, -1))}});
    rep.checks.push_back({"certificate boundary at k = -1", at_boundary.is_zero(),
                          at_boundary.is_zero() ? "" : at_boundary.to_string()});
  }

  // (v) certificate identity
  {
    RationalFunction lhs = RationalFunction(Rational(1)) + r_sum(p);
    RationalFunction c = cert_rf(p);
    RationalFunction rhs =
        c - c.subst_shift(kKVar, kBaseVar, -1) * shift_ratio(twist_term(p), 0, -1);
    bool ok = lhs == rhs;
    rep.checks.push_back({"certificate telescoping identity", ok, ok ? "" : "sides differ"});
  }

  return rep;
}

/// The certificate of the forward recursion in the form verify_certificate
/// expects: coefficients a_p(Q, i) (leading 1) and the multiplier
/// cert_fwd(Q, K) = Cert_p(q^{|p|} Q, K/q) F(n+|p|, k-1)/F(n, k).
inline Certificate forward_certificate(int p) {
  if (p == 0) throw std::domain_error("forward_certificate: p = 0 has nothing to certify");
  const int ap = std::abs(p);
  Certificate c;
  c.coeffs.resize(ap + 1);
  for (int i = 0; i < ap; ++i) c.coeffs[i] = RationalFunction(nc_cpoly_coeff(p, i));
  c.coeffs[ap] = RationalFunction(Rational(1));
  RationalFunction base = wzdetail::cert_rf(p)
                              .subst_shift(kQPowerVar, kBaseVar, ap)
                              .subst_shift(kKVar, kBaseVar, -1);
  c.cert = base * shift_ratio(twist_term(p), ap, -1);
  return c;
}

}  // namespace qknot
