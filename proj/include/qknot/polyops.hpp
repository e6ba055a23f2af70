#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "qknot/laurent.hpp"

namespace qknot {

/// Exact division in the Laurent ring (monomials are units, so divisibility is
/// decided on the monomial-content-stripped polynomial parts). Returns nullopt
/// when g does not divide f.
inline std::optional<LaurentPoly> try_divide(const LaurentPoly& f, const LaurentPoly& g) {
  if (g.is_zero()) throw std::domain_error("try_divide: division by zero polynomial");
  if (f.is_zero()) return LaurentPoly{};

  LaurentPoly fs = f, gs = g;
  LaurentPoly shift(Rational(1));
  for (auto& v : f.vars()) {
    int m = f.min_exponent(v);
    if (m) { fs = fs.shifted(v, -m); shift = shift.shifted(v, m); }
  }
  for (auto& v : g.vars()) {
    int m = g.min_exponent(v);
    if (m) { gs = gs.shifted(v, -m); shift = shift.shifted(v, -m); }
  }

  // lead-term division loop; valid for exact multiples under the lex order
  LaurentPoly rem = fs, quot;
  auto [gt_e, gt_c] = gs.leading_term();
  const auto& gvars = gs.vars();
  while (!rem.is_zero()) {
    auto [rt_e, rt_c] = rem.leading_term();
    // exponent difference in the merged variable frame
    LaurentPoly t(rt_c / gt_c);
    const auto& rvars = rem.vars();
    // map g's leading exponents into rem's frame by name
    bool ok = true;
    std::vector<int> diff(rvars.size(), 0);
    for (std::size_t i = 0; i < rvars.size(); ++i) diff[i] = rt_e[i];
    for (std::size_t i = 0; i < gvars.size(); ++i) {
      if (gt_e[i] == 0) continue;
      int idx = rem.var_index(gvars[i]);
      if (idx < 0) { ok = false; break; }
      diff[idx] -= gt_e[i];
    }
    if (ok)
      for (int d : diff)
        if (d < 0) { ok = false; break; }
    if (!ok) return std::nullopt;
    for (std::size_t i = 0; i < rvars.size(); ++i)
      if (diff[i]) t = t.shifted(rvars[i], diff[i]);
    quot += t;
    rem -= t * gs;
  }
  return quot * shift;
}

inline bool divides(const LaurentPoly& g, const LaurentPoly& f) {
  return try_divide(f, g).has_value();
}

inline LaurentPoly exact_divide(const LaurentPoly& f, const LaurentPoly& g) {
  auto r = try_divide(f, g);
  if (!r) throw std::domain_error("exact_divide: not divisible");
  return *r;
}

namespace detail {

/// Univariate view: f = sum coeffs[i] * x^i with LaurentPoly coefficients
/// in the remaining variables. Requires nonnegative exponents of x.
struct UniView {
  std::vector<LaurentPoly> coeffs;  // dense, coeffs.back() != 0 unless empty

  int deg() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  const LaurentPoly& lc() const { return coeffs.back(); }

  void normalize() {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  }

  static UniView of(const LaurentPoly& f, const std::string& x) {
    UniView v;
    int d = f.degree(x);
    if (f.is_zero()) return v;
    if (f.min_exponent(x) < 0)
      throw std::domain_error("UniView: negative exponent in main variable");
    v.coeffs.resize(d + 1);
    for (int i = 0; i <= d; ++i) v.coeffs[i] = f.coeff_of(x, i);
    v.normalize();
    return v;
  }

  LaurentPoly to_poly(const std::string& x) const {
    LaurentPoly r;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      r += coeffs[i].shifted(x, static_cast<int>(i));
    return r;
  }
};

/// Pseudo-remainder: lc(B)^(degA-degB+1) * A = Q*B + R, returns R.
inline UniView pseudo_rem(UniView A, const UniView& B) {
  int dB = B.deg();
  if (dB < 0) throw std::domain_error("pseudo_rem: zero divisor");
  const LaurentPoly& b = B.lc();
  int steps = A.deg() - dB + 1;
  if (steps <= 0) return A;
  for (int s = 0; s < steps; ++s) {
    if (A.deg() < dB) {
      // premature degree drop still multiplies through by lc(B)
      for (auto& c : A.coeffs) c = c * b;
      continue;
    }
    int dA = A.deg();
    LaurentPoly a = A.lc();
    UniView next;
    next.coeffs.assign(dA, LaurentPoly{});
    for (int i = 0; i < dA; ++i) {
      LaurentPoly v = b * (i < static_cast<int>(A.coeffs.size()) ? A.coeffs[i] : LaurentPoly{});
      int j = i - (dA - dB);
      if (j >= 0 && j < dB) v -= a * B.coeffs[j];
      next.coeffs[i] = std::move(v);
    }
    next.normalize();
    A = std::move(next);
  }
  return A;
}

}  // namespace detail

LaurentPoly poly_gcd(const LaurentPoly& f, const LaurentPoly& g);

namespace detail {

/// Content of a univariate view: gcd of its coefficients.
inline LaurentPoly uni_content(const UniView& v) {
  LaurentPoly c;
  for (auto& co : v.coeffs) {
    if (co.is_zero()) continue;
    c = poly_gcd(c, co);
    if (c.is_constant()) break;
  }
  return c.is_zero() ? LaurentPoly{} : c;
}

inline UniView uni_divide(const UniView& v, const LaurentPoly& d) {
  UniView r;
  r.coeffs.reserve(v.coeffs.size());
  for (auto& c : v.coeffs) r.coeffs.push_back(c.is_zero() ? c : exact_divide(c, d));
  return r;
}

/// Subresultant PRS gcd of primitive univariate inputs; returns the primitive
/// gcd (1 if coprime in x).
inline UniView subresultant_gcd(UniView A, UniView B, const std::string& /*x*/) {
  if (A.deg() < B.deg()) std::swap(A, B);
  LaurentPoly gcoef(Rational(1)), h(Rational(1));
  for (;;) {
    int d = A.deg() - B.deg();
    UniView R = pseudo_rem(A, B);
    if (R.is_zero()) break;
    if (R.deg() == 0) {
      UniView one;
      one.coeffs = {LaurentPoly(Rational(1))};
      return one;
    }
    A = std::move(B);
    // divisor g*h^d
    LaurentPoly div = gcoef;
    for (int i = 0; i < d; ++i) div = div * h;
    B = uni_divide(R, div);
    gcoef = A.lc();
    if (d > 0) {
      LaurentPoly gp(Rational(1));
      for (int i = 0; i < d; ++i) gp = gp * gcoef;
      LaurentPoly hp(Rational(1));
      for (int i = 0; i < d - 1; ++i) hp = hp * h;
      h = d == 1 ? gp : exact_divide(gp, hp);
    }
  }
  LaurentPoly cont = uni_content(B);
  return uni_divide(B, cont);
}

/// Dense univariate gcd over Q by plain Euclid; inputs polynomial in x with
/// constant coefficients. Returns the primitive positive-lead gcd.
inline LaurentPoly uni_gcd_rational(const LaurentPoly& f, const LaurentPoly& g,
                                    const std::string& x) {
  auto dense = [&x](const LaurentPoly& p) {
    std::vector<Rational> v(p.degree(x) + 1);
    for (auto& [e, c] : p.terms()) v[e.empty() ? 0 : e[0]] = c;
    return v;
  };
  auto deg = [](const std::vector<Rational>& v) {
    int d = static_cast<int>(v.size()) - 1;
    while (d >= 0 && v[d].is_zero()) --d;
    return d;
  };
  std::vector<Rational> a = dense(f), b = dense(g);
  int da = deg(a), db = deg(b);
  if (da < db) { std::swap(a, b); std::swap(da, db); }
  while (db >= 0) {
    // a -= (lc_a/lc_b) x^(da-db) b, repeated
    while (da >= db) {
      Rational t = a[da] / b[db];
      for (int i = 0; i <= db; ++i) a[da - db + i] -= t * b[i];
      a[da] = Rational(0);
      while (da >= 0 && a[da].is_zero()) --da;
      if (da < 0) break;
    }
    std::swap(a, b);
    std::swap(da, db);
  }
  LaurentPoly r;
  for (int i = 0; i <= da; ++i)
    if (!a[i].is_zero()) r += LaurentPoly::monomial(a[i], x, i);
  return r.primitive();
}

namespace gcddetail {

/// Sound upper-bound test: returns true when gcd(A,B) certainly has degree 0
/// in x. Evaluates every other variable at a point where lc_x(A) does not
/// vanish (so the gcd's leading coefficient cannot vanish either), then takes
/// a univariate gcd over Q. Falls back to false (unknown) when no good point
/// is found.
inline bool gcd_is_xfree(const detail::UniView& A, const detail::UniView& B,
                         const std::string& x) {
  std::vector<std::string> others;
  for (auto& c : A.coeffs)
    for (auto& v : c.vars())
      if (v != x && std::find(others.begin(), others.end(), v) == others.end())
        others.push_back(v);
  for (auto& c : B.coeffs)
    for (auto& v : c.vars())
      if (v != x && std::find(others.begin(), others.end(), v) == others.end())
        others.push_back(v);
  if (others.empty()) return false;  // genuinely univariate: caller handles

  static const long kSeeds[] = {2, 3, 5, 7, 11, 13, 17, 19};
  for (int attempt = 0; attempt < 6; ++attempt) {
    auto point = [&](std::size_t vi) {
      return Rational(kSeeds[(vi + attempt * 3) % 8] + attempt, 1 + ((attempt + vi) % 3));
    };
    auto eval_all = [&](const LaurentPoly& p) {
      LaurentPoly r = p;
      for (std::size_t vi = 0; vi < others.size(); ++vi)
        if (r.has_var(others[vi])) r = r.eval_var(others[vi], point(vi));
      return r.constant_value();
    };
    LaurentPoly lcA = A.lc();
    bool lc_ok = true;
    try {
      if (eval_all(lcA).is_zero()) lc_ok = false;
    } catch (const std::domain_error&) {
      lc_ok = false;
    }
    if (!lc_ok) continue;
    try {
      std::vector<Rational> a(A.coeffs.size()), b(B.coeffs.size());
      for (std::size_t i = 0; i < A.coeffs.size(); ++i)
        a[i] = A.coeffs[i].is_zero() ? Rational(0) : eval_all(A.coeffs[i]);
      for (std::size_t i = 0; i < B.coeffs.size(); ++i)
        b[i] = B.coeffs[i].is_zero() ? Rational(0) : eval_all(B.coeffs[i]);
      // univariate Euclid over Q on the evaluated pair
      auto deg = [](std::vector<Rational>& v) {
        int d = static_cast<int>(v.size()) - 1;
        while (d >= 0 && v[d].is_zero()) --d;
        return d;
      };
      int da = deg(a), db = deg(b);
      if (da < db) { std::swap(a, b); std::swap(da, db); }
      while (db > 0) {
        while (da >= db) {
          Rational t = a[da] / b[db];
          for (int i = 0; i <= db; ++i) a[da - db + i] -= t * b[i];
          while (da >= 0 && a[da].is_zero()) --da;
          if (da < 0) break;
        }
        std::swap(a, b);
        std::swap(da, db);
      }
      return db == 0;  // nonzero constant remainder: coprime in x
    } catch (const std::domain_error&) {
      continue;  // negative exponent hit a zero substitution; retry
    }
  }
  return false;
}

}  // namespace gcddetail

}  // namespace detail

/// Polynomial-ring gcd (monomial factors retained), canonically normalized:
/// rational content 1, positive leading coefficient. Laurent inputs are
/// handled through their polynomial representatives per variable shift, so
/// gcd(Q^3(1-Q), ...) keeps the Q factors the inputs actually share.
inline LaurentPoly poly_gcd(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.is_zero() && g.is_zero()) return {};
  if (f.is_zero()) return g.primitive();
  if (g.is_zero()) return f.primitive();
  if (f.is_constant() || g.is_constant()) return LaurentPoly(Rational(1));

  // shared Laurent shift: gcd in the polynomial ring of shifted copies, then
  // restore the common monomial factor min(min_f, min_g) per variable
  LaurentPoly fs = f, gs = g, common(Rational(1));
  {
    std::vector<std::string> names;
    for (auto& v : f.vars()) names.push_back(v);
    for (auto& v : g.vars()) if (!f.has_var(v)) names.push_back(v);
    for (auto& v : names) {
      int mf = fs.min_exponent(v), mg = gs.min_exponent(v);
      int c = std::min(mf, mg);
      if (mf) fs = fs.shifted(v, -mf);
      if (mg) gs = gs.shifted(v, -mg);
      if (c > 0) common = common.shifted(v, c);
    }
  }

  // main variable: first shared variable, else first of either (the other
  // input is then content-only in x)
  std::string x;
  for (auto& v : fs.vars())
    if (gs.has_var(v)) { x = v; break; }
  if (x.empty()) {
    // no shared variable: gcd is the gcd of full contents, i.e. a constant
    return common.primitive();
  }

  // univariate over Q: dense Euclid
  if (fs.vars() == std::vector<std::string>{x} && gs.vars() == std::vector<std::string>{x})
    return (detail::uni_gcd_rational(fs, gs, x) * common).primitive();

  auto A = detail::UniView::of(fs, x);
  auto B = detail::UniView::of(gs, x);
  LaurentPoly ca = detail::uni_content(A);
  LaurentPoly cb = detail::uni_content(B);
  LaurentPoly cont = poly_gcd(ca, cb);
  A = detail::uni_divide(A, ca);
  B = detail::uni_divide(B, cb);
  LaurentPoly result;
  if (detail::gcddetail::gcd_is_xfree(A, B, x)) {
    result = cont * common;  // primitive parts coprime in x
  } else {
    auto G = detail::subresultant_gcd(std::move(A), std::move(B), x);
    result = cont * G.to_poly(x) * common;
  }
  return result.primitive();
}

/// Resultant with respect to `var` as the Sylvester determinant, computed by
/// fraction-free (Bareiss) elimination. Laurent content in `var` is cleared
/// first. Convention: Res_x(x-a, x-b) = a-b.
inline LaurentPoly resultant(const LaurentPoly& f0, const LaurentPoly& g0, const std::string& var) {
  LaurentPoly f = f0, g = g0;
  int mf = f.min_exponent(var), mg = g.min_exponent(var);
  if (mf) f = f.shifted(var, -mf);
  if (mg) g = g.shifted(var, -mg);
  int df = f.degree(var), dg = g.degree(var);
  if (df == 0 && dg == 0)
    throw std::domain_error("resultant: both arguments constant in " + var);
  if (f.is_zero() || g.is_zero()) return {};
  if (df == 0) return f.pow(dg);
  if (dg == 0) return g.pow(df);

  int n = df + dg;
  std::vector<std::vector<LaurentPoly>> m(n, std::vector<LaurentPoly>(n));
  for (int r = 0; r < dg; ++r)
    for (int i = 0; i <= df; ++i) m[r][r + df - i] = f.coeff_of(var, i);
  for (int r = 0; r < df; ++r)
    for (int i = 0; i <= dg; ++i) m[dg + r][r + dg - i] = g.coeff_of(var, i);

  // Bareiss determinant
  LaurentPoly prev(Rational(1));
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k].is_zero()) {
      int piv = -1;
      for (int r = k + 1; r < n; ++r)
        if (!m[r][k].is_zero()) { piv = r; break; }
      if (piv < 0) return {};  // singular: resultant 0
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        LaurentPoly t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = exact_divide(t, prev);
      }
      m[i][k] = LaurentPoly{};
    }
    prev = m[k][k];
  }
  LaurentPoly det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

/// Squarefree part: product of the distinct irreducible factors, computed as
/// f / gcd(f, all partials), content-normalized (positive leading
/// coefficient). Laurent inputs are first stripped of their unit monomial.
inline LaurentPoly radical(const LaurentPoly& f0) {
  if (f0.is_zero()) throw std::domain_error("radical: zero input");
  LaurentPoly f = f0.is_polynomial() ? f0 : f0.monic_shift();
  if (f.is_constant()) return LaurentPoly(Rational(1));
  LaurentPoly g = f;
  for (auto& v : f.vars()) {
    g = poly_gcd(g, f.derivative(v));
    if (g.is_constant()) break;
  }
  if (g.is_constant()) return f.primitive();
  return exact_divide(f, g).primitive();
}

}  // namespace qknot
