#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "qknot/laurent.hpp"
#include "qknot/polyops.hpp"

namespace qknot {

/// Quotient of Laurent polynomials in canonical form: gcd-reduced, denominator
/// a primitive polynomial (no negative exponents, unit monomial content,
/// positive leading coefficient). Equality is structural.
class RationalFunction {
public:
  RationalFunction() : num_(), den_(Rational(1)) {}
  RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT
  RationalFunction(long c) : num_(Rational(c)), den_(Rational(1)) {}   // NOLINT
  RationalFunction(const LaurentPoly& p) : num_(p), den_(Rational(1)) {}  // NOLINT
  RationalFunction(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
    reduce();
  }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_ == LaurentPoly(Rational(1)); }

  /// Numerator as LaurentPoly; throws unless the denominator is 1.
  const LaurentPoly& as_poly() const {
    if (!is_polynomial())
      throw std::domain_error("RationalFunction: not a Laurent polynomial (den = " +
                              den_.to_string() + ")");
    return num_;
  }

  RationalFunction operator-() const {
    RationalFunction r(*this);
    r.num_ = -r.num_;
    return r;
  }

  // Sums and products keep operands reduced with small gcds against shared
  // denominator parts only (Henrici's scheme); the results are reduced again,
  // so no full-size gcd ever runs.
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    RationalFunction r;
    if (a.den_ == b.den_) {
      LaurentPoly t = a.num_ + b.num_;
      if (t.is_zero()) return {};
      LaurentPoly g1 = gcd_nontrivial(t, a.den_);
      r.num_ = g1.is_constant() ? std::move(t) : exact_divide(t, g1);
      r.den_ = g1.is_constant() ? a.den_ : exact_divide(a.den_, g1);
      r.normalize_units();
      return r;
    }
    LaurentPoly g0 = gcd_nontrivial(a.den_, b.den_);
    if (g0.is_constant()) {
      r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
      if (r.num_.is_zero()) return {};
      r.den_ = a.den_ * b.den_;
      r.normalize_units();
      return r;
    }
    LaurentPoly ad0 = exact_divide(a.den_, g0);
    LaurentPoly bd0 = exact_divide(b.den_, g0);
    LaurentPoly t = a.num_ * bd0 + b.num_ * ad0;
    if (t.is_zero()) return {};
    LaurentPoly g1 = gcd_nontrivial(t, g0);
    if (g1.is_constant()) {
      r.num_ = std::move(t);
      r.den_ = a.den_ * bd0;
    } else {
      r.num_ = exact_divide(t, g1);
      r.den_ = ad0 * exact_divide(b.den_, g1);
    }
    r.normalize_units();
    return r;
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    LaurentPoly g1 = gcd_nontrivial(a.num_, b.den_);
    LaurentPoly g2 = gcd_nontrivial(b.num_, a.den_);
    RationalFunction r;
    const LaurentPoly& an = a.num_;
    const LaurentPoly& bn = b.num_;
    r.num_ = (g1.is_constant() ? an : exact_divide(an, g1)) *
             (g2.is_constant() ? bn : exact_divide(bn, g2));
    r.den_ = (g2.is_constant() ? a.den_ : exact_divide(a.den_, g2)) *
             (g1.is_constant() ? b.den_ : exact_divide(b.den_, g1));
    r.normalize_units();
    return r;
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("RationalFunction: division by zero");
    if (a.is_zero()) return {};
    return a * b.inverse();
  }

  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  RationalFunction inverse() const {
    if (is_zero()) throw std::domain_error("RationalFunction: inverse of zero");
    RationalFunction r;
    r.num_ = den_;
    r.den_ = num_;
    r.normalize_units();
    return r;
  }

  RationalFunction pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    RationalFunction r(Rational(1)), b(*this);
    unsigned n = static_cast<unsigned>(e);
    while (n) {
      if (n & 1) r = r * b;
      b = b * b;
      n >>= 1;
    }
    return r;
  }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  /// Substitute variable -> value for every bound variable simultaneously.
  /// Throws on division by zero (value makes the denominator vanish, or 0
  /// bound where a negative exponent requires inversion).
  RationalFunction substituted(const std::map<std::string, RationalFunction>& bindings) const {
    RationalFunction n = substitute_into(num_, bindings);
    RationalFunction d = substitute_into(den_, bindings);
    if (d.is_zero())
      throw std::domain_error("RationalFunction: substitution makes denominator vanish");
    return n / d;
  }

  /// Substitute name -> coef * target^e in numerator and denominator (exact
  /// exponent remap; the cheap path for Q -> q^n or Q -> qQ shifts).
  RationalFunction subst_monomial(const std::string& name, const Rational& coef,
                                  const std::string& target, int e) const {
    LaurentPoly n = num_.subst_monomial(name, coef, target, e);
    LaurentPoly d = den_.subst_monomial(name, coef, target, e);
    if (d.is_zero()) throw std::domain_error("RationalFunction: substitution pole");
    return RationalFunction(std::move(n), std::move(d));
  }

  /// Substitute name -> base^i * name in numerator and denominator (a ring
  /// automorphism, so the result stays reduced; only unit normalization runs).
  RationalFunction subst_shift(const std::string& name, const std::string& base, int i) const {
    RationalFunction r;
    r.num_ = num_.subst_shift(name, base, i);
    r.den_ = den_.subst_shift(name, base, i);
    r.normalize_units();
    return r;
  }

  std::string to_string() const {
    if (is_polynomial()) return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
  }

private:
  /// gcd wrapper that skips doomed cases: a single-term operand can share only
  /// a unit with a primitive counterpart, and units are handled downstream.
  static LaurentPoly gcd_nontrivial(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.term_count() <= 1 || b.term_count() <= 1) return LaurentPoly(Rational(1));
    return poly_gcd(a, b);
  }

  void reduce() {
    if (num_.is_zero()) {
      den_ = LaurentPoly(Rational(1));
      return;
    }
    LaurentPoly g = gcd_nontrivial(num_, den_);
    if (!g.is_constant()) {
      num_ = exact_divide(num_, g);
      den_ = exact_divide(den_, g);
    }
    normalize_units();
  }

  /// Canonicalizes the unit part only: the denominator becomes a primitive
  /// polynomial (minimum exponent 0 per variable, integer coprime
  /// coefficients, positive leading coefficient); the cofactors move into the
  /// numerator. Assumes num/den already coprime.
  void normalize_units() {
    if (num_.is_zero()) {
      den_ = LaurentPoly(Rational(1));
      return;
    }
    for (auto& v : std::vector<std::string>(den_.vars())) {
      int m = den_.min_exponent(v);
      if (m != 0) {
        den_ = den_.shifted(v, -m);
        num_ = num_.shifted(v, -m);
      }
    }
    Rational c = den_.content();
    if (!c.is_one()) {
      den_ = den_.divided_by(c);
      num_ = num_.divided_by(c);
    }
  }

  static RationalFunction substitute_into(const LaurentPoly& p,
                                          const std::map<std::string, RationalFunction>& bindings) {
    if (p.is_zero()) return {};
    // One pass over a common denominator: for a bound variable v with exponent
    // range [lo,hi] and binding n/d, v^e contributes n^(e-lo) d^(hi-e) against
    // a global d^(hi-lo); the leftover binding^lo is applied once at the end.
    struct Slot {
      int idx, lo, hi;
      const RationalFunction* rf;
      std::vector<LaurentPoly> npow, dpow;
    };
    std::vector<Slot> slots;
    for (std::size_t i = 0; i < p.vars().size(); ++i) {
      auto it = bindings.find(p.vars()[i]);
      if (it == bindings.end()) continue;
      Slot s;
      s.idx = static_cast<int>(i);
      s.lo = p.min_exponent(p.vars()[i]);
      s.hi = p.degree(p.vars()[i]);
      s.rf = &it->second;
      if (it->second.is_zero() && s.lo < 0)
        throw std::domain_error("substitution: zero bound at negative exponent of " + p.vars()[i]);
      int range = s.hi - s.lo;
      s.npow.resize(range + 1, LaurentPoly(Rational(1)));
      s.dpow.resize(range + 1, LaurentPoly(Rational(1)));
      for (int t = 1; t <= range; ++t) {
        s.npow[t] = s.npow[t - 1] * it->second.num();
        s.dpow[t] = s.dpow[t - 1] * it->second.den();
      }
      slots.push_back(std::move(s));
    }
    if (slots.empty()) return RationalFunction(p);

    LaurentPoly numacc;
    for (auto& [e, c] : p.terms()) {
      LaurentPoly t{c};
      for (std::size_t i = 0; i < p.vars().size(); ++i) {
        if (e[i] == 0) continue;
        bool bound = false;
        for (auto& s : slots)
          if (s.idx == static_cast<int>(i)) { bound = true; break; }
        if (!bound) t = t.shifted(p.vars()[i], e[i]);
      }
      for (auto& s : slots) {
        int e_i = e[s.idx];
        t = t * s.npow[e_i - s.lo] * s.dpow[s.hi - e_i];
      }
      numacc += t;
    }
    LaurentPoly D(Rational(1));
    for (auto& s : slots) D = D * s.dpow[s.hi - s.lo];
    RationalFunction r(std::move(numacc), std::move(D));
    for (auto& s : slots)
      if (s.lo != 0) r = r * s.rf->pow(s.lo);
    return r;
  }

  LaurentPoly num_, den_;
};

/// Substitute bindings into a Laurent polynomial, giving a rational function.
/// Unbound variables pass through. Division-by-zero when a variable with a
/// negative exponent is bound to zero.
inline RationalFunction poly_substitute(const LaurentPoly& p,
                                        const std::map<std::string, RationalFunction>& bindings) {
  return RationalFunction(p).substituted(bindings);
}

}  // namespace qknot
