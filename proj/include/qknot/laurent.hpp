#pragma once

#include <algorithm>
#include <climits>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "qknot/rational.hpp"

namespace qknot {

using ExpVec = std::vector<int>;

/// Sparse multivariate Laurent polynomial over Rational.
///
/// Variables are kept sorted by name and pruned when unused, so two polynomials
/// representing the same element compare equal structurally. Exponents may be
/// negative. Terms are held in a map keyed by exponent vector (lexicographic
/// order over the sorted variable list); serialization walks that order, which
/// makes output deterministic.
class LaurentPoly {
public:
  LaurentPoly() = default;
  LaurentPoly(const Rational& c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) terms_[{}] = c;
  }
  LaurentPoly(long c) : LaurentPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  /// Single variable x^e.
  static LaurentPoly var(const std::string& name, int e = 1) {
    return monomial(Rational(1), name, e);
  }

  static LaurentPoly monomial(const Rational& c, const std::string& name, int e) {
    LaurentPoly p;
    if (c.is_zero()) return p;
    if (e == 0) return LaurentPoly(c);
    p.vars_ = {name};
    p.terms_[{e}] = c;
    return p;
  }

  static LaurentPoly from_terms(std::vector<std::string> vars,
                                std::vector<std::pair<ExpVec, Rational>> terms) {
    LaurentPoly p;
    p.vars_ = std::move(vars);
    for (auto& [e, c] : terms) {
      if (e.size() != p.vars_.size())
        throw std::invalid_argument("LaurentPoly: exponent arity mismatch");
      if (!c.is_zero()) {
        auto [it, fresh] = p.terms_.emplace(e, c);
        if (!fresh) {
          it->second += c;
          if (it->second.is_zero()) p.terms_.erase(it);
        }
      }
    }
    p.canonicalize_vars();
    return p;
  }

  const std::vector<std::string>& vars() const { return vars_; }
  const std::map<ExpVec, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }
  std::size_t term_count() const { return terms_.size(); }

  /// The constant term's value; for a constant polynomial this is the value.
  Rational constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::domain_error("LaurentPoly: not a constant");
    return terms_.begin()->second;
  }

  bool has_var(const std::string& name) const {
    return std::binary_search(vars_.begin(), vars_.end(), name);
  }

  int var_index(const std::string& name) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), name);
    if (it == vars_.end() || *it != name) return -1;
    return static_cast<int>(it - vars_.begin());
  }

  /// Highest exponent of `name` (0 if the variable does not occur).
  int degree(const std::string& name) const {
    int idx = var_index(name);
    if (idx < 0) return 0;
    int d = INT_MIN;
    for (auto& [e, c] : terms_) d = std::max(d, e[idx]);
    return terms_.empty() ? 0 : d;
  }

  int min_exponent(const std::string& name) const {
    int idx = var_index(name);
    if (idx < 0) return 0;
    int d = INT_MAX;
    for (auto& [e, c] : terms_) d = std::min(d, e[idx]);
    return terms_.empty() ? 0 : d;
  }

  /// Max over terms of the exponent sum.
  int total_degree() const {
    if (terms_.empty()) return 0;
    int best = INT_MIN;
    for (auto& [e, c] : terms_) {
      int s = 0;
      for (int x : e) s += x;
      best = std::max(best, s);
    }
    return best;
  }

  bool is_polynomial() const {
    for (auto& [e, c] : terms_)
      for (int x : e)
        if (x < 0) return false;
    return true;
  }

  LaurentPoly operator-() const {
    LaurentPoly r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return combine(a, b, false); }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return combine(a, b, true); }

  LaurentPoly& operator+=(const LaurentPoly& o) { *this = *this + o; return *this; }
  LaurentPoly& operator-=(const LaurentPoly& o) { *this = *this - o; return *this; }
  LaurentPoly& operator*=(const LaurentPoly& o) { *this = *this * o; return *this; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    auto [av, bv, vars] = align(a, b);
    LaurentPoly r;
    r.vars_ = vars;
    const auto& small = av.size() <= bv.size() ? av : bv;
    const auto& big = av.size() <= bv.size() ? bv : av;
    ExpVec e(vars.size());
    for (auto& [ea, ca] : small) {
      for (auto& [eb, cb] : big) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        auto [it, fresh] = r.terms_.emplace(e, ca * cb);
        if (!fresh) {
          it->second += ca * cb;
          if (it->second.is_zero()) r.terms_.erase(it);
        }
      }
    }
    r.canonicalize_vars();
    return r;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const Rational& c) {
    if (c.is_zero()) return {};
    LaurentPoly r(a);
    for (auto& [e, v] : r.terms_) v *= c;
    return r;
  }
  friend LaurentPoly operator*(const Rational& c, const LaurentPoly& a) { return a * c; }

  LaurentPoly divided_by(const Rational& c) const {
    if (c.is_zero()) throw std::domain_error("LaurentPoly: division by zero constant");
    return *this * c.inverse();
  }

  /// Multiply by the monomial name^e.
  LaurentPoly shifted(const std::string& name, int e) const {
    if (e == 0 || is_zero()) return *this;
    return *this * var(name, e);
  }

  LaurentPoly pow(int e) const {
    if (e < 0) throw std::domain_error("LaurentPoly: negative power (use RationalFunction)");
    LaurentPoly r(Rational(1)), b(*this);
    unsigned n = static_cast<unsigned>(e);
    while (n) {
      if (n & 1) r = r * b;
      b = b * b;
      n >>= 1;
    }
    return r;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  /// Coefficient of name^k, as a polynomial in the remaining variables.
  LaurentPoly coeff_of(const std::string& name, int k) const {
    int idx = var_index(name);
    if (idx < 0) return k == 0 ? *this : LaurentPoly{};
    LaurentPoly r;
    r.vars_ = vars_;
    for (auto& [e, c] : terms_) {
      if (e[idx] != k) continue;
      ExpVec e2 = e;
      e2[idx] = 0;
      r.terms_[e2] = c;
    }
    r.canonicalize_vars();
    return r;
  }

  /// Formal partial derivative.
  LaurentPoly derivative(const std::string& name) const {
    int idx = var_index(name);
    if (idx < 0) return {};
    LaurentPoly r;
    r.vars_ = vars_;
    for (auto& [e, c] : terms_) {
      if (e[idx] == 0) continue;
      ExpVec e2 = e;
      e2[idx] -= 1;
      r.terms_[e2] = c * Rational(e[idx]);
    }
    r.canonicalize_vars();
    return r;
  }

  /// Substitute name -> c (a rational constant); requires c != 0 when negative
  /// exponents of name occur.
  LaurentPoly eval_var(const std::string& name, const Rational& val) const {
    int idx = var_index(name);
    if (idx < 0) return *this;
    LaurentPoly r;
    r.vars_ = vars_;
    for (auto& [e, c] : terms_) {
      if (e[idx] < 0 && val.is_zero())
        throw std::domain_error("LaurentPoly: substituting 0 into a pole");
      Rational c2 = c * qknot::pow(val, e[idx]);
      if (c2.is_zero()) continue;
      ExpVec e2 = e;
      e2[idx] = 0;
      auto [it, fresh] = r.terms_.emplace(e2, c2);
      if (!fresh) {
        it->second += c2;
        if (it->second.is_zero()) r.terms_.erase(it);
      }
    }
    r.canonicalize_vars();
    return r;
  }

  /// Substitute name -> coef * target^e (a monomial in another variable),
  /// e.g. Q -> q^n or Q -> q*Q. Exact and cheap: exponents remap.
  LaurentPoly subst_monomial(const std::string& name, const Rational& coef,
                             const std::string& target, int e) const {
    int idx = var_index(name);
    if (idx < 0) return *this;
    if (coef.is_zero()) throw std::domain_error("LaurentPoly: zero monomial substitution");
    LaurentPoly r;
    for (auto& [ev, c] : terms_) {
      LaurentPoly term(c * qknot::pow(coef, ev[idx]));
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (static_cast<int>(i) == idx) continue;
        if (ev[i] != 0) term = term * var(vars_[i], ev[i]);
      }
      if (ev[idx] != 0) term = term * var(target, ev[idx] * e);
      r += term;
    }
    return r;
  }

  /// Substitute name -> base^i * name (the q-shift twist). A ring
  /// automorphism: each term's base exponent grows by i times its name
  /// exponent.
  LaurentPoly subst_shift(const std::string& name, const std::string& base, int i) const {
    int idx = var_index(name);
    if (idx < 0 || i == 0) return *this;
    int bidx = var_index(base);
    if (bidx == idx) throw std::invalid_argument("subst_shift: base equals shifted variable");
    if (bidx >= 0) {
      LaurentPoly r;
      r.vars_ = vars_;
      for (auto& [e, c] : terms_) {
        ExpVec e2 = e;
        e2[bidx] += i * e[idx];
        r.terms_.emplace(std::move(e2), c);
      }
      r.canonicalize_vars();
      return r;
    }
    LaurentPoly r;
    for (auto& [e, c] : terms_) {
      LaurentPoly term(c);
      for (std::size_t k = 0; k < vars_.size(); ++k)
        if (e[k] != 0) term = term * var(vars_[k], e[k]);
      if (e[idx] != 0) term = term * var(base, i * e[idx]);
      r += term;
    }
    return r;
  }

  /// Renames a variable, scaling its exponents by 1/d (every exponent must be
  /// divisible by d). Fails loudly otherwise. Used to fold u = q^{1/2} powers
  /// back into integral q powers.
  LaurentPoly rename_scaled(const std::string& from, const std::string& to, int d) const {
    int idx = var_index(from);
    if (idx < 0) return *this;
    LaurentPoly r;
    for (auto& [ev, c] : terms_) {
      if (ev[idx] % d != 0)
        throw std::domain_error("LaurentPoly: exponent of " + from + " not divisible by " +
                                std::to_string(d));
      LaurentPoly term(c);
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (static_cast<int>(i) == idx) continue;
        if (ev[i] != 0) term = term * var(vars_[i], ev[i]);
      }
      if (ev[idx] != 0) term = term * var(to, ev[idx] / d);
      r += term;
    }
    return r;
  }

  /// Leading term with respect to the canonical (lex over sorted vars) order.
  std::pair<ExpVec, Rational> leading_term() const {
    if (terms_.empty()) throw std::domain_error("LaurentPoly: leading term of zero");
    return *terms_.rbegin();
  }

  /// Rational content: gcd of coefficients, signed so that content-dividing
  /// makes the leading coefficient positive.
  Rational content() const {
    if (terms_.empty()) return Rational(0);
    Rational g(0);
    for (auto& [e, c] : terms_) g = Rational::content_gcd(g, c);
    if (terms_.rbegin()->second.sign() < 0) g = -g;
    return g;
  }

  /// Divides out the rational content: integer coprime coefficients, positive
  /// leading coefficient.
  LaurentPoly primitive() const {
    if (terms_.empty()) return *this;
    return divided_by(content());
  }

  /// Strips monomial content: shifts each variable so its minimum exponent is 0.
  LaurentPoly monic_shift() const {
    LaurentPoly r(*this);
    for (auto& v : std::vector<std::string>(vars_)) {
      int m = r.min_exponent(v);
      if (m != 0) r = r.shifted(v, -m);
    }
    return r;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      Rational a = c.abs();
      if (first) {
        if (c.sign() < 0) os << "-";
        first = false;
      } else {
        os << (c.sign() < 0 ? " - " : " + ");
      }
      bool unit = a.is_one();
      bool any_var = false;
      std::ostringstream vs;
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (e[i] == 0) continue;
        if (any_var) vs << "*";
        any_var = true;
        vs << vars_[i];
        if (e[i] != 1) vs << "^" << e[i];
      }
      if (!unit || !any_var) {
        os << a.to_string();
        if (any_var) os << "*";
      }
      os << vs.str();
    }
    return os.str();
  }

  /// Returns {a-terms, b-terms, merged vars} with exponent vectors re-indexed
  /// into the merged variable list.
  static std::tuple<std::vector<std::pair<ExpVec, Rational>>,
                    std::vector<std::pair<ExpVec, Rational>>, std::vector<std::string>>
  align(const LaurentPoly& a, const LaurentPoly& b) {
    std::vector<std::string> vars;
    std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                   std::back_inserter(vars));
    auto remap = [&vars](const LaurentPoly& p) {
      std::vector<int> pos(p.vars_.size());
      for (std::size_t i = 0; i < p.vars_.size(); ++i)
        pos[i] = static_cast<int>(std::lower_bound(vars.begin(), vars.end(), p.vars_[i]) - vars.begin());
      std::vector<std::pair<ExpVec, Rational>> out;
      out.reserve(p.terms_.size());
      for (auto& [e, c] : p.terms_) {
        ExpVec e2(vars.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) e2[pos[i]] = e[i];
        out.emplace_back(std::move(e2), c);
      }
      return out;
    };
    return {remap(a), remap(b), vars};
  }

private:
  static LaurentPoly combine(const LaurentPoly& a, const LaurentPoly& b, bool sub) {
    auto [av, bv, vars] = align(a, b);
    LaurentPoly r;
    r.vars_ = vars;
    for (auto& [e, c] : av) r.terms_.emplace(std::move(e), c);
    for (auto& [e, c] : bv) {
      Rational d = sub ? -c : c;
      auto [it, fresh] = r.terms_.emplace(std::move(e), d);
      if (!fresh) {
        it->second += d;
        if (it->second.is_zero()) r.terms_.erase(it);
      }
    }
    r.canonicalize_vars();
    return r;
  }

  void canonicalize_vars() {
    if (vars_.empty()) return;
    std::vector<bool> used(vars_.size(), false);
    for (auto& [e, c] : terms_)
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0) used[i] = true;
    if (std::all_of(used.begin(), used.end(), [](bool u) { return u; })) return;
    std::vector<std::string> nv;
    std::vector<int> keep;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (used[i]) {
        nv.push_back(vars_[i]);
        keep.push_back(static_cast<int>(i));
      }
    std::map<ExpVec, Rational> nt;
    for (auto& [e, c] : terms_) {
      ExpVec e2(keep.size());
      for (std::size_t i = 0; i < keep.size(); ++i) e2[i] = e[keep[i]];
      nt.emplace(std::move(e2), c);
    }
    vars_ = std::move(nv);
    terms_ = std::move(nt);
  }

  std::vector<std::string> vars_;
  std::map<ExpVec, Rational> terms_;
};

}  // namespace qknot
