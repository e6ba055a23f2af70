#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "qknot/ratfun.hpp"

namespace qknot {

/// Names of the operator variables. Coefficients live in Q(q, Q); E is the
/// shift with the twisted relation E a(Q) = a(qQ) E.
inline constexpr const char* kShiftVar = "E";
inline constexpr const char* kQPowerVar = "Q";
inline constexpr const char* kBaseVar = "q";

class QSequence;

/// Element of the localized q-Weyl algebra, stored left-normalized: a finite
/// sum sum_j c_j(Q, q) E^j with rational-function coefficients strictly left
/// of the shift powers. Immutable value semantics.
class WeylOp {
public:
  WeylOp() = default;
  explicit WeylOp(std::map<int, RationalFunction> coeffs) : coeffs_(std::move(coeffs)) {
    prune();
  }
  WeylOp(const RationalFunction& c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) coeffs_[0] = c;
  }

  static WeylOp shift(int j = 1) {
    if (j < 0) throw std::domain_error("WeylOp: negative shift power");
    WeylOp p;
    p.coeffs_[j] = RationalFunction(Rational(1));
    return p;
  }

  static WeylOp q_power() { return WeylOp(RationalFunction(LaurentPoly::var(kQPowerVar))); }

  /// From a bivariate Laurent polynomial in (E, Q) (and q), E-exponents >= 0.
  static WeylOp from_poly(const LaurentPoly& p) {
    if (p.min_exponent(kShiftVar) < 0)
      throw std::domain_error("WeylOp: negative E exponent");
    WeylOp r;
    for (int j = 0; j <= p.degree(kShiftVar); ++j) {
      LaurentPoly c = p.coeff_of(kShiftVar, j);
      if (!c.is_zero()) r.coeffs_[j] = RationalFunction(c);
    }
    return r;
  }

  const std::map<int, RationalFunction>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int e_degree() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

  RationalFunction coeff(int j) const {
    auto it = coeffs_.find(j);
    return it == coeffs_.end() ? RationalFunction() : it->second;
  }

  friend WeylOp operator+(const WeylOp& a, const WeylOp& b) {
    WeylOp r(a);
    for (auto& [j, c] : b.coeffs_) {
      auto [it, fresh] = r.coeffs_.emplace(j, c);
      if (!fresh) it->second += c;
    }
    r.prune();
    return r;
  }
  friend WeylOp operator-(const WeylOp& a, const WeylOp& b) { return a + (-b); }
  WeylOp operator-() const {
    WeylOp r(*this);
    for (auto& [j, c] : r.coeffs_) c = -c;
    return r;
  }

  /// Product in the localized algebra: (a(Q) E^i)(b(Q) E^j) = a(Q) b(q^i Q) E^{i+j}.
  friend WeylOp operator*(const WeylOp& a, const WeylOp& b) {
    WeylOp r;
    for (auto& [i, ca] : a.coeffs_) {
      for (auto& [j, cb] : b.coeffs_) {
        RationalFunction term = ca * twist(cb, i);
        auto [it, fresh] = r.coeffs_.emplace(i + j, term);
        if (!fresh) it->second += term;
      }
    }
    r.prune();
    return r;
  }

  friend WeylOp operator*(const RationalFunction& c, const WeylOp& a) {
    WeylOp r;
    for (auto& [j, cj] : a.coeffs_) r.coeffs_[j] = c * cj;
    r.prune();
    return r;
  }

  friend bool operator==(const WeylOp& a, const WeylOp& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const WeylOp& a, const WeylOp& b) { return !(a == b); }

  /// Coefficient-wise substitution q -> 1 or Q -> 1. Pole error if a
  /// denominator vanishes identically under it.
  WeylOp specialize(const std::string& var) const {
    WeylOp r;
    for (auto& [j, c] : coeffs_) {
      LaurentPoly d = c.den().eval_var(var, Rational(1));
      if (d.is_zero())
        throw std::domain_error("WeylOp: coefficient pole under " + var + " -> 1");
      LaurentPoly n = c.num().eval_var(var, Rational(1));
      RationalFunction v(std::move(n), std::move(d));
      if (!v.is_zero()) r.coeffs_[j] = v;
    }
    return r;
  }

  /// The specialized operator as a Laurent polynomial (coefficients must be
  /// denominator-free).
  LaurentPoly as_poly() const {
    LaurentPoly r;
    for (auto& [j, c] : coeffs_) r += c.as_poly().shifted(kShiftVar, j);
    return r;
  }

  RationalFunction apply(const QSequence& f, int n) const;

  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      if (!s.empty()) s += " + ";
      s += "(" + it->second.to_string() + ")";
      if (it->first > 0) {
        s += "*E";
        if (it->first > 1) s += "^" + std::to_string(it->first);
      }
    }
    return s;
  }

private:
  static RationalFunction twist(const RationalFunction& c, int i) {
    if (i == 0) return c;
    return c.subst_shift(kQPowerVar, kBaseVar, i);  // Q -> q^i Q
  }

  void prune() {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
      if (it->second.is_zero())
        it = coeffs_.erase(it);
      else
        ++it;
    }
    if (!coeffs_.empty() && coeffs_.begin()->first < 0)
      throw std::domain_error("WeylOp: negative E degree");
  }

  std::map<int, RationalFunction> coeffs_;
};

/// Discrete function N -> Q(q) with an internally synchronized memo table;
/// instances may be queried from several threads at once. Copies share the
/// cache.
class QSequence {
public:
  explicit QSequence(std::function<RationalFunction(int)> gen)
      : state_(std::make_shared<State>(std::move(gen))) {}

  RationalFunction at(int n) const {
    if (n < 0) throw std::domain_error("QSequence: negative index");
    {
      std::lock_guard<std::mutex> lk(state_->mu);
      auto it = state_->memo.find(n);
      if (it != state_->memo.end()) return it->second;
    }
    RationalFunction v = state_->gen(n);
    std::lock_guard<std::mutex> lk(state_->mu);
    return state_->memo.emplace(n, std::move(v)).first->second;
  }

  /// Constant-one sequence, handy in tests.
  static QSequence ones() {
    return QSequence([](int) { return RationalFunction(Rational(1)); });
  }

private:
  struct State {
    explicit State(std::function<RationalFunction(int)> g) : gen(std::move(g)) {}
    std::function<RationalFunction(int)> gen;
    std::mutex mu;
    std::unordered_map<int, RationalFunction> memo;
  };
  std::shared_ptr<State> state_;
};

/// (P f)(n) = sum_j c_j(q^n, q) f(n+j), exact over Q(q). Pole error if a
/// coefficient denominator vanishes at Q = q^n.
inline RationalFunction WeylOp::apply(const QSequence& f, int n) const {
  RationalFunction acc;
  for (auto& [j, c] : coeffs_) {
    LaurentPoly den = c.den().subst_monomial(kQPowerVar, Rational(1), kBaseVar, n);
    if (den.is_zero())
      throw std::domain_error("WeylOp: coefficient denominator vanishes at Q=q^" +
                              std::to_string(n));
    LaurentPoly num = c.num().subst_monomial(kQPowerVar, Rational(1), kBaseVar, n);
    acc += RationalFunction(std::move(num), std::move(den)) * f.at(n + j);
  }
  return acc;
}

/// E-coefficient reversal E^{deg_E P} P(E^{-1}, Q) of a bivariate Laurent
/// polynomial; requires nonnegative E-exponents.
inline LaurentPoly op_reverse(const LaurentPoly& p) {
  if (p.min_exponent(kShiftVar) < 0)
    throw std::domain_error("op_reverse: negative E exponent");
  int d = p.degree(kShiftVar);
  LaurentPoly r;
  for (int j = 0; j <= d; ++j) r += p.coeff_of(kShiftVar, j).shifted(kShiftVar, d - j);
  return r;
}

}  // namespace qknot
