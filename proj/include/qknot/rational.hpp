#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qknot {

/// Arbitrary-precision rational number.
///
/// Always stored in lowest terms with a positive denominator; zero is 0/1.
/// Backed by GMP. Values are immutable in spirit: arithmetic returns fresh
/// objects and nothing exposes mutable internals.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}                // NOLINT(google-explicit-constructor)
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  /// Parses "n" or "n/d" with optional sign, decimal digits.
  static Rational from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rational(mpq_class(mpz_class(s)));
      mpz_class num(s.substr(0, slash));
      mpz_class den(s.substr(slash + 1));
      if (den == 0) throw std::domain_error("Rational: zero denominator");
      mpq_class q;
      q = mpq_class(num) / mpq_class(den);
      return Rational(q);
    } catch (const std::invalid_argument&) {
      throw std::domain_error("Rational: cannot parse '" + s + "'");
    }
  }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }
  Rational inverse() const {
    if (is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(1) / v_);
  }

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  /// gcd of numerators over lcm-style denominator handling; used for
  /// content extraction. gcd(a,0) = |a|.
  static Rational content_gcd(const Rational& a, const Rational& b) {
    mpz_class num, den;
    mpz_gcd(num.get_mpz_t(), a.v_.get_num_mpz_t(), b.v_.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), a.v_.get_den_mpz_t(), b.v_.get_den_mpz_t());
    if (den == 0) den = 1;
    return Rational(mpq_class(num, den));
  }

  std::string to_string() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  std::size_t hash() const {
    return std::hash<std::string>{}(to_string());
  }

private:
  mpq_class v_;
};

inline Rational pow(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  Rational b = e < 0 ? base.inverse() : base;
  unsigned long n = e < 0 ? -static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
  Rational r(1);
  while (n) {
    if (n & 1) r *= b;
    b *= b;
    n >>= 1;
  }
  return r;
}

}  // namespace qknot
