#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "truncata/errors.hpp"

namespace truncata {

/// Exact rational number backed by GMP, always in canonical form:
/// gcd(|num|, den) = 1 and den >= 1.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(long num, long den);
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses "p" or "p/q" with optional sign.
  static Rational from_string(const std::string& s);

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  /// Value as long; requires an integer that fits.
  long to_long() const;

  const mpq_class& raw() const { return v_; }

  Rational operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
  }

  Rational& operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
  }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(const Rational& a, const Rational& b) {
    Rational r;
    r.v_ = a.v_ + b.v_;
    return r;
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    Rational r;
    r.v_ = a.v_ - b.v_;
    return r;
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    Rational r;
    r.v_ = a.v_ * b.v_;
    return r;
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    Rational r = a;
    r /= b;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  /// "p" when den = 1, else "p/q".
  std::string str() const;

  friend std::ostream& operator<<(std::ostream& os, const Rational& x);

 private:
  mpq_class v_;
};

Rational pow(const Rational& x, long e);

/// r(r-1)...(r-k+1) / k!
Rational generalized_binomial(const Rational& r, long k);

Rational factorial(long n);

}  // namespace truncata
