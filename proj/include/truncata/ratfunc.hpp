#pragma once

#include <iosfwd>
#include <string>

#include "truncata/polynomial.hpp"

namespace truncata {

/// Element of Q(q) in canonical form: gcd(num, den) = 1 and den monic.
/// Zero is 0/1.
class RatFuncQ {
 public:
  RatFuncQ() : num_(), den_(Rational(1)) {}
  RatFuncQ(int c) : num_(Rational(c)), den_(Rational(1)) {}
  RatFuncQ(const Rational& c) : num_(c), den_(Rational(1)) {}
  RatFuncQ(const PolyQ& p) : num_(p), den_(Rational(1)) {}
  /// Canonicalizing constructor; throws on zero denominator.
  RatFuncQ(PolyQ num, PolyQ den);

  static RatFuncQ q() { return RatFuncQ(PolyQ::variable()); }
  /// q^k for any integer k.
  static RatFuncQ q_pow(long k);

  const PolyQ& num() const { return num_; }
  const PolyQ& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  RatFuncQ operator-() const;
  RatFuncQ& operator+=(const RatFuncQ& o) { return *this = *this + o; }
  RatFuncQ& operator-=(const RatFuncQ& o) { return *this = *this - o; }
  RatFuncQ& operator*=(const RatFuncQ& o) { return *this = *this * o; }
  RatFuncQ& operator/=(const RatFuncQ& o) { return *this = *this / o; }

  friend RatFuncQ operator+(const RatFuncQ& a, const RatFuncQ& b);
  friend RatFuncQ operator-(const RatFuncQ& a, const RatFuncQ& b);
  friend RatFuncQ operator*(const RatFuncQ& a, const RatFuncQ& b);
  friend RatFuncQ operator/(const RatFuncQ& a, const RatFuncQ& b);

  friend bool operator==(const RatFuncQ& a, const RatFuncQ& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFuncQ& a, const RatFuncQ& b) { return !(a == b); }

  RatFuncQ inverse() const;

  /// Evaluation at a rational point; throws if the denominator vanishes there.
  Rational eval_at(const Rational& x) const;

  /// "num" when den = 1, else "(num)/(den)".
  std::string str() const;

  /// Parses "poly", "(poly)/(poly)", or a poly with negative q-exponents.
  static RatFuncQ parse(const std::string& s);

  friend std::ostream& operator<<(std::ostream& os, const RatFuncQ& x);

 private:
  PolyQ num_, den_;
};

RatFuncQ pow(const RatFuncQ& x, long e);

/// The q-integer (n)_q = (q^{2n} - 1)/(q^2 - 1), a polynomial for n >= 0.
RatFuncQ q_integer(long n);

/// (n)_q! = prod_{k=1..n} (k)_q.
RatFuncQ q_integer_factorial(long n);

}  // namespace truncata
