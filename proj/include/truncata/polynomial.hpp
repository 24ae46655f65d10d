#pragma once

#include <string>
#include <utility>
#include <vector>

#include "truncata/rational.hpp"

namespace truncata {

/// Dense univariate polynomial in q over Q. Coefficients are stored
/// ascending; trailing zeros are trimmed, so the zero polynomial has an
/// empty coefficient vector and degree() == -1.
class PolyQ {
 public:
  PolyQ() = default;
  PolyQ(const Rational& c) {
    if (!c.is_zero()) c_.push_back(c);
  }
  PolyQ(int c) : PolyQ(Rational(c)) {}
  explicit PolyQ(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static PolyQ monomial(const Rational& c, long k);
  static PolyQ variable() { return monomial(Rational(1), 1); }

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monomial() const;
  /// Degree of the lowest nonzero term; -1 for zero.
  long low_degree() const;

  Rational coeff(long k) const {
    return (k >= 0 && k < static_cast<long>(c_.size())) ? c_[k] : Rational(0);
  }
  const Rational& leading() const;
  const std::vector<Rational>& coeffs() const { return c_; }

  PolyQ operator-() const;
  PolyQ& operator+=(const PolyQ& o);
  PolyQ& operator-=(const PolyQ& o);
  friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
  friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
  friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
  friend PolyQ operator*(const Rational& c, const PolyQ& p);

  friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.c_ == b.c_; }
  friend bool operator!=(const PolyQ& a, const PolyQ& b) { return !(a == b); }

  /// Quotient and remainder over the field Q; b must be nonzero.
  static std::pair<PolyQ, PolyQ> divrem(const PolyQ& a, const PolyQ& b);

  /// Monic gcd; gcd(0, 0) = 0.
  static PolyQ gcd(const PolyQ& a, const PolyQ& b);

  PolyQ monic() const;

  Rational eval(const Rational& x) const;

  /// Sparse text form, descending exponents: "q^4 - 1", "3*q^2 + 1/2*q - 7".
  std::string str() const;

  /// Parses the sparse text form (nonnegative exponents only).
  static PolyQ parse(const std::string& s);

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

PolyQ pow(const PolyQ& p, long e);

}  // namespace truncata
