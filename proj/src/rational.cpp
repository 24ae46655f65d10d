#include "truncata/rational.hpp"

#include <ostream>

namespace truncata {

Rational::Rational(long num, long den) {
  if (den == 0) throw DivisionByZero("division by zero in Q");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::from_string(const std::string& s) {
  if (s.empty()) throw Error("empty rational literal");
  mpq_class v;
  if (v.set_str(s, 10) != 0) throw Error("bad rational literal: '" + s + "'");
  if (v.get_den() == 0) throw DivisionByZero("division by zero in Q");
  v.canonicalize();
  return Rational(std::move(v));
}

long Rational::to_long() const {
  if (!is_integer() || !v_.get_num().fits_slong_p())
    throw Error("rational " + str() + " is not a small integer");
  return v_.get_num().get_si();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero("division by zero in Q");
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const {
  return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& x) {
  return os << x.str();
}

Rational pow(const Rational& x, long e) {
  if (e < 0) {
    if (x.is_zero()) throw DivisionByZero("division by zero in Q");
    return pow(Rational(1) / x, -e);
  }
  Rational r(1), b = x;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Rational generalized_binomial(const Rational& r, long k) {
  if (k < 0) throw Error("generalized_binomial: negative k");
  Rational acc(1);
  for (long j = 0; j < k; ++j) {
    acc *= (r - Rational(j));
    acc /= Rational(j + 1);
  }
  return acc;
}

Rational factorial(long n) {
  if (n < 0) throw Error("factorial: negative argument");
  Rational acc(1);
  for (long j = 2; j <= n; ++j) acc *= Rational(j);
  return acc;
}

}  // namespace truncata
