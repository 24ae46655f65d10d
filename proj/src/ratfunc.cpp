#include "truncata/ratfunc.hpp"

#include <ostream>

namespace truncata {

RatFuncQ::RatFuncQ(PolyQ num, PolyQ den) {
  if (den.is_zero()) throw DivisionByZero("division by zero in ℚ(q)");
  if (num.is_zero()) {
    num_ = PolyQ();
    den_ = PolyQ(Rational(1));
    return;
  }
  if (!den.is_one()) {
    PolyQ g = PolyQ::gcd(num, den);
    if (g.degree() > 0) {
      num = PolyQ::divrem(num, g).first;
      den = PolyQ::divrem(den, g).first;
    }
    const Rational lead = den.leading();
    if (!lead.is_one()) {
      const Rational inv = Rational(1) / lead;
      num = inv * num;
      den = inv * den;
    }
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

RatFuncQ RatFuncQ::q_pow(long k) {
  if (k >= 0) return RatFuncQ(PolyQ::monomial(Rational(1), k));
  return RatFuncQ(PolyQ(Rational(1)), PolyQ::monomial(Rational(1), -k));
}

RatFuncQ RatFuncQ::operator-() const {
  RatFuncQ r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFuncQ operator+(const RatFuncQ& a, const RatFuncQ& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFuncQ(a.num_ + b.num_, a.den_);
  return RatFuncQ(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFuncQ operator-(const RatFuncQ& a, const RatFuncQ& b) {
  return a + (-b);
}

RatFuncQ operator*(const RatFuncQ& a, const RatFuncQ& b) {
  if (a.is_zero() || b.is_zero()) return RatFuncQ();
  if (a.den_.is_one() && b.den_.is_one()) {
    RatFuncQ r;
    r.num_ = a.num_ * b.num_;
    r.den_ = PolyQ(Rational(1));
    return r;
  }
  // Cross-reduce before multiplying to keep degrees down.
  const PolyQ g1 = PolyQ::gcd(a.num_, b.den_);
  const PolyQ g2 = PolyQ::gcd(b.num_, a.den_);
  PolyQ an = g1.degree() > 0 ? PolyQ::divrem(a.num_, g1).first : a.num_;
  PolyQ bd = g1.degree() > 0 ? PolyQ::divrem(b.den_, g1).first : b.den_;
  PolyQ bn = g2.degree() > 0 ? PolyQ::divrem(b.num_, g2).first : b.num_;
  PolyQ ad = g2.degree() > 0 ? PolyQ::divrem(a.den_, g2).first : a.den_;
  return RatFuncQ(an * bn, ad * bd);
}

RatFuncQ operator/(const RatFuncQ& a, const RatFuncQ& b) {
  return a * b.inverse();
}

RatFuncQ RatFuncQ::inverse() const {
  if (is_zero()) throw DivisionByZero("division by zero in ℚ(q)");
  return RatFuncQ(den_, num_);
}

Rational RatFuncQ::eval_at(const Rational& x) const {
  const Rational d = den_.eval(x);
  if (d.is_zero()) throw DivisionByZero("denominator vanishes at evaluation point");
  return num_.eval(x) / d;
}

std::string RatFuncQ::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFuncQ& x) {
  return os << x.str();
}

namespace {

// Splits "(num)/(den)" at the top level; returns false if s is not of that shape.
bool split_fraction(const std::string& s, std::string& num, std::string& den) {
  size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  if (i >= s.size() || s[i] != '(') return false;
  int depth = 0;
  size_t start = i;
  size_t close = std::string::npos;
  for (size_t j = i; j < s.size(); ++j) {
    if (s[j] == '(') ++depth;
    if (s[j] == ')') {
      --depth;
      if (depth == 0) {
        close = j;
        break;
      }
    }
  }
  if (close == std::string::npos) return false;
  size_t k = close + 1;
  while (k < s.size() && std::isspace(static_cast<unsigned char>(s[k]))) ++k;
  if (k >= s.size() || s[k] != '/') return false;
  ++k;
  while (k < s.size() && std::isspace(static_cast<unsigned char>(s[k]))) ++k;
  if (k >= s.size() || s[k] != '(') return false;
  size_t close2 = s.find_last_of(')');
  if (close2 == std::string::npos || close2 <= k) return false;
  for (size_t j = close2 + 1; j < s.size(); ++j)
    if (!std::isspace(static_cast<unsigned char>(s[j]))) return false;
  num = s.substr(start + 1, close - start - 1);
  den = s.substr(k + 1, close2 - k - 1);
  return true;
}

// Laurent-polynomial parse: like PolyQ::parse but negative exponents allowed.
RatFuncQ parse_laurent(const std::string& s) {
  // Find the most negative exponent, multiply through by q^{-min}, then divide.
  // Cheap approach: parse term by term, accumulating as RatFuncQ.
  RatFuncQ acc;
  size_t i = 0;
  auto skip_ws = [&]() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  bool expect_term = true;
  int sign = 1;
  while (true) {
    skip_ws();
    if (i >= s.size()) break;
    char ch = s[i];
    if (ch == '+') {
      ++i;
      expect_term = true;
      continue;
    }
    if (ch == '-') {
      ++i;
      sign = -sign;
      expect_term = true;
      continue;
    }
    if (!expect_term) throw Error("bad rational-function literal: '" + s + "'");
    Rational coef(1);
    bool have_coef = false;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      size_t start = i;
      while (i < s.size() &&
             (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/'))
        ++i;
      coef = Rational::from_string(s.substr(start, i - start));
      have_coef = true;
    }
    long exp = 0;
    skip_ws();
    if (i < s.size() && s[i] == '*') {
      ++i;
      skip_ws();
    }
    if (i < s.size() && s[i] == 'q') {
      ++i;
      exp = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        skip_ws();
        bool neg = false;
        if (i < s.size() && s[i] == '-') {
          neg = true;
          ++i;
        }
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw Error("bad exponent in '" + s + "'");
        exp = std::stol(s.substr(start, i - start));
        if (neg) exp = -exp;
      }
    } else if (!have_coef) {
      throw Error("bad rational-function literal: '" + s + "'");
    }
    RatFuncQ term = RatFuncQ(sign < 0 ? -coef : coef) * RatFuncQ::q_pow(exp);
    acc += term;
    sign = 1;
    expect_term = false;
  }
  if (expect_term) throw Error("bad rational-function literal: '" + s + "'");
  return acc;
}

}  // namespace

RatFuncQ RatFuncQ::parse(const std::string& s) {
  std::string num, den;
  if (split_fraction(s, num, den))
    return parse_laurent(num) / parse_laurent(den);
  return parse_laurent(s);
}

RatFuncQ pow(const RatFuncQ& x, long e) {
  if (e < 0) return pow(x.inverse(), -e);
  RatFuncQ r(1), b = x;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

RatFuncQ q_integer(long n) {
  if (n < 0) throw Error("q_integer: negative argument");
  // (q^{2n} - 1)/(q^2 - 1) = 1 + q^2 + ... + q^{2(n-1)}
  std::vector<Rational> c(n > 0 ? static_cast<size_t>(2 * (n - 1)) + 1 : 0, Rational(0));
  for (long k = 0; k < n; ++k) c[static_cast<size_t>(2 * k)] = Rational(1);
  return RatFuncQ(PolyQ(std::move(c)));
}

RatFuncQ q_integer_factorial(long n) {
  if (n < 0) throw Error("q_integer_factorial: negative argument");
  RatFuncQ acc(1);
  for (long k = 1; k <= n; ++k) acc *= q_integer(k);
  return acc;
}

}  // namespace truncata
