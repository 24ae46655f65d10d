#include "truncata/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace truncata {

PolyQ PolyQ::monomial(const Rational& c, long k) {
  if (k < 0) throw Error("PolyQ::monomial: negative exponent");
  if (c.is_zero()) return PolyQ();
  std::vector<Rational> v(static_cast<size_t>(k) + 1, Rational(0));
  v.back() = c;
  return PolyQ(std::move(v));
}

bool PolyQ::is_monomial() const {
  return !is_zero() && low_degree() == degree();
}

long PolyQ::low_degree() const {
  for (size_t k = 0; k < c_.size(); ++k)
    if (!c_[k].is_zero()) return static_cast<long>(k);
  return -1;
}

const Rational& PolyQ::leading() const {
  if (is_zero()) throw Error("PolyQ::leading of zero polynomial");
  return c_.back();
}

PolyQ PolyQ::operator-() const {
  PolyQ r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

PolyQ& PolyQ::operator+=(const PolyQ& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
  if (a.is_zero() || b.is_zero()) return PolyQ();
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return PolyQ(std::move(v));
}

PolyQ operator*(const Rational& c, const PolyQ& p) {
  if (c.is_zero()) return PolyQ();
  PolyQ r = p;
  for (auto& x : r.c_) x *= c;
  return r;
}

std::pair<PolyQ, PolyQ> PolyQ::divrem(const PolyQ& a, const PolyQ& b) {
  if (b.is_zero()) throw DivisionByZero("division by zero in Q(q)");
  if (a.degree() < b.degree()) return {PolyQ(), a};
  std::vector<Rational> rem = a.c_;
  std::vector<Rational> quo(static_cast<size_t>(a.degree() - b.degree()) + 1, Rational(0));
  const Rational lb = b.leading();
  for (long k = a.degree(); k >= b.degree(); --k) {
    Rational c = rem[static_cast<size_t>(k)];
    if (c.is_zero()) continue;
    c /= lb;
    quo[static_cast<size_t>(k - b.degree())] = c;
    for (long j = 0; j <= b.degree(); ++j)
      rem[static_cast<size_t>(k - b.degree() + j)] -= c * b.coeff(j);
  }
  return {PolyQ(std::move(quo)), PolyQ(std::move(rem))};
}

namespace {

// Integer-coefficient view used by the gcd: clears denominators and strips
// content, so the Euclidean loop runs a primitive pseudo-remainder sequence
// over Z[q] instead of letting rational coefficients blow up.
std::vector<mpz_class> to_primitive_z(const PolyQ& p) {
  mpz_class den_lcm = 1;
  for (const auto& c : p.coeffs()) {
    mpz_class d = c.raw().get_den();
    den_lcm = lcm(den_lcm, d);
  }
  std::vector<mpz_class> v;
  v.reserve(p.coeffs().size());
  mpz_class content = 0;
  for (const auto& c : p.coeffs()) {
    mpq_class scaled = c.raw() * mpq_class(den_lcm);
    v.push_back(scaled.get_num());
    content = gcd(content, v.back());
  }
  if (content > 1)
    for (auto& x : v) x /= content;
  return v;
}

long zdeg(const std::vector<mpz_class>& p) {
  for (long k = static_cast<long>(p.size()) - 1; k >= 0; --k)
    if (p[static_cast<size_t>(k)] != 0) return k;
  return -1;
}

void make_primitive(std::vector<mpz_class>& p) {
  mpz_class content = 0;
  for (const auto& x : p) content = gcd(content, x);
  if (content > 1)
    for (auto& x : p) x /= content;
}

// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a mod b.
std::vector<mpz_class> pseudo_rem(std::vector<mpz_class> a, const std::vector<mpz_class>& b) {
  const long db = zdeg(b);
  const mpz_class lb = b[static_cast<size_t>(db)];
  long da = zdeg(a);
  while (da >= db) {
    const mpz_class top = a[static_cast<size_t>(da)];
    for (auto& x : a) x *= lb;
    for (long j = 0; j <= db; ++j)
      a[static_cast<size_t>(da - db + j)] -= top * b[static_cast<size_t>(j)];
    long nda = -1;
    for (long k = da - 1; k >= 0; --k)
      if (a[static_cast<size_t>(k)] != 0) {
        nda = k;
        break;
      }
    da = nda;
  }
  a.resize(static_cast<size_t>(da + 1));
  return a;
}

// --- Modular gcd -----------------------------------------------------------
// Degrees in this engine routinely reach the hundreds while actual common
// factors stay small, so the gcd runs image-first: a gcd over GF(p) of
// degree 0 certifies coprimality (for p not dividing the leading
// coefficients), and a small-degree image is lifted and verified by exact
// division. The pseudo-remainder sequence remains as the fallback.

using u64 = unsigned long long;

constexpr u64 kPrimes[] = {2147483647ULL, 2147483629ULL, 2147483587ULL,
                           2147483579ULL, 2147483563ULL, 2147483549ULL};

std::vector<u64> reduce_mod(const std::vector<mpz_class>& a, u64 p) {
  std::vector<u64> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = mpz_fdiv_ui(a[i].get_mpz_t(), p);
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

u64 mod_pow(u64 b, u64 e, u64 p) {
  u64 r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

void poly_mod_rem(std::vector<u64>& a, const std::vector<u64>& b, u64 p) {
  const u64 inv_lb = mod_pow(b.back(), p - 2, p);
  while (a.size() >= b.size()) {
    const u64 f = a.back() * inv_lb % p;
    if (f != 0) {
      const size_t shift = a.size() - b.size();
      for (size_t j = 0; j < b.size(); ++j) {
        u64& c = a[shift + j];
        c = (c + p - f * b[j] % p) % p;
      }
    }
    a.pop_back();
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
}

// Monic gcd over GF(p).
std::vector<u64> gcd_mod(std::vector<u64> a, std::vector<u64> b, u64 p) {
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    poly_mod_rem(a, b, p);
    std::swap(a, b);
  }
  if (!a.empty() && a.back() != 1) {
    const u64 inv = mod_pow(a.back(), p - 2, p);
    for (auto& c : a) c = c * inv % p;
  }
  return a;
}

// Exact divisibility over Q of primitive integer polynomials.
bool divides_rational(const std::vector<mpz_class>& den_poly,
                      const std::vector<mpz_class>& num_poly) {
  std::vector<mpq_class> rem(num_poly.begin(), num_poly.end());
  const long dd = static_cast<long>(den_poly.size()) - 1;
  const mpq_class lead(den_poly.back());
  long dn = static_cast<long>(rem.size()) - 1;
  while (dn >= dd) {
    mpq_class f = rem[static_cast<size_t>(dn)] / lead;
    if (f != 0)
      for (long j = 0; j <= dd; ++j)
        rem[static_cast<size_t>(dn - dd + j)] -= f * mpq_class(den_poly[static_cast<size_t>(j)]);
    --dn;
    while (dn >= 0 && rem[static_cast<size_t>(dn)] == 0) --dn;
    if (dn < dd) break;
  }
  for (long k = 0; k <= dn; ++k)
    if (rem[static_cast<size_t>(k)] != 0) return false;
  return true;
}

// Lift a monic GF(p) image to a primitive integer candidate with leading
// coefficient gl, coefficients in the symmetric range.
std::vector<mpz_class> lift_candidate(const std::vector<u64>& image, const mpz_class& gl,
                                      u64 p) {
  const u64 gl_mod = mpz_fdiv_ui(gl.get_mpz_t(), p);
  std::vector<mpz_class> out(image.size());
  for (size_t i = 0; i < image.size(); ++i) {
    const u64 c = image[i] * gl_mod % p;
    mpz_class v(static_cast<unsigned long>(c));
    if (c > p / 2) v -= mpz_class(static_cast<unsigned long>(p));
    out[i] = v;
  }
  mpz_class content = 0;
  for (const auto& x : out) content = gcd(content, x);
  if (content > 1)
    for (auto& x : out) x /= content;
  return out;
}

}  // namespace

namespace {

PolyQ gcd_by_prs(std::vector<mpz_class> u, std::vector<mpz_class> v) {
  if (zdeg(u) < zdeg(v)) std::swap(u, v);
  while (zdeg(v) > 0) {
    std::vector<mpz_class> r = pseudo_rem(u, v);
    if (zdeg(r) < 0) {
      std::vector<Rational> out;
      out.reserve(v.size());
      for (const auto& x : v) out.emplace_back(mpq_class(x));
      return PolyQ(std::move(out)).monic();
    }
    make_primitive(r);
    u = std::move(v);
    v = std::move(r);
  }
  return PolyQ(Rational(1));
}

}  // namespace

PolyQ PolyQ::gcd(const PolyQ& a, const PolyQ& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  // q^j | both: split off the common power of q cheaply.
  const long shift = std::min(a.low_degree(), b.low_degree());
  if (a.is_monomial() || b.is_monomial())
    return monomial(Rational(1), shift);

  const std::vector<mpz_class> u = to_primitive_z(a);
  const std::vector<mpz_class> v = to_primitive_z(b);
  const mpz_class gl = ::gcd(u.back(), v.back());

  for (const u64 p : kPrimes) {
    if (mpz_fdiv_ui(u.back().get_mpz_t(), p) == 0 ||
        mpz_fdiv_ui(v.back().get_mpz_t(), p) == 0)
      continue;  // bad prime
    const std::vector<u64> image = gcd_mod(reduce_mod(u, p), reduce_mod(v, p), p);
    if (image.size() <= 1) return PolyQ(Rational(1));  // certified coprime
    const std::vector<mpz_class> cand = lift_candidate(image, gl, p);
    if (divides_rational(cand, u) && divides_rational(cand, v)) {
      std::vector<Rational> out;
      out.reserve(cand.size());
      for (const auto& x : cand) out.emplace_back(mpq_class(x));
      return PolyQ(std::move(out)).monic();
    }
    // unlucky prime or large coefficients: try the next prime
  }
  return gcd_by_prs(u, v);
}

PolyQ PolyQ::monic() const {
  if (is_zero()) return *this;
  return (Rational(1) / leading()) * (*this);
}

Rational PolyQ::eval(const Rational& x) const {
  Rational acc(0);
  for (long k = degree(); k >= 0; --k) acc = acc * x + c_[static_cast<size_t>(k)];
  return acc;
}

std::string PolyQ::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long k = degree(); k >= 0; --k) {
    Rational c = coeff(k);
    if (c.is_zero()) continue;
    if (first) {
      if (c.sign() < 0) {
        os << "-";
        c = -c;
      }
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
      if (c.sign() < 0) c = -c;
    }
    if (k == 0) {
      os << c.str();
    } else {
      if (!c.is_one()) os << c.str() << "*";
      os << "q";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
};

Rational parse_number(Cursor& c) {
  c.skip_ws();
  size_t start = c.i;
  while (c.i < c.s.size() &&
         (std::isdigit(static_cast<unsigned char>(c.s[c.i])) || c.s[c.i] == '/'))
    ++c.i;
  if (c.i == start) throw Error("bad polynomial literal near '" + c.s.substr(start) + "'");
  return Rational::from_string(c.s.substr(start, c.i - start));
}

long parse_exponent(Cursor& c) {
  c.skip_ws();
  bool neg = false;
  if (c.peek() == '-') {
    neg = true;
    ++c.i;
  }
  c.skip_ws();
  size_t start = c.i;
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
  if (c.i == start) throw Error("bad exponent in polynomial literal");
  long e = std::stol(c.s.substr(start, c.i - start));
  return neg ? -e : e;
}

}  // namespace

PolyQ PolyQ::parse(const std::string& s) {
  Cursor c{s};
  PolyQ result;
  bool expect_term = true;
  int sign = 1;
  while (!c.done()) {
    char ch = c.peek();
    if (ch == '+') {
      ++c.i;
      expect_term = true;
      continue;
    }
    if (ch == '-') {
      ++c.i;
      sign = -sign;
      expect_term = true;
      continue;
    }
    if (!expect_term) throw Error("bad polynomial literal: '" + s + "'");
    Rational coef(1);
    bool have_coef = false;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      coef = parse_number(c);
      have_coef = true;
    }
    long exp = 0;
    c.skip_ws();
    if (c.peek() == '*') {
      ++c.i;
      c.skip_ws();
    }
    if (c.peek() == 'q') {
      ++c.i;
      exp = 1;
      if (c.peek() == '^') {
        ++c.i;
        exp = parse_exponent(c);
      }
    } else if (!have_coef) {
      throw Error("bad polynomial literal: '" + s + "'");
    }
    if (exp < 0) throw Error("negative exponent not allowed in PolyQ::parse");
    result += monomial(sign < 0 ? -coef : coef, exp);
    sign = 1;
    expect_term = false;
  }
  if (expect_term) throw Error("bad polynomial literal: '" + s + "'");
  return result;
}

PolyQ pow(const PolyQ& p, long e) {
  if (e < 0) throw Error("PolyQ pow: negative exponent");
  PolyQ r(Rational(1)), b = p;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

}  // namespace truncata
