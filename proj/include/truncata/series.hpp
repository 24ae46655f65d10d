#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "truncata/field.hpp"
#include "truncata/matrix_ops.hpp"

namespace truncata {

/// Direction of the expansion variable: ascending powers of z, or of z^{-1}.
enum class Direction { asc_z, asc_zinv };

/// A finite window of a formal Laurent series with matrix coefficients
/// (scalars are 1x1). Writing w for the direction variable (z or z^{-1}),
/// the series is sum_k coeff(offset + k) * w^{offset+k}. Exponents below
/// offset are exactly zero; exponents above valid_to() are unknown, and all
/// operations propagate the guaranteed-valid window.
template <typename S>
class TruncSeries {
 public:
  TruncSeries(Direction dir, long offset, std::vector<DenseMat<S>> coeffs)
      : dir_(dir), offset_(offset), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw Error("TruncSeries: empty coefficient window");
    rows_ = coeffs_[0].rows();
    cols_ = coeffs_[0].cols();
    for (const auto& c : coeffs_)
      if (c.rows() != rows_ || c.cols() != cols_)
        throw ShapeError("TruncSeries: coefficient shapes differ");
  }

  static TruncSeries zero(Direction dir, Eigen::Index rows, Eigen::Index cols,
                          long valid_to) {
    if (valid_to < 0) throw Error("TruncSeries::zero: negative window");
    return TruncSeries(dir, 0,
                       std::vector<DenseMat<S>>(static_cast<size_t>(valid_to) + 1,
                                                truncata::zero<S>(rows, cols)));
  }

  /// The constant series 1 (identity matrix), exactly known up to valid_to.
  static TruncSeries one(Direction dir, Eigen::Index n, long valid_to) {
    auto s = zero(dir, n, n, valid_to);
    s.coeffs_[0] = identity<S>(n);
    return s;
  }

  /// c * w^e, exactly known up to valid_to (>= e).
  static TruncSeries monomial(Direction dir, long e, DenseMat<S> c, long valid_to) {
    if (valid_to < e) throw Error("TruncSeries::monomial: window below exponent");
    std::vector<DenseMat<S>> v(static_cast<size_t>(valid_to - e) + 1,
                               truncata::zero<S>(c.rows(), c.cols()));
    v[0] = std::move(c);
    return TruncSeries(dir, e, std::move(v));
  }

  Direction dir() const { return dir_; }
  long offset() const { return offset_; }
  long order() const { return static_cast<long>(coeffs_.size()) - 1; }
  long valid_to() const { return offset_ + order(); }
  Eigen::Index rows() const { return rows_; }
  Eigen::Index cols() const { return cols_; }
  bool is_scalar() const { return rows_ == 1 && cols_ == 1; }

  /// Coefficient of w^e. Exact zero below the offset; throws above valid_to.
  DenseMat<S> coeff_at(long e) const {
    if (e > valid_to())
      throw Error("TruncSeries: coefficient requested beyond valid window");
    if (e < offset_) return truncata::zero<S>(rows_, cols_);
    return coeffs_[static_cast<size_t>(e - offset_)];
  }

  const std::vector<DenseMat<S>>& coeffs() const { return coeffs_; }

  /// Restricts the guaranteed window to new_valid_to.
  TruncSeries truncated(long new_valid_to) const {
    if (new_valid_to >= valid_to()) return *this;
    if (new_valid_to < offset_)
      throw Error("TruncSeries::truncated: window vanished");
    std::vector<DenseMat<S>> v(coeffs_.begin(),
                               coeffs_.begin() + (new_valid_to - offset_ + 1));
    return TruncSeries(dir_, offset_, std::move(v));
  }

  /// Multiplies by w^d.
  TruncSeries shifted_by_monomial(long d) const {
    TruncSeries r = *this;
    r.offset_ += d;
    return r;
  }

  /// Lowest exponent carrying a nonzero coefficient, or valid_to() + 1 if the
  /// window is entirely zero.
  long low_exponent() const {
    for (long e = offset_; e <= valid_to(); ++e)
      if (!truncata::is_zero(coeff_at(e))) return e;
    return valid_to() + 1;
  }

  /// Drops exactly-zero coefficients below the first nonzero one.
  TruncSeries low_trimmed() const {
    const long low = std::min(low_exponent(), valid_to());
    if (low <= offset_) return *this;
    std::vector<DenseMat<S>> v(coeffs_.begin() + (low - offset_), coeffs_.end());
    return TruncSeries(dir_, low, std::move(v));
  }

  TruncSeries operator-() const {
    TruncSeries r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

 private:
  Direction dir_;
  long offset_;
  std::vector<DenseMat<S>> coeffs_;
  Eigen::Index rows_, cols_;
};

namespace detail {

template <typename S>
void require_same_dir(const TruncSeries<S>& a, const TruncSeries<S>& b) {
  if (a.dir() != b.dir())
    throw Error("series direction mismatch");
}

}  // namespace detail

template <typename S>
TruncSeries<S> operator+(const TruncSeries<S>& a, const TruncSeries<S>& b) {
  detail::require_same_dir(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeError("series addition: shapes differ");
  const long lo = std::min(a.offset(), b.offset());
  const long hi = std::min(a.valid_to(), b.valid_to());
  if (hi < lo) throw Error("series addition: empty common window");
  std::vector<DenseMat<S>> v;
  v.reserve(static_cast<size_t>(hi - lo) + 1);
  for (long e = lo; e <= hi; ++e) v.push_back(a.coeff_at(e) + b.coeff_at(e));
  return TruncSeries<S>(a.dir(), lo, std::move(v));
}

template <typename S>
TruncSeries<S> operator-(const TruncSeries<S>& a, const TruncSeries<S>& b) {
  return a + (-b);
}

namespace detail {

// Coefficient product with 1x1 broadcast, so scalar series compose with
// matrix series.
template <typename S>
DenseMat<S> coeff_mul(const DenseMat<S>& a, const DenseMat<S>& b) {
  if (a.rows() == 1 && a.cols() == 1 && !(b.rows() == 1 && b.cols() == 1))
    return scalar_mul(a(0, 0), b);
  if (b.rows() == 1 && b.cols() == 1 && !(a.rows() == 1 && a.cols() == 1))
    return scalar_mul(b(0, 0), a);
  if (a.cols() != b.rows()) throw ShapeError("series product: shapes incompatible");
  return a * b;
}

template <typename S>
TruncSeries<S> bilinear_product(
    const TruncSeries<S>& a, const TruncSeries<S>& b,
    const std::function<DenseMat<S>(const DenseMat<S>&, const DenseMat<S>&)>& f) {
  require_same_dir(a, b);
  const long lo = a.offset() + b.offset();
  const long hi = std::min(a.valid_to() + b.offset(), b.valid_to() + a.offset());
  if (hi < lo) throw Error("series product: empty valid window");
  std::vector<DenseMat<S>> v;
  v.reserve(static_cast<size_t>(hi - lo) + 1);
  DenseMat<S> probe = f(a.coeff_at(a.offset()), b.coeff_at(b.offset()));
  for (long e = lo; e <= hi; ++e) v.push_back(zero<S>(probe.rows(), probe.cols()));
  for (long i = a.offset(); i <= a.valid_to(); ++i) {
    if (is_zero(a.coeff_at(i))) continue;
    for (long j = b.offset(); j <= b.valid_to(); ++j) {
      const long e = i + j;
      if (e > hi) break;
      v[static_cast<size_t>(e - lo)] += f(a.coeff_at(i), b.coeff_at(j));
    }
  }
  return TruncSeries<S>(a.dir(), lo, std::move(v));
}

}  // namespace detail

/// Cauchy product, truncated to the common guaranteed window.
template <typename S>
TruncSeries<S> operator*(const TruncSeries<S>& a, const TruncSeries<S>& b) {
  return detail::bilinear_product<S>(a, b, [](const DenseMat<S>& x, const DenseMat<S>& y) {
    return detail::coeff_mul(x, y);
  });
}

/// Coefficientwise tensor product: sum_k ( sum_{i+j=k} A_i (x) B_j ) w^k.
template <typename S>
TruncSeries<S> kron_series(const TruncSeries<S>& a, const TruncSeries<S>& b) {
  return detail::bilinear_product<S>(
      a, b, [](const DenseMat<S>& x, const DenseMat<S>& y) { return kron(x, y); });
}

template <typename S>
TruncSeries<S> scalar_mul_series(const S& c, const TruncSeries<S>& a) {
  std::vector<DenseMat<S>> v;
  v.reserve(a.coeffs().size());
  for (const auto& m : a.coeffs()) v.push_back(scalar_mul(c, m));
  return TruncSeries<S>(a.dir(), a.offset(), std::move(v));
}

/// Per-coefficient commutator with a constant matrix: [A(z), m].
template <typename S>
TruncSeries<S> comm_const(const TruncSeries<S>& a, const DenseMat<S>& m) {
  std::vector<DenseMat<S>> v;
  v.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) v.push_back(comm(c, m));
  return TruncSeries<S>(a.dir(), a.offset(), std::move(v));
}

/// Per-coefficient commutator [m, A(z)].
template <typename S>
TruncSeries<S> comm_const(const DenseMat<S>& m, const TruncSeries<S>& a) {
  std::vector<DenseMat<S>> v;
  v.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) v.push_back(comm(m, c));
  return TruncSeries<S>(a.dir(), a.offset(), std::move(v));
}

/// Multiplicative inverse; the lowest coefficient must be invertible.
template <typename S>
TruncSeries<S> series_inv(const TruncSeries<S>& a) {
  DenseMat<S> lead_inv;
  try {
    lead_inv = exact_inverse(a.coeff_at(a.offset()));
  } catch (const SingularMatrixError&) {
    throw Error("series_inv: non-invertible leading coefficient");
  }
  const long n = a.order();
  std::vector<DenseMat<S>> b(static_cast<size_t>(n) + 1);
  b[0] = lead_inv;
  for (long k = 1; k <= n; ++k) {
    DenseMat<S> acc = zero<S>(a.rows(), a.cols());
    for (long i = 1; i <= k; ++i)
      acc += detail::coeff_mul(a.coeff_at(a.offset() + i), b[static_cast<size_t>(k - i)]);
    b[static_cast<size_t>(k)] = -(lead_inv * acc);
  }
  return TruncSeries<S>(a.dir(), -a.offset(), std::move(b));
}

/// A(z + delta) for a z^{-1}-direction window, expanded by the generalized
/// binomial theorem: (z+delta)^{-e} = sum_t C(-e, t) delta^t z^{-e-t}.
template <typename S>
TruncSeries<S> shift_additive(const TruncSeries<S>& a, const S& delta) {
  if (a.dir() != Direction::asc_zinv)
    throw Error("shift_additive requires a z^{-1}-direction series");
  const long lo = a.offset(), hi = a.valid_to();
  std::vector<DenseMat<S>> v(static_cast<size_t>(hi - lo) + 1,
                             zero<S>(a.rows(), a.cols()));
  for (long e = lo; e <= hi; ++e) {
    const DenseMat<S>& c = a.coeff_at(e);
    if (is_zero(c)) continue;
    S delta_pow = S(1);
    for (long t = 0; e + t <= hi; ++t) {
      const Rational bin = generalized_binomial(Rational(-e), t);
      if (!bin.is_zero()) {
        const S w = FieldTraits<S>::from_rational(bin) * delta_pow;
        v[static_cast<size_t>(e + t - lo)] += scalar_mul(w, c);
      }
      delta_pow *= delta;
    }
  }
  return TruncSeries<S>(a.dir(), lo, std::move(v));
}

/// A(c z): the coefficient of z^k picks up c^k (and z^{-k} picks up c^{-k}).
template <typename S>
TruncSeries<S> shift_scale(const TruncSeries<S>& a, const S& c) {
  if (c.is_zero()) throw Error("shift_scale: scale factor must be invertible");
  std::vector<DenseMat<S>> v;
  v.reserve(a.coeffs().size());
  for (long e = a.offset(); e <= a.valid_to(); ++e) {
    const long zexp = a.dir() == Direction::asc_z ? e : -e;
    v.push_back(scalar_mul(scalar_pow(c, zexp), a.coeff_at(e)));
  }
  return TruncSeries<S>(a.dir(), a.offset(), std::move(v));
}

/// Applies fn(exponent) as a scalar multiplier per coefficient.
template <typename S>
TruncSeries<S> scale_exponents(const TruncSeries<S>& a,
                               const std::function<S(long)>& fn) {
  std::vector<DenseMat<S>> v;
  v.reserve(a.coeffs().size());
  for (long e = a.offset(); e <= a.valid_to(); ++e)
    v.push_back(scalar_mul(fn(e), a.coeff_at(e)));
  return TruncSeries<S>(a.dir(), a.offset(), std::move(v));
}

/// Formal log of a series with constant term 1 (identity matrix).
template <typename S>
TruncSeries<S> series_log(const TruncSeries<S>& a) {
  if (a.offset() > 0 || !is_identity(a.coeff_at(0)))
    throw Error("series_log: constant term must be the identity");
  const long hi = a.valid_to();
  TruncSeries<S> y = a - TruncSeries<S>::one(a.dir(), a.rows(), hi);
  TruncSeries<S> acc = TruncSeries<S>::zero(a.dir(), a.rows(), a.cols(), hi);
  if (y.low_exponent() > hi) return acc;
  TruncSeries<S> term = TruncSeries<S>::one(a.dir(), a.rows(), hi);
  for (long k = 1; k <= hi; ++k) {
    term = (term * y).truncated(hi);
    if (term.low_exponent() > hi) break;
    S c = FieldTraits<S>::from_rational(Rational((k % 2) ? 1 : -1, k));
    acc = acc + scalar_mul_series(c, term);
  }
  return acc;
}

/// Formal exp of a series with zero constant term.
template <typename S>
TruncSeries<S> series_exp(const TruncSeries<S>& a) {
  const long low = a.low_exponent();
  if (low < 1) throw Error("series_exp: constant term must vanish");
  const long hi = a.valid_to();
  TruncSeries<S> acc = TruncSeries<S>::one(a.dir(), a.rows(), hi);
  if (low > hi) return acc;
  const TruncSeries<S> x = a.low_trimmed();
  TruncSeries<S> term = TruncSeries<S>::one(a.dir(), a.rows(), hi);
  Rational kfact(1);
  for (long k = 1; k <= hi; ++k) {
    term = (term * x).truncated(hi);
    kfact *= Rational(k);
    if (term.low_exponent() > hi) break;
    acc = acc + scalar_mul_series(FieldTraits<S>::from_rational(Rational(1) / kfact), term);
  }
  return acc;
}

/// Nonzero residuals A - B per exponent over the common guaranteed window.
template <typename S>
std::vector<std::pair<long, DenseMat<S>>> series_residuals(const TruncSeries<S>& a,
                                                           const TruncSeries<S>& b) {
  detail::require_same_dir(a, b);
  const long lo = std::min(a.offset(), b.offset());
  const long hi = std::min(a.valid_to(), b.valid_to());
  std::vector<std::pair<long, DenseMat<S>>> out;
  for (long e = lo; e <= hi; ++e) {
    DenseMat<S> d = a.coeff_at(e) - b.coeff_at(e);
    if (!is_zero(d)) out.emplace_back(e, std::move(d));
  }
  return out;
}

template <typename S>
bool series_equal(const TruncSeries<S>& a, const TruncSeries<S>& b) {
  return series_residuals(a, b).empty();
}

/// Window sum at a point: sum over the valid window of coeff * z0^(z-exponent).
template <typename S>
DenseMat<S> series_eval_at(const TruncSeries<S>& a, const S& z0) {
  DenseMat<S> acc = zero<S>(a.rows(), a.cols());
  for (long e = a.offset(); e <= a.valid_to(); ++e) {
    const long zexp = a.dir() == Direction::asc_z ? e : -e;
    acc += scalar_mul(scalar_pow(z0, zexp), a.coeff_at(e));
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Polynomials in z and their series windows.

/// Polynomial in z with scalar coefficients, ascending powers.
template <typename S>
using ZPoly = std::vector<S>;

template <typename S>
long zpoly_degree(const ZPoly<S>& p) {
  for (long k = static_cast<long>(p.size()) - 1; k >= 0; --k)
    if (!p[static_cast<size_t>(k)].is_zero()) return k;
  return -1;
}

template <typename S>
ZPoly<S> zpoly_mul(const ZPoly<S>& a, const ZPoly<S>& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly<S> r(a.size() + b.size() - 1, S(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

/// z + c as a ZPoly.
template <typename S>
ZPoly<S> zpoly_linear(const S& c) {
  return {c, S(1)};
}

template <typename S>
std::string zpoly_str(const ZPoly<S>& p) {
  const long d = zpoly_degree(p);
  if (d < 0) return "0";
  std::string out;
  for (long k = d; k >= 0; --k) {
    S c = p[static_cast<size_t>(k)];
    if (c.is_zero()) continue;
    std::string cs = c.str();
    const bool compound = cs.find(' ') != std::string::npos;
    if (!out.empty()) {
      if (!compound && cs[0] == '-') {
        out += " - ";
        cs = (-c).str();
      } else {
        out += " + ";
      }
    }
    if (compound) cs = "(" + cs + ")";
    if (k == 0) {
      out += cs;
    } else {
      if (!c.is_one()) out += cs + "*";
      out += (k == 1) ? "z" : ("z^" + std::to_string(k));
    }
  }
  return out;
}

/// Exact series window of a polynomial in z. For asc_z the window is
/// [0, valid_to]; for asc_zinv it is [-deg, valid_to] in z^{-1}-exponents.
template <typename S>
TruncSeries<S> zpoly_series(const ZPoly<S>& p, Direction dir, long valid_to) {
  const long d = zpoly_degree(p);
  auto mat = [](const S& c) {
    DenseMat<S> m(1, 1);
    m(0, 0) = c;
    return m;
  };
  if (d < 0) return TruncSeries<S>::zero(dir, 1, 1, valid_to);
  if (dir == Direction::asc_z) {
    std::vector<DenseMat<S>> v;
    for (long e = 0; e <= std::max(d, valid_to); ++e)
      v.push_back(mat(e <= d ? p[static_cast<size_t>(e)] : S(0)));
    return TruncSeries<S>(dir, 0, std::move(v)).truncated(valid_to);
  }
  // z^t = w^{-t}
  std::vector<DenseMat<S>> v;
  for (long e = -d; e <= valid_to; ++e)
    v.push_back(mat(-e >= 0 && -e <= d ? p[static_cast<size_t>(-e)] : S(0)));
  return TruncSeries<S>(dir, -d, std::move(v));
}

/// Expansion of num(z)/den(z) in the given direction. For asc_z the constant
/// term of den must be invertible; for asc_zinv its leading term must be.
template <typename S>
TruncSeries<S> zpoly_ratio_series(const ZPoly<S>& num, const ZPoly<S>& den,
                                  Direction dir, long valid_to) {
  const long dd = zpoly_degree<S>(den);
  if (dd < 0) throw DivisionByZero("zpoly_ratio_series: zero denominator");
  const long dn = zpoly_degree<S>(num);
  const long guard = dir == Direction::asc_zinv ? std::max(dn, dd) : 0;
  TruncSeries<S> n = zpoly_series(num, dir, valid_to + guard);
  TruncSeries<S> d = zpoly_series(den, dir, valid_to + guard);
  return (n * series_inv(d)).truncated(valid_to);
}

// ---------------------------------------------------------------------------
// Two-factor difference equations U(z) * U(sigma(z)) = G(z).

template <typename S>
struct ShiftSpec {
  enum class Kind { additive, scale };
  Kind kind;
  S value;

  static ShiftSpec additive(S delta) { return {Kind::additive, std::move(delta)}; }
  static ShiftSpec scale(S c) { return {Kind::scale, std::move(c)}; }
};

/// Applies the substitution z -> z + delta or z -> c z.
template <typename S>
TruncSeries<S> apply_shift(const TruncSeries<S>& a, const ShiftSpec<S>& shift) {
  return shift.kind == ShiftSpec<S>::Kind::additive ? shift_additive(a, shift.value)
                                                    : shift_scale(a, shift.value);
}

/// Solves U(z) * U(sigma(z)) = G(z) coefficient by coefficient, where G has
/// constant term 1 (identity). The coefficient-k equation is triangular:
/// (1 + s_k) U_k = G_k - (terms in U_{<k}), with s_k = 1 for the additive
/// shift and s_k = c^{±k} for the scale shift.
template <typename S>
TruncSeries<S> solve_two_factor(const TruncSeries<S>& g_in, const ShiftSpec<S>& shift) {
  const TruncSeries<S> g = g_in.low_trimmed();
  if (g.offset() > 0)
    throw Error("solve_two_factor: G must start at exponent 0");
  if (g.offset() < 0 || !is_identity(g.coeff_at(0)))
    throw Error("solve_two_factor: leading term of G is not the identity");
  if (shift.kind == ShiftSpec<S>::Kind::additive && g.dir() != Direction::asc_zinv)
    throw Error("solve_two_factor: additive shift requires z^{-1} direction");
  const long n = g.valid_to();
  const Eigen::Index dim = g.rows();

  // shiftco(e, t): scalar carrying U_e into sigma(U)_{e+t}.
  auto shiftco = [&](long e, long t) -> S {
    if (shift.kind == ShiftSpec<S>::Kind::scale) {
      if (t != 0) return S(0);
      const long zexp = g.dir() == Direction::asc_z ? e : -e;
      return scalar_pow(shift.value, zexp);
    }
    const Rational bin = generalized_binomial(Rational(-e), t);
    if (bin.is_zero()) return S(0);
    return FieldTraits<S>::from_rational(bin) * scalar_pow(shift.value, t);
  };

  std::vector<DenseMat<S>> u(static_cast<size_t>(n) + 1, zero<S>(dim, dim));
  std::vector<DenseMat<S>> su(static_cast<size_t>(n) + 1, zero<S>(dim, dim));
  u[0] = identity<S>(dim);
  su[0] = identity<S>(dim);
  for (long k = 1; k <= n; ++k) {
    DenseMat<S> known = zero<S>(dim, dim);
    for (long i = 1; i < k; ++i)
      known += u[static_cast<size_t>(i)] * su[static_cast<size_t>(k - i)];
    // The part of sigma(U)_k contributed by U_{<k}.
    DenseMat<S> partial = zero<S>(dim, dim);
    for (long i = 0; i < k; ++i) {
      const S c = shiftco(i, k - i);
      if (!c.is_zero()) partial += scalar_mul(c, u[static_cast<size_t>(i)]);
    }
    known += partial;
    S denom = S(1) + shiftco(k, 0);
    if (denom.is_zero())
      throw Error("solve_two_factor: vanishing diagonal factor at index " +
                  std::to_string(k));
    const S denom_inv = S(1) / denom;
    u[static_cast<size_t>(k)] = scalar_mul(denom_inv, g.coeff_at(k) - known);
    su[static_cast<size_t>(k)] =
        partial + scalar_mul(shiftco(k, 0), u[static_cast<size_t>(k)]);
  }
  return TruncSeries<S>(g.dir(), 0, std::move(u));
}

/// Scalar two-factor factor of a monic polynomial a(z) = z^{2m} + ... under
/// z -> z - 1: returns (m, u) with a(z) = (z^m u(z)) * ((z-1)^m u(z-1)) and
/// u a unit z^{-1}-series.
template <typename S>
std::pair<long, TruncSeries<S>> star_factor_additive(const ZPoly<S>& a, long valid_to) {
  const long deg = zpoly_degree(a);
  if (deg < 0 || deg % 2 != 0 || !a[static_cast<size_t>(deg)].is_one())
    throw Error("star_factor: polynomial must be monic of even degree");
  const long m = deg / 2;
  // Target: ahat(w) * (1 - w)^{-m}, both unit series in w = z^{-1}.
  TruncSeries<S> ahat =
      zpoly_series(a, Direction::asc_zinv, valid_to).shifted_by_monomial(deg).truncated(valid_to);
  std::vector<DenseMat<S>> bin;
  for (long t = 0; t <= valid_to; ++t) {
    DenseMat<S> c(1, 1);
    c(0, 0) = FieldTraits<S>::from_rational(
        generalized_binomial(Rational(-m), t) * pow(Rational(-1), t));
    bin.push_back(std::move(c));
  }
  TruncSeries<S> target = ahat * TruncSeries<S>(Direction::asc_zinv, 0, std::move(bin));
  return {m, solve_two_factor(target.truncated(valid_to), ShiftSpec<S>::additive(S(-1)))};
}

/// Scalar two-factor factor of a unit series g under z -> c z:
/// u(z) u(cz) = g(z).
template <typename S>
TruncSeries<S> star_factor_scale(const TruncSeries<S>& g, const S& c) {
  return solve_two_factor(g, ShiftSpec<S>::scale(c));
}

// ---------------------------------------------------------------------------

/// Report text form: "z^{m} * (c0 + c1*z^-1 + ...)" with matrix coefficients
/// as nested bracket lists.
template <typename S>
std::string series_str(const TruncSeries<S>& a) {
  const int zsign = a.dir() == Direction::asc_z ? 1 : -1;
  std::string out;
  const long lead = a.offset();
  if (lead != 0) out += "z^{" + std::to_string(-zsign * (-lead)) + "} * ";
  out += "(";
  bool first = true;
  for (long e = a.offset(); e <= a.valid_to(); ++e) {
    const DenseMat<S>& c = a.coeffs()[static_cast<size_t>(e - a.offset())];
    if (is_zero(c)) continue;
    if (!first) out += " + ";
    first = false;
    out += a.is_scalar() ? c(0, 0).str() : mat_str(c);
    const long rel = e - a.offset();
    if (rel != 0) {
      out += "*z^";
      const long ze = zsign * rel;
      out += (ze < 0 ? "-" : "") + std::to_string(ze < 0 ? -ze : ze);
    }
  }
  if (first) out += "0";
  out += ")";
  return out;
}

}  // namespace truncata
