#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "truncata/report.hpp"
#include "truncata/series.hpp"

namespace truncata::yangian {

using Mat = MatQ;
using Series = TruncSeries<Rational>;
using APoly = ZPoly<Rational>;

/// Finite-dimensional module of the sl2 Yangian, given by the generator
/// matrices x^±_0, h_0, h_1 plus a cache of derived higher modes. Values are
/// immutable after derivation; derive_modes returns a new rep.
struct YangianRep {
  long dim = 0;
  Mat x_plus_0, x_minus_0, h_0, h_1;
  std::optional<std::pair<Rational, Rational>> params;  // (alpha, beta)
  long order_derived = 0;
  std::map<std::pair<char, long>, Mat> modes;  // ('+'|'-'|'h', n)

  const Mat& x_plus(long n) const { return mode('+', n); }
  const Mat& x_minus(long n) const { return mode('-', n); }
  const Mat& h(long n) const { return mode('h', n); }
  const Mat& mode(char sym, long n) const;
};

/// Highest-weight evaluation module L(alpha, beta) of dimension
/// alpha - beta + 1; requires alpha - beta to be a nonnegative integer.
YangianRep make_evaluation_module(const Rational& alpha, const Rational& beta);

inline YangianRep trivial_module() {
  return make_evaluation_module(Rational(0), Rational(0));
}

/// Scalar eigenvalue series of h(z) on the basis vector v_i of
/// L(alpha, beta), expanded in z^{-1} to the given window.
Series h_eigenvalue_series(const Rational& alpha, const Rational& beta, long i,
                           long valid_to);

/// Populates x^±_n for n <= N and h_n for n <= 2N from the defining
/// recursions; idempotent for N <= order_derived.
YangianRep derive_modes(const YangianRep& rep, long N);

/// Evaluates every defining relation family for index pairs up to N as exact
/// matrix identities; failures are recorded as witnesses, not errors.
Report check_relations(const YangianRep& rep, long N);

/// Tensor-product module via the coproduct: x^±_0 and h_0 primitive,
/// h_1 = h_1 (x) 1 + 1 (x) h_1 + h_0 (x) h_0 - 2 x^-_0 (x) x^+_0.
YangianRep tensor(const YangianRep& v, const YangianRep& w);

/// h(z) = 1 + sum h_n z^{-n-1} on the module, to the given window.
Series h_series(const YangianRep& rep, long valid_to);

struct GKLOResult {
  APoly a;
  long m = 0;               // a has leading term z^{2m}
  Series unit_series;       // the a = 1 series A^1(z), unit in z^{-1}
  Series full_series;       // z^m * a-unit * A^1; exponents z^m .. z^{m-N}
  std::vector<Mat> polynomial_part;  // coefficients of z^0 .. z^m
  Series tail;              // strictly negative powers of z
};

/// Solves h(z) = a(z) / (A(z) A(z-1)) for the series A = A^a(z) on the
/// module, to window order N.
GKLOResult gklo(const YangianRep& rep, const APoly& a, long N);

/// Residual of the defining equation: h(z) A(z) A(z-1) - a(z), within the
/// common window. Empty residual list means exact.
std::vector<std::pair<long, Mat>> gklo_defining_residuals(const YangianRep& rep,
                                                          const GKLOResult& g, long N);

/// K(z) = (1 + z^{-1})^{h_0 / 2}, computed entrywise; requires diagonal h_0.
Series k_series(const YangianRep& rep, long N);

/// The unit GKLO series for a = 1.
Series a1_series(const YangianRep& rep, long N);

/// Unique unit solution of S(z+1) = S(z) M(z) given the unit series M; the
/// coefficient-k system is (k I + M_1); singularity raises ResonanceError.
Series s_series_from(const Series& m_series, long N);

/// S(z) on the module: the solution of S(z+1) = S(z) A(z) K(z).
Series s_series(const YangianRep& rep, long N);

/// Verifies Delta(A^{ab}(z)) = A^a (x) A^b + [A^a, x^-_0] (x) [x^+_0, A^b]
/// coefficientwise down to z^{-N}, plus vanishing of the tensor-side tail.
Report verify_coproduct(const YangianRep& v, const APoly& a, const YangianRep& w,
                        const APoly& b, long N);

/// Verifies the closed two-term action of A^{a1 a2}(z) on
/// L(a1,b1) (x) L(a2,b2): diagonal (z+b1+i)(z+b2+j) plus the single
/// off-diagonal weight-shift term.
Report verify_tensor_formula(const YangianRep& v, const YangianRep& w, long N);

/// Verifies Delta(S(z)) = (1 (x) S) exp(-z^{-1} x^-_0 (x) x^+_0) (S (x) 1).
Report verify_s_coproduct(const YangianRep& v, const YangianRep& w, long N);

/// Consistency of the S-series against A(z)K(z): S(z)^{-1} S(z+1) = A(z)K(z).
Report verify_s_difference_equation(const YangianRep& rep, long N);

/// The exponential shift identity exp(X+Y) = (1 + t X) exp((1-t) X + Y) for
/// X = x^-_0 (x) x^+_0 / z0, Y = -x^-_0 (x) x^+_1 / (z0 (z0+1)), t = 1/(z0+1),
/// as finite sums of nilpotent matrices on V (x) W.
Report verify_exp_shift_identity(const YangianRep& v, const YangianRep& w,
                                 const Rational& z0);

/// a(z) = (z + alpha)(z + beta - 1), the polynomial whose GKLO series acts
/// as a polynomial on L(alpha, beta).
APoly drinfeld_poly(const Rational& alpha, const Rational& beta);

/// Verifies A^a(z) v_i = (z + beta + i) v_i with zero tail on an evaluation
/// module, for a = (z + alpha)(z + beta - 1), plus the defining residual.
Report verify_gklo_diagonal(const YangianRep& rep, long N);

}  // namespace truncata::yangian
