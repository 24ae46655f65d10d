#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "truncata/report.hpp"
#include "truncata/series.hpp"

namespace truncata::qaffine {

using Mat = MatQq;
using Series = TruncSeries<RatFuncQ>;
using APoly = ZPoly<RatFuncQ>;

/// Coproduct convention for the zero modes x^±_0 on tensor products.
enum class Convention { paper_literal, dj_twisted, auto_select };

const char* convention_name(Convention c);

/// Finite-dimensional module of U_q(sl2-loop) over Q(q), given by generator
/// matrices plus a cache of derived loop modes in both directions.
struct QAffineRep {
  long dim = 0;
  Mat x_plus_0, x_minus_0;
  Mat phi_plus_0, phi_minus_0, phi_plus_1, phi_minus_m1;
  std::optional<std::pair<long, RatFuncQ>> params;  // (n, a) for L_n(a)
  long order_derived = 0;
  std::string convention_label;  // set on tensor modules
  std::map<std::pair<char, long>, Mat> modes;  // '+','-': x modes; 'P','M': phi modes

  const Mat& x_plus(long n) const { return mode('+', n); }
  const Mat& x_minus(long n) const { return mode('-', n); }
  /// phi^+_m; exact zero for m < 0.
  Mat phi_plus(long m) const;
  /// phi^-_m; exact zero for m > 0.
  Mat phi_minus(long m) const;
  const Mat& mode(char sym, long n) const;
};

/// Evaluation module L_n(a) of dimension n+1; a must be nonzero.
QAffineRep make_eval_module(long n, const RatFuncQ& a);

inline QAffineRep trivial_module() { return make_eval_module(0, RatFuncQ(1)); }

/// Scalar eigenvalue series of phi^±(z) on v_i of L_n(a), expanded in the
/// given direction.
Series phi_eigenvalue_series(long n, const RatFuncQ& a, long i, Direction dir,
                             long valid_to);

/// Populates x^±_n for |n| <= N and phi^±_m for |m| <= 2N.
QAffineRep derive_modes(const QAffineRep& rep, long N);

/// Exact residual check of every defining relation family for index pairs
/// with |m|, |n| <= N.
Report check_relations(const QAffineRep& rep, long N);

/// Tensor-product module; with Convention::auto_select the relation checker
/// arbitrates between the candidate zero-mode coproducts and the selection is
/// recorded in convention_label.
QAffineRep tensor(const QAffineRep& v, const QAffineRep& w, Convention conv);

/// Change of basis from (w_j) to v'_j = (x^+_{-1})^j w_m on an evaluation
/// module; throws if the primed family is linearly dependent.
Mat primed_basis(const QAffineRep& rep);

/// phi^+(z) (ascending z) or phi^-(z) (ascending z^{-1}) on the module.
Series phi_series(const QAffineRep& rep, char sign, long valid_to);

struct GKLOResultQ {
  APoly a;
  long n = 0;           // deg a = 2n
  Series plus_series;   // unit series in z
  Series minus_series;  // unit series in z^{-1}

  Mat plus_coeff(long k) const;   // zero for k < 0; window-checked above
  Mat minus_coeff(long k) const;  // zero for k > 0
};

/// Solves the pair of q-difference equations
///   phi^+(z) = phi_0^+ a(z) a_0^{-1} / (A^+(z) A^+(zq^2)),
///   phi^-(z) = phi_0^- a(z) a_{2n}^{-1} z^{-2n} / (A^-(z) A^-(zq^2))
/// for the unit series A^±(z), to window order N.
GKLOResultQ gklo(const QAffineRep& rep, const APoly& a, long N);

/// Exact residuals of the two defining equations above.
std::vector<std::pair<long, Mat>> gklo_defining_residuals(const QAffineRep& rep,
                                                          const GKLOResultQ& g,
                                                          char sign, long N);

/// Truncation relations: A^+_k = 0 for k > n, A^-_k = A^-_{-n} A^+_{k+n},
/// and a_{2n} (phi_0^+)^2 = a_0 (A^+_n)^2 q^{2n}.
Report truncation_check(const GKLOResultQ& g, const QAffineRep& rep, long N);

/// Verifies the coproduct factorization of the GKLO series (sign '+' or '-'):
///   Delta(A^{ab-}) = A^{a-} (x) A^{b-} + q^{-1} z [A^{a-}, x^-_1] (x) [x^+_0, A^{b-}]
///   Delta(A^{ab+}) = A^{a+} (x) A^{b+} + q z^{-1} [A^{a+}, x^-_0] (x) [x^+_{-1}, A^{b+}]
/// and additionally runs the truncation relations on the tensor side.
Report verify_coproduct(const QAffineRep& v, const APoly& a, const QAffineRep& w,
                        const APoly& b, long N, char sign, Convention conv);

/// Verifies the closed two-term action of A^{fg±}(z) on L_n(a) (x) L_m(b) in
/// the primed basis of the second factor.
Report verify_tensor_formula(const QAffineRep& v, const QAffineRep& w, long N,
                             char sign, Convention conv);

/// T^±(z) = exp(±(q - q^{-1}) sum_{±s>0} h_s z^s / (q^{2s} - q^{-2s})).
Series t_series(const QAffineRep& rep, char sign, long N);

/// Verifies Delta(T^-(z)) =
///   (1 (x) T^-) exp_q((q - q^{-1}) x^-_0 (x) x^+_{-1} z^{-1}) (T^- (x) 1).
Report verify_t_coproduct(const QAffineRep& v, const QAffineRep& w, long N,
                          Convention conv);

/// Verifies A^±(z) T^±(z) = T^±(z q^{-2}) on the module.
Report verify_interversion(const QAffineRep& rep, char sign, long N);

/// Verifies the q^2-twisted commutation shift
/// [A^-(z), x^-_k] = z^{-1} [A^-(z), x^-_{k-1}]_{q^2} for k in [1, kmax].
Report verify_qcomm_shift(const QAffineRep& rep, long kmax, long N);

/// exp_q(c z X) = sum_k c^k X^k z^k / (k)_q!, finite for nilpotent X; base -1
/// selects the q^{-1}-exponential.
Series q_exp_series(const Mat& x, const RatFuncQ& c, Direction dir, long valid_to,
                    int base = 1);

/// Checks the three q-exponential identities on a nilpotent pair with
/// X Y = q^2 Y X (the hypothesis itself is an error if violated):
/// the product rule, the q <-> q^{-1} inverse rule, and the telescoping ratio.
Report verify_qexp_identities(const Mat& x, const Mat& y);

/// f(z) = (1 - q^{-n-1} a z)(1 - q^{n+1} a z), the Drinfeld-type polynomial
/// whose GKLO series acts polynomially on L_n(a).
APoly drinfeld_poly(long n, const RatFuncQ& a);

/// Verifies the diagonal actions A^{f+}(z) v_i = (1 - q^{n-1-2i} a z) v_i and
/// A^{f-}(z) v_i = (1 - q^{-n+1+2i} a^{-1} z^{-1}) v_i on L_n(a), plus the
/// defining residuals for both signs.
Report verify_gklo_diagonal(const QAffineRep& rep, long N);

}  // namespace truncata::qaffine
