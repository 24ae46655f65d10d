#pragma once

#include <vector>

#include "truncata/field.hpp"
#include "truncata/matrix_ops.hpp"
#include "truncata/report.hpp"

namespace truncata {

/// Coefficients beta_{k,n} = C(n,k) * prod_{j=0}^{k-1} (1 - j c) of the
/// expansion (a+b)^n = sum_k beta_{k,n} a^k b^{n-k} valid when ab - ba = c a^2.
template <typename S>
std::vector<S> twisted_binomial_coeffs(long n, const S& c) {
  std::vector<S> out;
  out.reserve(static_cast<size_t>(n) + 1);
  for (long k = 0; k <= n; ++k) {
    S v = FieldTraits<S>::from_rational(generalized_binomial(Rational(n), k));
    for (long j = 0; j < k; ++j) v *= (S(1) - S(static_cast<int>(j)) * c);
    out.push_back(std::move(v));
  }
  return out;
}

/// Expands (A+B)^n directly and compares against the twisted binomial sum.
/// The hypothesis AB - BA = c A^2 is checked first and is an error, not a
/// finding, when violated.
template <typename S>
Report verify_twisted_binomial(const DenseMat<S>& a, const DenseMat<S>& b, const S& c,
                               long n) {
  const DenseMat<S> hyp = comm(a, b) - scalar_mul(c, a * a);
  if (!is_zero(hyp))
    throw Error("verify_twisted_binomial: hypothesis AB - BA = cA^2 fails");

  Report report;
  report.check = "twisted-binomial";
  report.param("n", std::to_string(n));
  report.order = static_cast<int>(n);

  const DenseMat<S> lhs = mat_pow(a + b, n);
  const std::vector<S> coeffs = twisted_binomial_coeffs(n, c);
  DenseMat<S> rhs = zero<S>(a.rows(), a.cols());
  for (long k = 0; k <= n; ++k)
    rhs += scalar_mul(coeffs[static_cast<size_t>(k)], mat_pow(a, k) * mat_pow(b, n - k));
  if (!is_zero(lhs - rhs)) report.fail("n=" + std::to_string(n), mat_str(lhs - rhs));
  return report;
}

}  // namespace truncata
