#include "truncata/yangian.hpp"

#include <algorithm>

namespace truncata::yangian {

namespace {

Rational half() { return Rational(1, 2); }

Mat scalar_1x1(const Rational& c) {
  Mat m(1, 1);
  m(0, 0) = c;
  return m;
}

std::string exp_label(long e) {
  // w-exponent e corresponds to z^{-e}.
  return "z^" + std::to_string(-e);
}

}  // namespace

const Mat& YangianRep::mode(char sym, long n) const {
  auto it = modes.find({sym, n});
  if (it == modes.end())
    throw Error(std::string("Yangian mode ") + sym + "_" + std::to_string(n) +
                " not derived (order_derived = " + std::to_string(order_derived) + ")");
  return it->second;
}

Series h_eigenvalue_series(const Rational& alpha, const Rational& beta, long i,
                           long valid_to) {
  const APoly num = zpoly_mul(zpoly_linear(alpha), zpoly_linear(beta - Rational(1)));
  const APoly den = zpoly_mul(zpoly_linear(beta + Rational(i)),
                              zpoly_linear(beta + Rational(i) - Rational(1)));
  return zpoly_ratio_series(num, den, Direction::asc_zinv, valid_to);
}

YangianRep make_evaluation_module(const Rational& alpha, const Rational& beta) {
  const Rational diff = alpha - beta;
  if (!diff.is_integer() || diff.sign() < 0)
    throw Error("not a dominant evaluation parameter");
  const long d = diff.to_long();
  const long dim = d + 1;

  YangianRep rep;
  rep.dim = dim;
  rep.params = {{alpha, beta}};
  rep.x_minus_0 = zero<Rational>(dim, dim);
  rep.x_plus_0 = zero<Rational>(dim, dim);
  rep.h_0 = zero<Rational>(dim, dim);
  rep.h_1 = zero<Rational>(dim, dim);
  for (long i = 0; i < dim; ++i) {
    if (i + 1 < dim) rep.x_minus_0(i + 1, i) = Rational(1);
    if (i >= 1) rep.x_plus_0(i - 1, i) = Rational(i) * (diff - Rational(i) + Rational(1));
    const Series hz = h_eigenvalue_series(alpha, beta, i, 2);
    rep.h_0(i, i) = hz.coeff_at(1)(0, 0);
    rep.h_1(i, i) = hz.coeff_at(2)(0, 0);
  }
  rep.modes[{'+', 0}] = rep.x_plus_0;
  rep.modes[{'-', 0}] = rep.x_minus_0;
  rep.modes[{'h', 0}] = rep.h_0;
  rep.modes[{'h', 1}] = rep.h_1;
  return rep;
}

YangianRep derive_modes(const YangianRep& rep, long N) {
  if (rep.order_derived >= N) return rep;
  YangianRep r = rep;
  r.modes[{'+', 0}] = r.x_plus_0;
  r.modes[{'-', 0}] = r.x_minus_0;
  r.modes[{'h', 0}] = r.h_0;
  r.modes[{'h', 1}] = r.h_1;
  // x^±_{n} = ±(1/2)[h_1, x^±_{n-1}] - (1/2)(h_0 x^±_{n-1} + x^±_{n-1} h_0)
  for (long n = 1; n <= N; ++n) {
    const Mat& xp = r.modes.at({'+', n - 1});
    const Mat& xm = r.modes.at({'-', n - 1});
    const Mat anti_p = r.h_0 * xp + xp * r.h_0;
    const Mat anti_m = r.h_0 * xm + xm * r.h_0;
    r.modes[{'+', n}] = scalar_mul(half(), comm(r.h_1, xp) - anti_p);
    r.modes[{'-', n}] = scalar_mul(-half(), comm(r.h_1, xm) + anti_m);
  }
  // h_n = [x^+_r, x^-_s] with r + s = n, r, s <= N.
  for (long n = 2; n <= 2 * N; ++n) {
    const long rr = std::min(n, N);
    const long ss = n - rr;
    r.modes[{'h', n}] = comm(r.modes.at({'+', rr}), r.modes.at({'-', ss}));
  }
  r.order_derived = N;
  return r;
}

Report check_relations(const YangianRep& rep, long N) {
  const YangianRep r = derive_modes(rep, N);
  Report report;
  report.check = "yangian/relations";
  if (r.params) {
    report.param("alpha", r.params->first.str());
    report.param("beta", r.params->second.str());
  }
  report.param("dim", std::to_string(r.dim));
  report.order = static_cast<int>(N);

  auto expect_zero = [&](const Mat& residual, const std::string& where) {
    if (!is_zero(residual)) report.fail(where, mat_str(residual));
  };

  for (long rr = 0; rr <= N; ++rr)
    for (long ss = 0; ss <= N; ++ss)
      expect_zero(comm(r.h(rr), r.h(ss)),
                  "[h_r,h_s] r=" + std::to_string(rr) + " s=" + std::to_string(ss));

  for (long ss = 0; ss <= N; ++ss) {
    expect_zero(comm(r.h_0, r.x_plus(ss)) - scalar_mul(Rational(2), r.x_plus(ss)),
                "[h_0,x+_s] s=" + std::to_string(ss));
    expect_zero(comm(r.h_0, r.x_minus(ss)) + scalar_mul(Rational(2), r.x_minus(ss)),
                "[h_0,x-_s] s=" + std::to_string(ss));
  }

  for (long rr = 0; rr <= N; ++rr)
    for (long ss = 0; ss + 1 <= N; ++ss) {
      {
        const Mat lhs = comm(r.h(rr + 1), r.x_plus(ss)) - comm(r.h(rr), r.x_plus(ss + 1));
        const Mat rhs = r.h(rr) * r.x_plus(ss) + r.x_plus(ss) * r.h(rr);
        expect_zero(lhs - rhs,
                    "h-x+ mixed r=" + std::to_string(rr) + " s=" + std::to_string(ss));
      }
      {
        const Mat lhs = comm(r.h(rr + 1), r.x_minus(ss)) - comm(r.h(rr), r.x_minus(ss + 1));
        const Mat rhs = r.h(rr) * r.x_minus(ss) + r.x_minus(ss) * r.h(rr);
        expect_zero(lhs + rhs,
                    "h-x- mixed r=" + std::to_string(rr) + " s=" + std::to_string(ss));
      }
    }

  for (long rr = 0; rr <= N; ++rr)
    for (long ss = 0; ss <= N; ++ss)
      expect_zero(comm(r.x_plus(rr), r.x_minus(ss)) - r.h(rr + ss),
                  "[x+_r,x-_s]=h r=" + std::to_string(rr) + " s=" + std::to_string(ss));

  for (long rr = 0; rr + 1 <= N; ++rr)
    for (long ss = 0; ss + 1 <= N; ++ss) {
      {
        const Mat lhs =
            comm(r.x_plus(rr + 1), r.x_plus(ss)) - comm(r.x_plus(rr), r.x_plus(ss + 1));
        const Mat rhs = r.x_plus(rr) * r.x_plus(ss) + r.x_plus(ss) * r.x_plus(rr);
        expect_zero(lhs - rhs,
                    "x+x+ mixed r=" + std::to_string(rr) + " s=" + std::to_string(ss));
      }
      {
        const Mat lhs =
            comm(r.x_minus(rr + 1), r.x_minus(ss)) - comm(r.x_minus(rr), r.x_minus(ss + 1));
        const Mat rhs = r.x_minus(rr) * r.x_minus(ss) + r.x_minus(ss) * r.x_minus(rr);
        expect_zero(lhs + rhs,
                    "x-x- mixed r=" + std::to_string(rr) + " s=" + std::to_string(ss));
      }
    }

  return report;
}

YangianRep tensor(const YangianRep& v, const YangianRep& w) {
  const Mat iv = identity<Rational>(v.dim);
  const Mat iw = identity<Rational>(w.dim);
  YangianRep t;
  t.dim = v.dim * w.dim;
  t.x_plus_0 = kron(v.x_plus_0, iw) + kron(iv, w.x_plus_0);
  t.x_minus_0 = kron(v.x_minus_0, iw) + kron(iv, w.x_minus_0);
  t.h_0 = kron(v.h_0, iw) + kron(iv, w.h_0);
  t.h_1 = kron(v.h_1, iw) + kron(iv, w.h_1) + kron(v.h_0, w.h_0) -
          scalar_mul(Rational(2), kron(v.x_minus_0, w.x_plus_0));
  t.modes[{'+', 0}] = t.x_plus_0;
  t.modes[{'-', 0}] = t.x_minus_0;
  t.modes[{'h', 0}] = t.h_0;
  t.modes[{'h', 1}] = t.h_1;
  const long order = std::max<long>({v.order_derived, w.order_derived, 1});
  return derive_modes(t, order);
}

Series h_series(const YangianRep& rep, long valid_to) {
  const YangianRep r = derive_modes(rep, std::max<long>(1, (valid_to + 1) / 2));
  std::vector<Mat> coeffs;
  coeffs.reserve(static_cast<size_t>(valid_to) + 1);
  coeffs.push_back(identity<Rational>(r.dim));
  for (long k = 1; k <= valid_to; ++k) coeffs.push_back(r.h(k - 1));
  return Series(Direction::asc_zinv, 0, std::move(coeffs));
}

GKLOResult gklo(const YangianRep& rep, const APoly& a, long N) {
  std::pair<long, Series> star = star_factor_additive(a, N);
  const long m = star.first;
  if (N <= m) throw Error("gklo: window too small for the polynomial part");
  const Series hz = h_series(rep, N);
  const Series unit = solve_two_factor(series_inv(hz), ShiftSpec<Rational>::additive(Rational(-1)));
  const Series full = (star.second * unit).shifted_by_monomial(-m);

  std::vector<Mat> poly_part;
  for (long t = 0; t <= m; ++t) poly_part.push_back(full.coeff_at(-t));
  std::vector<Mat> tail_coeffs;
  for (long e = 1; e <= full.valid_to(); ++e) tail_coeffs.push_back(full.coeff_at(e));
  Series tail(Direction::asc_zinv, 1, std::move(tail_coeffs));
  return GKLOResult{a, m, unit, full, std::move(poly_part), std::move(tail)};
}

std::vector<std::pair<long, Mat>> gklo_defining_residuals(const YangianRep& rep,
                                                          const GKLOResult& g, long N) {
  const Series hz = h_series(rep, N);
  const Series shifted = shift_additive(g.full_series, Rational(-1));
  const Series lhs = hz * g.full_series * shifted;
  const Series rhs = kron_series(zpoly_series(g.a, Direction::asc_zinv, N - 2 * g.m),
                                 Series::one(Direction::asc_zinv, rep.dim, N - 2 * g.m));
  return series_residuals(lhs, rhs);
}

Series k_series(const YangianRep& rep, long N) {
  if (!is_diagonal(rep.h_0)) throw Error("k_series: h_0 must be diagonal");
  std::vector<Mat> coeffs;
  for (long k = 0; k <= N; ++k) {
    Mat c = zero<Rational>(rep.dim, rep.dim);
    for (long i = 0; i < rep.dim; ++i)
      c(i, i) = generalized_binomial(rep.h_0(i, i) * half(), k);
    coeffs.push_back(std::move(c));
  }
  return Series(Direction::asc_zinv, 0, std::move(coeffs));
}

Series a1_series(const YangianRep& rep, long N) {
  return solve_two_factor(series_inv(h_series(rep, N)),
                          ShiftSpec<Rational>::additive(Rational(-1)));
}

Series s_series_from(const Series& m_series, long N) {
  if (m_series.valid_to() < N + 1)
    throw Error("s_series_from: window must extend to order N+1");
  if (m_series.offset() != 0 || !is_identity(m_series.coeff_at(0)))
    throw Error("s_series_from: M must be a unit series");
  const long dim = m_series.rows();
  const Mat m1 = m_series.coeff_at(1);
  std::vector<Mat> s(static_cast<size_t>(N) + 1, zero<Rational>(dim, dim));
  s[0] = identity<Rational>(dim);
  for (long n = 1; n <= N; ++n) {
    Mat rhs = zero<Rational>(dim, dim);
    for (long k = 0; k < n; ++k) {
      const Rational bin = generalized_binomial(Rational(-k), n + 1 - k);
      Mat term = -m_series.coeff_at(n + 1 - k);
      for (long i = 0; i < dim; ++i) term(i, i) += bin;
      rhs += s[static_cast<size_t>(k)] * term;
    }
    Mat lhs = m1;
    for (long i = 0; i < dim; ++i) lhs(i, i) += Rational(n);
    try {
      s[static_cast<size_t>(n)] = rhs * exact_inverse(lhs);
    } catch (const SingularMatrixError&) {
      throw ResonanceError(static_cast<int>(n));
    }
  }
  return Series(Direction::asc_zinv, 0, std::move(s));
}

Series s_series(const YangianRep& rep, long N) {
  const Series m = (a1_series(rep, N + 1) * k_series(rep, N + 1)).truncated(N + 1);
  return s_series_from(m, N);
}

namespace {

void compare_series_into(const Series& lhs, const Series& rhs, Report& report) {
  for (const auto& [e, residual] : series_residuals(lhs, rhs))
    report.fail(exp_label(e), mat_str(residual));
}

}  // namespace

Report verify_coproduct(const YangianRep& v, const APoly& a, const YangianRep& w,
                        const APoly& b, long N) {
  const long ma = zpoly_degree(a) / 2;
  const long mb = zpoly_degree(b) / 2;
  if (N < 2 * (ma + mb) + 4)
    throw Error("verify_coproduct: window order must be at least 2(m_a+m_b)+4");
  Report report;
  report.check = "yangian/coproduct";
  report.param("a", zpoly_str(a));
  report.param("b", zpoly_str(b));
  report.order = static_cast<int>(N);

  const long window = N + ma + mb;
  const GKLOResult ga = gklo(v, a, window);
  const GKLOResult gb = gklo(w, b, window);
  const YangianRep t = tensor(v, w);
  const GKLOResult gab = gklo(t, zpoly_mul(a, b), window);

  const Series lhs = gab.full_series;
  const Series rhs =
      kron_series(ga.full_series, gb.full_series) +
      kron_series(comm_const(ga.full_series, v.x_minus_0),
                  comm_const(w.x_plus_0, gb.full_series));
  compare_series_into(lhs, rhs, report);

  // Truncation compatibility: the tensor-side series is again a polynomial.
  for (long e = 1; e <= gab.tail.valid_to(); ++e) {
    const Mat c = gab.tail.coeff_at(e);
    if (!is_zero(c)) report.fail("tail " + exp_label(e), mat_str(c));
  }
  return report;
}

APoly drinfeld_poly(const Rational& alpha, const Rational& beta) {
  return zpoly_mul(zpoly_linear(alpha), zpoly_linear(beta - Rational(1)));
}

Report verify_gklo_diagonal(const YangianRep& rep, long N) {
  if (!rep.params) throw Error("verify_gklo_diagonal: not an evaluation module");
  const auto [alpha, beta] = *rep.params;
  Report report;
  report.check = "yangian/gklo";
  report.param("alpha", alpha.str());
  report.param("beta", beta.str());
  report.order = static_cast<int>(N);

  const GKLOResult g = gklo(rep, drinfeld_poly(alpha, beta), N);
  Mat expected0 = zero<Rational>(rep.dim, rep.dim);
  for (long i = 0; i < rep.dim; ++i) expected0(i, i) = beta + Rational(i);
  if (!is_zero(g.polynomial_part[0] - expected0))
    report.fail("z^0", mat_str(g.polynomial_part[0] - expected0));
  if (!is_identity(g.polynomial_part[1]))
    report.fail("z^1", mat_str(g.polynomial_part[1]));
  for (long e = 1; e <= g.tail.valid_to(); ++e)
    if (!is_zero(g.tail.coeff_at(e)))
      report.fail("tail " + exp_label(e), mat_str(g.tail.coeff_at(e)));
  for (const auto& [e, residual] : gklo_defining_residuals(rep, g, N))
    report.fail("defining residual " + exp_label(e), mat_str(residual));
  return report;
}

Report verify_tensor_formula(const YangianRep& v, const YangianRep& w, long N) {
  if (!v.params || !w.params)
    throw Error("verify_tensor_formula: factors must be evaluation modules");
  const auto [a1, b1] = *v.params;
  const auto [a2, b2] = *w.params;
  Report report;
  report.check = "yangian/tensor-formula";
  report.param("alpha1", a1.str());
  report.param("beta1", b1.str());
  report.param("alpha2", a2.str());
  report.param("beta2", b2.str());
  report.order = static_cast<int>(N);

  const APoly prod = zpoly_mul(drinfeld_poly(a1, b1), drinfeld_poly(a2, b2));
  const GKLOResult g = gklo(tensor(v, w), prod, N);

  // Expected action: (z+b1+i)(z+b2+j) on v_i (x) w_j plus
  // j (a2-b2-j+1) v_{i+1} (x) w_{j-1}.
  const long dv = v.dim, dw = w.dim;
  std::vector<Mat> expected(3, zero<Rational>(dv * dw, dv * dw));
  for (long i = 0; i < dv; ++i)
    for (long j = 0; j < dw; ++j) {
      const long col = i * dw + j;
      const Rational u = b1 + Rational(i), x = b2 + Rational(j);
      expected[0](col, col) = u * x;
      expected[1](col, col) = u + x;
      expected[2](col, col) = Rational(1);
      if (i + 1 < dv && j >= 1) {
        const long row = (i + 1) * dw + (j - 1);
        expected[0](row, col) = Rational(j) * (a2 - b2 - Rational(j) + Rational(1));
      }
    }

  if (g.m != 2) throw Error("verify_tensor_formula: unexpected leading degree");
  for (long t = 0; t <= 2; ++t) {
    const Mat diff = g.polynomial_part[static_cast<size_t>(t)] - expected[static_cast<size_t>(t)];
    if (!is_zero(diff)) report.fail("z^" + std::to_string(t), mat_str(diff));
  }
  for (long e = 1; e <= g.tail.valid_to(); ++e)
    if (!is_zero(g.tail.coeff_at(e))) report.fail("tail " + exp_label(e), mat_str(g.tail.coeff_at(e)));
  return report;
}

Report verify_s_coproduct(const YangianRep& v, const YangianRep& w, long N) {
  Report report;
  report.check = "yangian/s-coproduct";
  report.param("dimV", std::to_string(v.dim));
  report.param("dimW", std::to_string(w.dim));
  report.order = static_cast<int>(N);

  const YangianRep t = tensor(v, w);
  const Series lhs = s_series(t, N);

  const Series sv = s_series(v, N);
  const Series sw = s_series(w, N);
  const Series left = kron_series(Series::one(Direction::asc_zinv, v.dim, N), sw);
  const Series right = kron_series(sv, Series::one(Direction::asc_zinv, w.dim, N));

  // exp(-z^{-1} x^-_0 (x) x^+_0) as a finite series: the argument is nilpotent.
  const Mat x = kron(v.x_minus_0, w.x_plus_0);
  std::vector<Mat> coeffs(static_cast<size_t>(N) + 1, zero<Rational>(t.dim, t.dim));
  Mat power = identity<Rational>(t.dim);
  Rational fact(1);
  for (long k = 0; k <= N; ++k) {
    if (k > 0) {
      power = power * x;
      fact *= Rational(k);
      if (is_zero(power)) break;
    }
    coeffs[static_cast<size_t>(k)] = scalar_mul(pow(Rational(-1), k) / fact, power);
  }
  const Series middle(Direction::asc_zinv, 0, std::move(coeffs));

  compare_series_into(lhs, left * middle * right, report);
  return report;
}

Report verify_s_difference_equation(const YangianRep& rep, long N) {
  Report report;
  report.check = "yangian/s-difference";
  report.param("dim", std::to_string(rep.dim));
  report.order = static_cast<int>(N);
  const Series s = s_series(rep, N + 1);
  const Series m = (a1_series(rep, N) * k_series(rep, N)).truncated(N);
  const Series lhs = shift_additive(s, Rational(1)).truncated(N);
  const Series rhs = (s.truncated(N) * m).truncated(N);
  compare_series_into(lhs, rhs, report);
  return report;
}

Report verify_exp_shift_identity(const YangianRep& v, const YangianRep& w,
                                 const Rational& z0) {
  Report report;
  report.check = "yangian/exp-shift-identity";
  report.param("z0", z0.str());
  report.order = 0;

  const YangianRep vd = derive_modes(v, 1);
  const YangianRep wd = derive_modes(w, 1);
  const Rational lam = Rational(1) / (z0 + Rational(1));
  const Mat x = scalar_mul(Rational(1) / z0, kron(vd.x_minus_0, wd.x_plus_0));
  const Mat y = scalar_mul(-Rational(1) / (z0 * (z0 + Rational(1))),
                           kron(vd.x_minus_0, wd.x_plus(1)));

  const Mat hypothesis = comm(x, y) - scalar_mul(lam, x * x);
  if (!is_zero(hypothesis)) {
    report.fail("hypothesis [X,Y]=t*X^2", mat_str(hypothesis));
    return report;
  }

  const Mat lhs = exp_nilpotent(x + y);
  Mat one_plus = identity<Rational>(x.rows());
  one_plus += scalar_mul(lam, x);
  const Mat rhs = one_plus * exp_nilpotent(scalar_mul(Rational(1) - lam, x) + y);
  if (!is_zero(lhs - rhs)) report.fail("exp identity", mat_str(lhs - rhs));
  return report;
}

}  // namespace truncata::yangian
