#include "truncata/qaffine.hpp"

#include <algorithm>

namespace truncata::qaffine {

namespace {

RatFuncQ qp(long k) { return RatFuncQ::q_pow(k); }

RatFuncQ qdiff() { return qp(1) - qp(-1); }  // q - q^{-1}

Mat const_lift(const Mat& m) { return m; }

Series const_series(const Mat& m, Direction dir, long valid_to) {
  return Series::monomial(dir, 0, const_lift(m), valid_to);
}

std::string zpow_label(Direction dir, long e) {
  const long ze = dir == Direction::asc_z ? e : -e;
  return "z^" + std::to_string(ze);
}

void compare_series_into(const Series& lhs, const Series& rhs, Report& report,
                         const std::string& prefix = "") {
  for (const auto& [e, residual] : series_residuals(lhs, rhs))
    report.fail(prefix + zpow_label(lhs.dir(), e), mat_str(residual));
}

// (k)_q or (k)_{q^{-1}} depending on base.
RatFuncQ q_int_base(long k, int base) {
  if (base >= 0) return q_integer(k);
  return (qp(-2 * k) - RatFuncQ(1)) / (qp(-2) - RatFuncQ(1));
}

}  // namespace

const char* convention_name(Convention c) {
  switch (c) {
    case Convention::paper_literal:
      return "paper-literal";
    case Convention::dj_twisted:
      return "dj-twisted";
    default:
      return "auto";
  }
}

const Mat& QAffineRep::mode(char sym, long n) const {
  auto it = modes.find({sym, n});
  if (it == modes.end())
    throw Error(std::string("quantum mode ") + sym + "_" + std::to_string(n) +
                " not derived (order_derived = " + std::to_string(order_derived) + ")");
  return it->second;
}

Mat QAffineRep::phi_plus(long m) const {
  if (m < 0) return zero<RatFuncQ>(dim, dim);
  return mode('P', m);
}

Mat QAffineRep::phi_minus(long m) const {
  if (m > 0) return zero<RatFuncQ>(dim, dim);
  return mode('M', m);
}

Series phi_eigenvalue_series(long n, const RatFuncQ& a, long i, Direction dir,
                             long valid_to) {
  // q^{n-2i} (1 - q^{-n-1} a z)(1 - q^{n+1} a z)
  //        / ((1 - q^{n-1-2i} a z)(1 - q^{n+1-2i} a z))
  auto factor = [&](long e) -> APoly { return {RatFuncQ(1), -(qp(e) * a)}; };
  APoly num = zpoly_mul(factor(-n - 1), factor(n + 1));
  for (auto& c : num) c *= qp(n - 2 * i);
  const APoly den = zpoly_mul(factor(n - 1 - 2 * i), factor(n + 1 - 2 * i));
  return zpoly_ratio_series(num, den, dir, valid_to);
}

QAffineRep make_eval_module(long n, const RatFuncQ& a) {
  if (n < 0) throw Error("make_eval_module: n must be a natural number");
  if (a.is_zero()) throw Error("make_eval_module: spectral parameter a must be nonzero");
  const long dim = n + 1;
  QAffineRep rep;
  rep.dim = dim;
  rep.params = {{n, a}};
  rep.x_minus_0 = zero<RatFuncQ>(dim, dim);
  rep.x_plus_0 = zero<RatFuncQ>(dim, dim);
  rep.phi_plus_0 = zero<RatFuncQ>(dim, dim);
  rep.phi_minus_0 = zero<RatFuncQ>(dim, dim);
  rep.phi_plus_1 = zero<RatFuncQ>(dim, dim);
  rep.phi_minus_m1 = zero<RatFuncQ>(dim, dim);

  // x^+_0 v_i = c_i v_{i-1} with c_0 = 0 and
  // c_{i+1} - c_i = (q^{n-2i} - q^{2i-n}) / (q - q^{-1}).
  RatFuncQ c(0);
  for (long i = 0; i < dim; ++i) {
    if (i + 1 < dim) rep.x_minus_0(i + 1, i) = RatFuncQ(1);
    if (i >= 1) rep.x_plus_0(i - 1, i) = c;
    c += (qp(n - 2 * i) - qp(2 * i - n)) / qdiff();
    const Series plus = phi_eigenvalue_series(n, a, i, Direction::asc_z, 1);
    const Series minus = phi_eigenvalue_series(n, a, i, Direction::asc_zinv, 1);
    rep.phi_plus_0(i, i) = plus.coeff_at(0)(0, 0);
    rep.phi_plus_1(i, i) = plus.coeff_at(1)(0, 0);
    rep.phi_minus_0(i, i) = minus.coeff_at(0)(0, 0);
    rep.phi_minus_m1(i, i) = minus.coeff_at(1)(0, 0);
  }
  rep.modes[{'+', 0}] = rep.x_plus_0;
  rep.modes[{'-', 0}] = rep.x_minus_0;
  rep.modes[{'P', 0}] = rep.phi_plus_0;
  rep.modes[{'P', 1}] = rep.phi_plus_1;
  rep.modes[{'M', 0}] = rep.phi_minus_0;
  rep.modes[{'M', -1}] = rep.phi_minus_m1;
  return rep;
}

QAffineRep derive_modes(const QAffineRep& rep, long N) {
  if (rep.order_derived >= N) return rep;
  QAffineRep r = rep;
  r.modes[{'+', 0}] = r.x_plus_0;
  r.modes[{'-', 0}] = r.x_minus_0;
  r.modes[{'P', 0}] = r.phi_plus_0;
  r.modes[{'P', 1}] = r.phi_plus_1;
  r.modes[{'M', 0}] = r.phi_minus_0;
  r.modes[{'M', -1}] = r.phi_minus_m1;

  const Mat inv0p = exact_inverse(r.phi_plus_0);
  const Mat inv0m = exact_inverse(r.phi_minus_0);
  const RatFuncQ up_plus = (qp(-2) - qp(2)).inverse();
  const RatFuncQ up_minus = (qp(2) - qp(-2)).inverse();
  const RatFuncQ down_plus = (RatFuncQ(1) - qp(4)).inverse();
  const RatFuncQ down_minus = (RatFuncQ(1) - qp(-4)).inverse();

  // Upward: x^±_{n+1} from phi^+_1, downward: x^±_{n-1} from phi^-_{-1}.
  for (long n = 0; n < N; ++n) {
    const Mat& xp = r.modes.at({'+', n});
    const Mat& xm = r.modes.at({'-', n});
    r.modes[{'+', n + 1}] = scalar_mul(
        up_plus, inv0p * (scalar_mul(qp(2), xp * r.phi_plus_1) - r.phi_plus_1 * xp));
    r.modes[{'-', n + 1}] = scalar_mul(
        up_minus, inv0p * (scalar_mul(qp(-2), xm * r.phi_plus_1) - r.phi_plus_1 * xm));
  }
  for (long n = 0; n > -N; --n) {
    const Mat& xp = r.modes.at({'+', n});
    const Mat& xm = r.modes.at({'-', n});
    r.modes[{'+', n - 1}] = scalar_mul(
        down_plus,
        inv0m * (scalar_mul(qp(2), r.phi_minus_m1 * xp) - xp * r.phi_minus_m1));
    r.modes[{'-', n - 1}] = scalar_mul(
        down_minus,
        inv0m * (scalar_mul(qp(-2), r.phi_minus_m1 * xm) - xm * r.phi_minus_m1));
  }

  // phi^+_m for m > 0 and phi^-_m for m < 0 from [x^+_r, x^-_s], r + s = m.
  for (long m = 1; m <= 2 * N; ++m) {
    const long rr = std::min(m, N);
    const long ss = m - rr;
    r.modes[{'P', m}] =
        scalar_mul(qdiff(), comm(r.modes.at({'+', rr}), r.modes.at({'-', ss})));
  }
  for (long m = -1; m >= -2 * N; --m) {
    const long rr = std::max(m, -N);
    const long ss = m - rr;
    r.modes[{'M', m}] =
        scalar_mul(-qdiff(), comm(r.modes.at({'+', rr}), r.modes.at({'-', ss})));
  }
  r.order_derived = N;
  return r;
}

Report check_relations(const QAffineRep& rep, long N) {
  const QAffineRep r = derive_modes(rep, N);
  Report report;
  report.check = "qaffine/relations";
  if (r.params) {
    report.param("n", std::to_string(r.params->first));
    report.param("a", r.params->second.str());
  }
  report.param("dim", std::to_string(r.dim));
  report.order = static_cast<int>(N);
  report.convention = r.convention_label;

  auto expect_zero = [&](const Mat& residual, const std::string& where) {
    if (!is_zero(residual)) report.fail(where, mat_str(residual));
  };

  expect_zero(r.phi_plus_0 * r.phi_minus_0 - identity<RatFuncQ>(r.dim), "phi+_0 phi-_0 = 1");

  // [phi^eps_m, phi^delta_n] = 0 over the cached window.
  for (long m = 0; m <= N; ++m)
    for (long n = 0; n <= N; ++n) {
      expect_zero(comm(r.phi_plus(m), r.phi_plus(n)),
                  "[phi+_m,phi+_n] m=" + std::to_string(m) + " n=" + std::to_string(n));
      expect_zero(comm(r.phi_plus(m), r.phi_minus(-n)),
                  "[phi+_m,phi-_n] m=" + std::to_string(m) + " n=" + std::to_string(-n));
      expect_zero(comm(r.phi_minus(-m), r.phi_minus(-n)),
                  "[phi-_m,phi-_n] m=" + std::to_string(-m) + " n=" + std::to_string(-n));
    }

  // [x^+_m, x^-_n] = (phi^+_{m+n} - phi^-_{m+n}) / (q - q^{-1}).
  for (long m = -N; m <= N; ++m)
    for (long n = -N; n <= N; ++n) {
      const Mat rhs = scalar_mul(qdiff().inverse(),
                                 r.phi_plus(m + n) - r.phi_minus(m + n));
      expect_zero(comm(r.x_plus(m), r.x_minus(n)) - rhs,
                  "[x+_m,x-_n] m=" + std::to_string(m) + " n=" + std::to_string(n));
    }

  // phi^eps_{m+1} x^±_n - q^{±2} phi^eps_m x^±_{n+1}
  //   = q^{±2} x^±_n phi^eps_{m+1} - x^±_{n+1} phi^eps_m.
  auto phi_x = [&](char eps, int sgn, long m, long n) {
    const Mat pm1 = eps == '+' ? r.phi_plus(m + 1) : r.phi_minus(m + 1);
    const Mat pm = eps == '+' ? r.phi_plus(m) : r.phi_minus(m);
    const Mat& xn = sgn > 0 ? r.x_plus(n) : r.x_minus(n);
    const Mat& xn1 = sgn > 0 ? r.x_plus(n + 1) : r.x_minus(n + 1);
    const RatFuncQ t = qp(sgn > 0 ? 2 : -2);
    const Mat lhs = pm1 * xn - scalar_mul(t, pm * xn1);
    const Mat rhs = scalar_mul(t, xn * pm1) - xn1 * pm;
    expect_zero(lhs - rhs, std::string("phi") + eps + "-x" + (sgn > 0 ? "+" : "-") +
                               " m=" + std::to_string(m) + " n=" + std::to_string(n));
  };
  for (long n = -N; n <= N - 1; ++n) {
    for (long m = -1; m <= N - 1; ++m) {
      phi_x('+', +1, m, n);
      phi_x('+', -1, m, n);
    }
    for (long m = -N; m <= 0; ++m) {
      phi_x('-', +1, m, n);
      phi_x('-', -1, m, n);
    }
  }

  // x^±_{m+1} x^±_n - q^{±2} x^±_n x^±_{m+1}
  //   = q^{±2} x^±_m x^±_{n+1} - x^±_{n+1} x^±_m.
  for (long m = -N; m <= N - 1; ++m)
    for (long n = -N; n <= N - 1; ++n) {
      {
        const Mat lhs = r.x_plus(m + 1) * r.x_plus(n) -
                        scalar_mul(qp(2), r.x_plus(n) * r.x_plus(m + 1));
        const Mat rhs = scalar_mul(qp(2), r.x_plus(m) * r.x_plus(n + 1)) -
                        r.x_plus(n + 1) * r.x_plus(m);
        expect_zero(lhs - rhs, "x+x+ m=" + std::to_string(m) + " n=" + std::to_string(n));
      }
      {
        const Mat lhs = r.x_minus(m + 1) * r.x_minus(n) -
                        scalar_mul(qp(-2), r.x_minus(n) * r.x_minus(m + 1));
        const Mat rhs = scalar_mul(qp(-2), r.x_minus(m) * r.x_minus(n + 1)) -
                        r.x_minus(n + 1) * r.x_minus(m);
        expect_zero(lhs - rhs, "x-x- m=" + std::to_string(m) + " n=" + std::to_string(n));
      }
    }

  return report;
}

namespace {

QAffineRep build_tensor(const QAffineRep& v, const QAffineRep& w, bool twisted) {
  const Mat iv = identity<RatFuncQ>(v.dim);
  const Mat iw = identity<RatFuncQ>(w.dim);
  const RatFuncQ d = qdiff();

  auto h1_of = [&](const QAffineRep& r) {
    return scalar_mul(d.inverse(), exact_inverse(r.phi_plus_0) * r.phi_plus_1);
  };
  auto hm1_of = [&](const QAffineRep& r) {
    return scalar_mul(-(d.inverse()), exact_inverse(r.phi_minus_0) * r.phi_minus_m1);
  };

  QAffineRep t;
  t.dim = v.dim * w.dim;
  t.phi_plus_0 = kron(v.phi_plus_0, w.phi_plus_0);
  t.phi_minus_0 = kron(v.phi_minus_0, w.phi_minus_0);

  const Mat h1 = kron(h1_of(v), iw) + kron(iv, h1_of(w)) -
                 scalar_mul(qp(2) - qp(-2), kron(v.x_minus(1), w.x_plus_0));
  const Mat hm1 = kron(hm1_of(v), iw) + kron(iv, hm1_of(w)) +
                  scalar_mul(qp(2) - qp(-2), kron(v.x_minus_0, w.x_plus(-1)));
  t.phi_plus_1 = scalar_mul(d, t.phi_plus_0 * h1);
  t.phi_minus_m1 = scalar_mul(-d, t.phi_minus_0 * hm1);

  if (twisted) {
    t.x_plus_0 = kron(v.x_plus_0, iw) + kron(v.phi_plus_0, w.x_plus_0);
    t.x_minus_0 = kron(v.x_minus_0, w.phi_minus_0) + kron(iv, w.x_minus_0);
  } else {
    t.x_plus_0 = kron(v.x_plus_0, iw) + kron(iv, w.x_plus_0);
    t.x_minus_0 = kron(v.x_minus_0, iw) + kron(iv, w.x_minus_0);
  }
  t.modes[{'+', 0}] = t.x_plus_0;
  t.modes[{'-', 0}] = t.x_minus_0;
  t.modes[{'P', 0}] = t.phi_plus_0;
  t.modes[{'P', 1}] = t.phi_plus_1;
  t.modes[{'M', 0}] = t.phi_minus_0;
  t.modes[{'M', -1}] = t.phi_minus_m1;
  t.convention_label = twisted ? "dj-twisted" : "paper-literal";
  return t;
}

}  // namespace

QAffineRep tensor(const QAffineRep& v, const QAffineRep& w, Convention conv) {
  const QAffineRep vd = derive_modes(v, std::max<long>(v.order_derived, 1));
  const QAffineRep wd = derive_modes(w, std::max<long>(w.order_derived, 1));
  if (conv == Convention::paper_literal) return build_tensor(vd, wd, false);
  if (conv == Convention::dj_twisted) return build_tensor(vd, wd, true);

  // auto_select: the defining-relation checker arbitrates.
  QAffineRep literal = build_tensor(vd, wd, false);
  const Report literal_report = check_relations(literal, 2);
  if (literal_report.pass) return literal;
  QAffineRep twisted = build_tensor(vd, wd, true);
  const Report twisted_report = check_relations(twisted, 2);
  if (twisted_report.pass) return twisted;
  throw Error(
      "tensor: both zero-mode coproduct conventions violate the defining "
      "relations; first literal failure at " +
      (literal_report.witnesses.empty() ? std::string("?")
                                        : literal_report.witnesses.front().where) +
      ", first twisted failure at " +
      (twisted_report.witnesses.empty() ? std::string("?")
                                        : twisted_report.witnesses.front().where));
}

Mat primed_basis(const QAffineRep& rep) {
  if (!rep.params) throw Error("primed_basis: not an evaluation module");
  const QAffineRep r = derive_modes(rep, 1);
  const long m = r.params->first;
  Mat p = zero<RatFuncQ>(r.dim, r.dim);
  Mat current = zero<RatFuncQ>(r.dim, 1);
  current(m, 0) = RatFuncQ(1);  // w_m, the lowest-weight vector
  const Mat raise = r.x_plus(-1);
  for (long j = 0; j <= m; ++j) {
    if (j > 0) current = raise * current;
    for (long i = 0; i < r.dim; ++i) p(i, j) = current(i, 0);
  }
  try {
    exact_inverse(p);
  } catch (const SingularMatrixError&) {
    throw Error("primed_basis: the vectors (x^+_{-1})^j w_m are dependent");
  }
  return p;
}

Series phi_series(const QAffineRep& rep, char sign, long valid_to) {
  const QAffineRep r = derive_modes(rep, std::max<long>(1, (valid_to + 1) / 2));
  std::vector<Mat> coeffs;
  coeffs.reserve(static_cast<size_t>(valid_to) + 1);
  for (long k = 0; k <= valid_to; ++k)
    coeffs.push_back(sign == '+' ? r.phi_plus(k) : r.phi_minus(-k));
  return Series(sign == '+' ? Direction::asc_z : Direction::asc_zinv, 0,
                std::move(coeffs));
}

Mat GKLOResultQ::plus_coeff(long k) const {
  if (k < 0) return zero<RatFuncQ>(plus_series.rows(), plus_series.cols());
  return plus_series.coeff_at(k);
}

Mat GKLOResultQ::minus_coeff(long k) const {
  if (k > 0) return zero<RatFuncQ>(minus_series.rows(), minus_series.cols());
  return minus_series.coeff_at(-k);
}

GKLOResultQ gklo(const QAffineRep& rep, const APoly& a, long N) {
  const long deg = zpoly_degree(a);
  if (deg < 0 || deg % 2 != 0)
    throw Error("gklo: polynomial must be nonzero of even degree");
  if (a[0].is_zero()) throw Error("gklo: constant term of a must be nonzero");
  const long n_tr = deg / 2;
  const RatFuncQ a0 = a[0];
  const RatFuncQ a2n = a[static_cast<size_t>(deg)];

  const QAffineRep rd = derive_modes(rep, std::max<long>(1, (N + 1) / 2));
  const ShiftSpec<RatFuncQ> shift = ShiftSpec<RatFuncQ>::scale(qp(2));

  // Plus direction.
  const Series pp = phi_series(rd, '+', N);
  const Series g1p = const_series(rd.phi_plus_0, Direction::asc_z, N) * series_inv(pp);
  const Series a1p = solve_two_factor(g1p, shift);
  APoly ahat(a.size());
  for (size_t t = 0; t < a.size(); ++t) ahat[t] = a[t] / a0;
  const Series star_p =
      solve_two_factor(zpoly_series(ahat, Direction::asc_z, N), shift);

  // Minus direction.
  const Series pm = phi_series(rd, '-', N);
  const Series g1m = const_series(rd.phi_minus_0, Direction::asc_zinv, N) * series_inv(pm);
  const Series a1m = solve_two_factor(g1m, shift);
  std::vector<Mat> check_coeffs;
  for (long j = 0; j <= N; ++j) {
    Mat c(1, 1);
    c(0, 0) = j <= deg ? a[static_cast<size_t>(deg - j)] / a2n : RatFuncQ(0);
    check_coeffs.push_back(std::move(c));
  }
  const Series star_m =
      solve_two_factor(Series(Direction::asc_zinv, 0, std::move(check_coeffs)), shift);

  return GKLOResultQ{a, n_tr, (star_p * a1p).truncated(N),
                     (star_m * a1m).truncated(N)};
}

std::vector<std::pair<long, Mat>> gklo_defining_residuals(const QAffineRep& rep,
                                                          const GKLOResultQ& g,
                                                          char sign, long N) {
  const long deg = zpoly_degree(g.a);
  if (sign == '+') {
    const Series pp = phi_series(rep, '+', N);
    const Series lhs = pp * g.plus_series * shift_scale(g.plus_series, qp(2));
    APoly ahat(g.a.size());
    for (size_t t = 0; t < g.a.size(); ++t) ahat[t] = g.a[t] / g.a[0];
    const Series rhs = const_series(derive_modes(rep, 1).phi_plus_0, Direction::asc_z, N) *
                       zpoly_series(ahat, Direction::asc_z, N);
    return series_residuals(lhs, rhs);
  }
  const Series pm = phi_series(rep, '-', N);
  const Series lhs = pm * g.minus_series * shift_scale(g.minus_series, qp(2));
  std::vector<Mat> coeffs;
  for (long j = 0; j <= N; ++j) {
    Mat c(1, 1);
    c(0, 0) = j <= deg ? g.a[static_cast<size_t>(deg - j)] / g.a[static_cast<size_t>(deg)]
                       : RatFuncQ(0);
    coeffs.push_back(std::move(c));
  }
  const Series rhs = const_series(derive_modes(rep, 1).phi_minus_0, Direction::asc_zinv, N) *
                     Series(Direction::asc_zinv, 0, std::move(coeffs));
  return series_residuals(lhs, rhs);
}

Report truncation_check(const GKLOResultQ& g, const QAffineRep& rep, long N) {
  Report report;
  report.check = "qaffine/truncation";
  report.param("a", zpoly_str(g.a));
  report.order = static_cast<int>(N);
  report.convention = rep.convention_label;
  const long n = g.n;
  if (N <= n) throw Error("truncation_check: window too small");

  for (long k = n + 1; k <= std::min(N, g.plus_series.valid_to()); ++k) {
    const Mat c = g.plus_coeff(k);
    if (!is_zero(c)) report.fail("A+_k k=" + std::to_string(k), mat_str(c));
  }
  const long lo = -std::min(N, g.minus_series.valid_to());
  for (long k = lo; k <= std::min(N - n, g.plus_series.valid_to() - n); ++k) {
    const Mat lhs = g.minus_coeff(k);
    const Mat rhs = g.minus_coeff(-n) * g.plus_coeff(k + n);
    if (!is_zero(lhs - rhs))
      report.fail("A-_k = A-_{-n} A+_{k+n} k=" + std::to_string(k), mat_str(lhs - rhs));
  }
  const RatFuncQ a0 = g.a[0];
  const RatFuncQ a2n = g.a[static_cast<size_t>(2 * n)];
  const Mat phi0 = derive_modes(rep, 1).phi_plus_0;
  const Mat lhs2 = scalar_mul(a2n, phi0 * phi0);
  const Mat an = g.plus_coeff(n);
  const Mat rhs2 = scalar_mul(a0 * qp(2 * n), an * an);
  if (!is_zero(lhs2 - rhs2))
    report.fail("a_{2n} phi0^2 = a_0 (A+_n)^2 q^{2n}", mat_str(lhs2 - rhs2));
  return report;
}

Report verify_coproduct(const QAffineRep& v, const APoly& a, const QAffineRep& w,
                        const APoly& b, long N, char sign, Convention conv) {
  const long da = zpoly_degree(a), db = zpoly_degree(b);
  if (da < 0 || db < 0 || da % 2 != 0 || db % 2 != 0 || a[0].is_zero() || b[0].is_zero())
    throw Error("verify_coproduct: polynomials must have even degree and nonzero constant term");
  if (N < da + db + 4)
    throw Error("verify_coproduct: window order must be at least deg(ab) + 4");

  Report report;
  report.check = sign == '+' ? "qaffine/coproduct+" : "qaffine/coproduct-";
  report.param("a", zpoly_str(a));
  report.param("b", zpoly_str(b));
  report.order = static_cast<int>(N);

  const long window = N + 1;
  const QAffineRep vd = derive_modes(v, 1);
  const QAffineRep wd = derive_modes(w, 1);
  const QAffineRep t = tensor(vd, wd, conv);
  report.convention = t.convention_label;

  const GKLOResultQ ga = gklo(vd, a, window);
  const GKLOResultQ gb = gklo(wd, b, window);
  const GKLOResultQ gab = gklo(t, zpoly_mul(a, b), window);

  if (sign == '+') {
    const Series lhs = gab.plus_series;
    const Series inner = kron_series(comm_const(ga.plus_series, vd.x_minus_0),
                                     comm_const(wd.x_plus(-1), gb.plus_series));
    const Series rhs = kron_series(ga.plus_series, gb.plus_series) +
                       scalar_mul_series(qp(1), inner.shifted_by_monomial(-1));
    compare_series_into(lhs.truncated(N), rhs.truncated(N), report);
  } else {
    const Series lhs = gab.minus_series;
    const Series inner = kron_series(comm_const(ga.minus_series, vd.x_minus(1)),
                                     comm_const(wd.x_plus_0, gb.minus_series));
    const Series rhs = kron_series(ga.minus_series, gb.minus_series) +
                       scalar_mul_series(qp(-1), inner.shifted_by_monomial(-1));
    compare_series_into(lhs.truncated(N), rhs.truncated(N), report);
  }

  // Truncation relations hold on the tensor side as well.
  const Report trunc = truncation_check(gab, t, N);
  for (const auto& wit : trunc.witnesses)
    report.fail("truncation " + wit.where, wit.residual_matrix);
  return report;
}

APoly drinfeld_poly(long n, const RatFuncQ& a) {
  return zpoly_mul<RatFuncQ>({RatFuncQ(1), -(qp(-n - 1) * a)},
                             {RatFuncQ(1), -(qp(n + 1) * a)});
}

Report verify_gklo_diagonal(const QAffineRep& rep, long N) {
  if (!rep.params) throw Error("verify_gklo_diagonal: not an evaluation module");
  const auto [n, a] = *rep.params;
  Report report;
  report.check = "qaffine/gklo";
  report.param("n", std::to_string(n));
  report.param("a", a.str());
  report.order = static_cast<int>(N);

  const GKLOResultQ g = gklo(rep, drinfeld_poly(n, a), N);
  Mat plus1 = zero<RatFuncQ>(rep.dim, rep.dim);
  Mat minus1 = zero<RatFuncQ>(rep.dim, rep.dim);
  for (long i = 0; i < rep.dim; ++i) {
    plus1(i, i) = -(qp(n - 1 - 2 * i) * a);
    minus1(i, i) = -(qp(-n + 1 + 2 * i) * a.inverse());
  }
  for (long e = 0; e <= g.plus_series.valid_to(); ++e) {
    Mat want = zero<RatFuncQ>(rep.dim, rep.dim);
    if (e == 0) want = identity<RatFuncQ>(rep.dim);
    if (e == 1) want = plus1;
    if (!is_zero(g.plus_series.coeff_at(e) - want))
      report.fail("A+ z^" + std::to_string(e), mat_str(g.plus_series.coeff_at(e) - want));
  }
  for (long e = 0; e <= g.minus_series.valid_to(); ++e) {
    Mat want = zero<RatFuncQ>(rep.dim, rep.dim);
    if (e == 0) want = identity<RatFuncQ>(rep.dim);
    if (e == 1) want = minus1;
    if (!is_zero(g.minus_series.coeff_at(e) - want))
      report.fail("A- z^-" + std::to_string(e), mat_str(g.minus_series.coeff_at(e) - want));
  }
  for (const auto& [e, residual] : gklo_defining_residuals(rep, g, '+', N))
    report.fail("defining residual + " + zpow_label(Direction::asc_z, e), mat_str(residual));
  for (const auto& [e, residual] : gklo_defining_residuals(rep, g, '-', N))
    report.fail("defining residual - " + zpow_label(Direction::asc_zinv, e), mat_str(residual));
  return report;
}

Report verify_tensor_formula(const QAffineRep& v, const QAffineRep& w, long N,
                             char sign, Convention conv) {
  if (!v.params || !w.params)
    throw Error("verify_tensor_formula: factors must be evaluation modules");
  const auto [n, a] = *v.params;
  const auto [m, b] = *w.params;
  Report report;
  report.check = sign == '+' ? "qaffine/tensor-formula+" : "qaffine/tensor-formula-";
  report.param("n", std::to_string(n));
  report.param("a", a.str());
  report.param("m", std::to_string(m));
  report.param("b", b.str());
  report.order = static_cast<int>(N);

  const QAffineRep t = tensor(v, w, conv);
  report.convention = t.convention_label;
  const GKLOResultQ g = gklo(t, zpoly_mul(drinfeld_poly(n, a), drinfeld_poly(m, b)), N);

  const Mat p = primed_basis(w);
  const Mat qmat = kron(identity<RatFuncQ>(v.dim), p);
  const Mat qinv = exact_inverse(qmat);

  // Off-diagonal coefficient of the two-term action. The printed displays
  // carry a b q^{n-m-2(i-j)} (q-q^{-1})^2 and (1-q^2)^2; the coproduct
  // factorization theorem (checked independently by verify_coproduct) forces
  // an extra q^{-1} on both, and that is the value verified here. The
  // comparison against the printed constant is reported as a note.
  auto offdiag = [&](long i, long j, bool as_printed) {
    RatFuncQ c = sign == '+'
                     ? a * b * qp(n - m - 2 * (i - j)) * qdiff() * qdiff()
                     : (RatFuncQ(1) - qp(2)) * (RatFuncQ(1) - qp(2));
    return as_printed ? c : c * qp(-1);
  };

  const long dv = v.dim, dw = w.dim;
  auto expected_matrices = [&](bool as_printed) {
    std::vector<Mat> expected(3, zero<RatFuncQ>(dv * dw, dv * dw));
    for (long i = 0; i < dv; ++i)
      for (long j = 0; j < dw; ++j) {
        const long col = i * dw + j;
        RatFuncQ r1, r2;  // the two diagonal root factors
        if (sign == '+') {
          r1 = qp(n - 1 - 2 * i) * a;
          r2 = qp(-m - 1 + 2 * j) * b;
        } else {
          r1 = qp(-n + 1 + 2 * i) * a.inverse();
          r2 = qp(m + 1 - 2 * j) * b.inverse();
        }
        expected[0](col, col) = RatFuncQ(1);
        expected[1](col, col) = -(r1 + r2);
        expected[2](col, col) = r1 * r2;
        if (i + 1 < dv && j + 1 < dw)
          expected[1]((i + 1) * dw + (j + 1), col) = offdiag(i, j, as_printed);
      }
    return expected;
  };

  const std::vector<Mat> expected = expected_matrices(false);
  const Series& series = sign == '+' ? g.plus_series : g.minus_series;
  std::vector<Mat> transformed;
  for (long e = 0; e <= series.valid_to(); ++e) {
    transformed.push_back(qinv * series.coeff_at(e) * qmat);
    const Mat want = e <= 2 ? expected[static_cast<size_t>(e)]
                            : zero<RatFuncQ>(dv * dw, dv * dw);
    if (!is_zero(transformed.back() - want))
      report.fail(zpow_label(series.dir(), e), mat_str(transformed.back() - want));
  }
  if (series.valid_to() >= 1) {
    const std::vector<Mat> printed = expected_matrices(true);
    report.notes.push_back(
        is_zero(transformed[1] - printed[1])
            ? "off-diagonal matches the printed display constant"
            : "off-diagonal matches the coproduct-theorem value (printed display "
              "constant is a factor q higher and fails exactly)");
  }
  return report;
}

Series t_series(const QAffineRep& rep, char sign, long N) {
  const Direction dir = sign == '+' ? Direction::asc_z : Direction::asc_zinv;
  const QAffineRep rd = derive_modes(rep, std::max<long>(1, (N + 1) / 2));
  const Mat inv0 = exact_inverse(sign == '+' ? rd.phi_plus_0 : rd.phi_minus_0);
  const Series unit = const_series(inv0, dir, N) * phi_series(rd, sign, N);
  const Series logp = series_log(unit);
  const Series scaled = scale_exponents<RatFuncQ>(logp, [&](long e) -> RatFuncQ {
    const long s = dir == Direction::asc_z ? e : -e;
    if (s == 0) return RatFuncQ(1);
    return (qp(2 * s) - qp(-2 * s)).inverse();
  });
  return series_exp(scaled);
}

Report verify_t_coproduct(const QAffineRep& v, const QAffineRep& w, long N,
                          Convention conv) {
  Report report;
  report.check = "qaffine/t-coproduct";
  report.param("dimV", std::to_string(v.dim));
  report.param("dimW", std::to_string(w.dim));
  report.order = static_cast<int>(N);

  const QAffineRep vd = derive_modes(v, 1);
  const QAffineRep wd = derive_modes(w, 1);
  const QAffineRep t = tensor(vd, wd, conv);
  report.convention = t.convention_label;

  const Series lhs = t_series(t, '-', N);
  const Series tv = t_series(vd, '-', N);
  const Series tw = t_series(wd, '-', N);
  const Mat x = kron(vd.x_minus_0, wd.x_plus(-1));
  const Series mid = q_exp_series(x, qdiff(), Direction::asc_zinv, N);
  const Series rhs = kron_series(Series::one(Direction::asc_zinv, vd.dim, N), tw) * mid *
                     kron_series(tv, Series::one(Direction::asc_zinv, wd.dim, N));
  compare_series_into(lhs, rhs, report);
  return report;
}

Report verify_interversion(const QAffineRep& rep, char sign, long N) {
  Report report;
  report.check = "qaffine/interversion";
  report.param("sign", std::string(1, sign));
  if (rep.params) {
    report.param("n", std::to_string(rep.params->first));
    report.param("a", rep.params->second.str());
  }
  report.order = static_cast<int>(N);

  const GKLOResultQ g = gklo(rep, {RatFuncQ(1)}, N);
  const Series& a_series = sign == '+' ? g.plus_series : g.minus_series;
  const Series t = t_series(rep, sign, N);
  const Series lhs = a_series * t;
  const Series rhs = shift_scale(t, qp(-2));
  compare_series_into(lhs, rhs, report);
  return report;
}

Report verify_qcomm_shift(const QAffineRep& rep, long kmax, long N) {
  Report report;
  report.check = "qaffine/qcomm-shift";
  report.param("kmax", std::to_string(kmax));
  report.order = static_cast<int>(N);

  const QAffineRep rd = derive_modes(rep, std::max<long>(kmax + 1, 2));
  const GKLOResultQ g = gklo(rd, {RatFuncQ(1)}, N);
  for (long k = 0; k <= kmax; ++k) {
    const Series lhs = comm_const(g.minus_series, rd.x_minus(k));
    std::vector<Mat> coeffs;
    for (long e = 0; e <= g.minus_series.valid_to(); ++e)
      coeffs.push_back(qcomm(g.minus_series.coeff_at(e), rd.x_minus(k - 1), qp(2)));
    const Series rhs =
        Series(Direction::asc_zinv, 0, std::move(coeffs)).shifted_by_monomial(1);
    for (const auto& [e, residual] : series_residuals(lhs, rhs))
      report.fail("k=" + std::to_string(k) + " " + zpow_label(Direction::asc_zinv, e),
                  mat_str(residual));
  }
  return report;
}

Series q_exp_series(const Mat& x, const RatFuncQ& c, Direction dir, long valid_to,
                    int base) {
  const long dim = x.rows();
  std::vector<Mat> coeffs(static_cast<size_t>(valid_to) + 1, zero<RatFuncQ>(dim, dim));
  coeffs[0] = identity<RatFuncQ>(dim);
  Mat power = identity<RatFuncQ>(dim);
  RatFuncQ cpow(1);
  RatFuncQ fact(1);
  for (long k = 1; k <= valid_to; ++k) {
    power = power * x;
    if (is_zero(power)) break;
    cpow *= c;
    fact *= q_int_base(k, base);
    coeffs[static_cast<size_t>(k)] = scalar_mul(cpow / fact, power);
  }
  return Series(dir, 0, std::move(coeffs));
}

Report verify_qexp_identities(const Mat& x, const Mat& y) {
  Report report;
  report.check = "qaffine/qexp-identities";
  report.order = 0;
  const Mat hyp = x * y - scalar_mul(qp(2), y * x);
  if (!is_zero(hyp))
    throw Error("verify_qexp_identities: hypothesis XY = q^2 YX fails");

  const long window = x.rows() + 1;
  report.order = static_cast<int>(window);

  // exp_q(z(X+Y)) = exp_q(zY) exp_q(zX)
  {
    const Series lhs = q_exp_series(x + y, RatFuncQ(1), Direction::asc_z, window);
    const Series rhs = q_exp_series(y, RatFuncQ(1), Direction::asc_z, window) *
                       q_exp_series(x, RatFuncQ(1), Direction::asc_z, window);
    for (const auto& [e, residual] : series_residuals(lhs, rhs))
      report.fail("product rule " + zpow_label(Direction::asc_z, e), mat_str(residual));
  }
  // exp_q(zX) exp_{q^{-1}}(-zX) = 1
  {
    const Series lhs = q_exp_series(x, RatFuncQ(1), Direction::asc_z, window) *
                       q_exp_series(x, RatFuncQ(-1), Direction::asc_z, window, -1);
    const Series rhs = Series::one(Direction::asc_z, x.rows(), window);
    for (const auto& [e, residual] : series_residuals(lhs, rhs))
      report.fail("inverse rule " + zpow_label(Direction::asc_z, e), mat_str(residual));
  }
  // exp_q(zX) = (1 + (1 - q^{-2}) zX) exp_q(q^{-2} zX)
  {
    const Series lhs = q_exp_series(x, RatFuncQ(1), Direction::asc_z, window);
    Series linear = Series::one(Direction::asc_z, x.rows(), window);
    linear = linear + Series::monomial(Direction::asc_z, 1,
                                       scalar_mul(RatFuncQ(1) - qp(-2), x), window);
    const Series rhs = linear * q_exp_series(x, qp(-2), Direction::asc_z, window);
    for (const auto& [e, residual] : series_residuals(lhs, rhs))
      report.fail("ratio rule " + zpow_label(Direction::asc_z, e), mat_str(residual));
  }
  return report;
}

}  // namespace truncata::qaffine
