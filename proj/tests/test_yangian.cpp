#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "truncata/yangian.hpp"

using namespace truncata;
using namespace truncata::yangian;

namespace {

// Independent expansion of (z+u)(z+v)/((z+s)(z+t)) in z^{-1}: multiply the
// numerator window by the geometric inverses of the denominator factors.
std::vector<Rational> expand_ratio_oracle(const Rational& u, const Rational& v,
                                          const Rational& s, const Rational& t,
                                          long order) {
  std::vector<Rational> acc(static_cast<size_t>(order) + 1, Rational(0));
  acc[0] = Rational(1);
  auto mul_linear = [&](const Rational& c) {
    // multiply by (1 + c w)
    for (long k = order; k >= 1; --k) acc[static_cast<size_t>(k)] += c * acc[static_cast<size_t>(k - 1)];
  };
  auto div_linear = [&](const Rational& c) {
    // multiply by 1/(1 + c w) = sum (-c)^k w^k
    std::vector<Rational> out(acc.size(), Rational(0));
    for (long k = 0; k <= order; ++k) {
      Rational p(1);
      for (long j = k; j >= 0; --j) {
        out[static_cast<size_t>(k)] += acc[static_cast<size_t>(j)] * p;
        p *= -c;
      }
    }
    acc = std::move(out);
  };
  mul_linear(u);
  mul_linear(v);
  div_linear(s);
  div_linear(t);
  return acc;
}

}  // namespace

TEST_CASE("evaluation modules") {
  const YangianRep r10 = make_evaluation_module(1, 0);
  CHECK(r10.dim == 2);
  CHECK(r10.h_0(0, 0) == Rational(1));
  CHECK(r10.h_0(1, 1) == Rational(-1));
  CHECK(is_zero(r10.h_1));
  CHECK(r10.x_minus_0(1, 0) == Rational(1));
  CHECK(r10.x_plus_0(0, 1) == Rational(1));

  const YangianRep triv = trivial_module();
  CHECK(triv.dim == 1);
  CHECK(is_zero(triv.h_0));
  CHECK(is_zero(triv.x_plus_0));

  const YangianRep r20 = make_evaluation_module(2, 0);
  CHECK(r20.dim == 3);
  CHECK(r20.x_plus_0(0, 1) == Rational(2));  // 1 * (2 - 1 + 1)
  CHECK(r20.x_plus_0(1, 2) == Rational(2));  // 2 * (2 - 2 + 1)

  CHECK(make_evaluation_module(Rational(5, 2), Rational(1, 2)).dim == 3);
  CHECK_THROWS_WITH_AS(make_evaluation_module(Rational(1, 2), 0),
                       "not a dominant evaluation parameter", Error);
  CHECK_THROWS_AS(make_evaluation_module(0, 1), Error);
}

TEST_CASE("mode derivation") {
  const YangianRep triv = derive_modes(trivial_module(), 6);
  for (long n = 0; n <= 6; ++n) {
    CHECK(is_zero(triv.x_plus(n)));
    CHECK(is_zero(triv.x_minus(n)));
    CHECK(is_zero(triv.h(n)));
  }

  const YangianRep r10 = derive_modes(make_evaluation_module(1, 0), 3);
  CHECK(is_zero(r10.x_plus(1)));
  CHECK(is_zero(r10.x_minus(1)));

  // h_2 on L(2,0) against an independent expansion of the h(z) eigenvalue
  const YangianRep r20 = derive_modes(make_evaluation_module(2, 0), 3);
  for (long i = 0; i < 3; ++i) {
    const auto coeffs = expand_ratio_oracle(Rational(2), Rational(-1), Rational(i),
                                            Rational(i - 1), 4);
    // h_n is the w^{n+1} coefficient
    CHECK(r20.h(2)(i, i) == coeffs[3]);
    CHECK(r20.h(3)(i, i) == coeffs[4]);
  }
}

TEST_CASE("defining relations hold on evaluation modules") {
  for (const auto& [a, b] : std::vector<std::pair<Rational, Rational>>{
           {1, 0}, {2, 0}, {Rational(5, 2), Rational(1, 2)}}) {
    const Report r = check_relations(make_evaluation_module(a, b), 4);
    CHECK(r.pass);
  }
}

TEST_CASE("corrupted module is caught by the relation checker") {
  YangianRep rep = make_evaluation_module(2, 0);
  rep.h_1 += identity<Rational>(rep.dim);
  const Report r = check_relations(rep, 2);
  CHECK_FALSE(r.pass);
  bool found = false;
  for (const auto& w : r.witnesses)
    if (w.where == "[x+_r,x-_s]=h r=1 s=0") found = true;
  CHECK(found);

  // a non-diagonal corruption breaks the mixed family at r=0, s=0
  YangianRep rep2 = make_evaluation_module(1, 0);
  rep2.h_1 += rep2.x_plus_0;
  const Report r2 = check_relations(rep2, 2);
  CHECK_FALSE(r2.pass);
  bool mixed = false;
  for (const auto& w : r2.witnesses)
    if (w.where.find("mixed r=0 s=0") != std::string::npos) mixed = true;
  CHECK(mixed);
}

TEST_CASE("tensor modules") {
  const YangianRep v = make_evaluation_module(1, 0);
  const YangianRep triv = trivial_module();
  const YangianRep vt = tensor(v, triv);
  CHECK(is_zero(vt.x_plus_0 - v.x_plus_0));
  CHECK(is_zero(vt.h_1 - v.h_1));

  const YangianRep vv = tensor(v, v);
  CHECK(vv.dim == 4);
  CHECK(vv.h_0(0, 0) == Rational(2));
  CHECK(vv.h_0(1, 1) == Rational(0));
  CHECK(vv.h_0(2, 2) == Rational(0));
  CHECK(vv.h_0(3, 3) == Rational(-2));

  const Report r = check_relations(tensor(make_evaluation_module(2, 0), v), 4);
  CHECK(r.pass);
}

TEST_CASE("gklo diagonal actions") {
  // trivial module, a = 1
  const GKLOResult g1 = gklo(trivial_module(), {Rational(1)}, 8);
  CHECK(g1.m == 0);
  CHECK(is_identity(g1.polynomial_part[0]));
  CHECK(series_equal(g1.full_series,
                     TruncSeries<Rational>::one(Direction::asc_zinv, 1, 8)));

  CHECK(verify_gklo_diagonal(make_evaluation_module(1, 0), 8).pass);
  CHECK(verify_gklo_diagonal(make_evaluation_module(2, 1), 8).pass);
  CHECK(verify_gklo_diagonal(make_evaluation_module(Rational(5, 2), Rational(1, 2)), 8).pass);

  // defining residual on a tensor module, a = product of the factors'
  const YangianRep t = tensor(make_evaluation_module(2, 0), make_evaluation_module(1, 0));
  const APoly ab = zpoly_mul(drinfeld_poly(2, 0), drinfeld_poly(1, 0));
  const GKLOResult gt = gklo(t, ab, 10);
  CHECK(gklo_defining_residuals(t, gt, 10).empty());
}

TEST_CASE("coproduct factorization of the GKLO series") {
  const YangianRep triv = trivial_module();
  CHECK(verify_coproduct(triv, {Rational(1)}, triv, {Rational(1)}, 6).pass);

  const YangianRep v = make_evaluation_module(1, 0);
  CHECK(verify_coproduct(v, drinfeld_poly(1, 0), v, drinfeld_poly(1, 0), 8).pass);
  CHECK_THROWS_AS(verify_coproduct(v, drinfeld_poly(1, 0), v, drinfeld_poly(1, 0), 7),
                  Error);
}

TEST_CASE("coproduct sides agree at sample points") {
  // window sums of both sides evaluated at rational z values
  const YangianRep v = make_evaluation_module(1, 0);
  const APoly a = drinfeld_poly(1, 0);
  const long window = 10;
  const GKLOResult ga = gklo(v, a, window);
  const YangianRep t = tensor(v, v);
  const GKLOResult gab = gklo(t, zpoly_mul(a, a), window);
  const TruncSeries<Rational> rhs =
      kron_series(ga.full_series, ga.full_series) +
      kron_series(comm_const(ga.full_series, v.x_minus_0),
                  comm_const(v.x_plus_0, ga.full_series));
  for (const Rational z0 : {Rational(3), Rational(-7, 2), Rational(13, 5)}) {
    const MatQ l = series_eval_at(gab.full_series.truncated(8), z0);
    const MatQ r = series_eval_at(rhs.truncated(8), z0);
    CHECK(is_zero(l - r));
  }
}

TEST_CASE("closed two-term tensor action") {
  const YangianRep v = make_evaluation_module(2, 0);
  const YangianRep w = make_evaluation_module(1, 0);
  CHECK(verify_tensor_formula(v, w, 10).pass);
}

TEST_CASE("K-series") {
  const auto k = k_series(make_evaluation_module(1, 0), 6);
  CHECK(k.coeff_at(1)(0, 0) == Rational(1, 2));
  CHECK(k.coeff_at(1)(1, 1) == Rational(-1, 2));
  // (1+w)^{1/2} squared gives back 1 + w
  const auto sq = k * k;
  CHECK(sq.coeff_at(0)(0, 0) == Rational(1));
  CHECK(sq.coeff_at(1)(0, 0) == Rational(1));
  for (long e = 2; e <= sq.valid_to(); ++e) CHECK(sq.coeff_at(e)(0, 0).is_zero());

  const auto kt = k_series(trivial_module(), 6);
  CHECK(series_equal(kt, TruncSeries<Rational>::one(Direction::asc_zinv, 1, 6)));
}

TEST_CASE("S-series solves its difference equation") {
  CHECK(series_equal(s_series(trivial_module(), 6),
                     TruncSeries<Rational>::one(Direction::asc_zinv, 1, 6)));
  CHECK(verify_s_difference_equation(make_evaluation_module(1, 0), 6).pass);
  CHECK(verify_s_difference_equation(make_evaluation_module(2, 0), 5).pass);
  CHECK(verify_s_difference_equation(
            tensor(make_evaluation_module(1, 0), make_evaluation_module(1, 0)), 5)
            .pass);
}

TEST_CASE("S-series resonance is surfaced as an error") {
  // Synthetic M with M_1 = -1 makes the k = 1 system singular.
  std::vector<MatQ> coeffs(8, zero<Rational>(1, 1));
  coeffs[0](0, 0) = Rational(1);
  coeffs[1](0, 0) = Rational(-1);
  const TruncSeries<Rational> m(Direction::asc_zinv, 0, std::move(coeffs));
  try {
    s_series_from(m, 6);
    CHECK(false);
  } catch (const ResonanceError& e) {
    CHECK(e.coefficient_index == 1);
  }
}

TEST_CASE("S-series coproduct") {
  const YangianRep v = make_evaluation_module(1, 0);
  const YangianRep w = make_evaluation_module(2, 0);
  CHECK(verify_s_coproduct(trivial_module(), trivial_module(), 5).pass);
  CHECK(verify_s_coproduct(v, v, 6).pass);
  CHECK(verify_s_coproduct(w, v, 6).pass);
}

TEST_CASE("exponential shift identity on a pair with nonzero x+_1") {
  const YangianRep v = make_evaluation_module(2, 0);
  const YangianRep w = make_evaluation_module(2, 0);
  const YangianRep wd = derive_modes(w, 1);
  CHECK_FALSE(is_zero(wd.x_plus(1)));
  CHECK(verify_exp_shift_identity(v, w, Rational(3)).pass);
  CHECK(verify_exp_shift_identity(v, w, Rational(5, 2)).pass);
  CHECK(verify_exp_shift_identity(make_evaluation_module(1, 0),
                                  make_evaluation_module(1, 0), Rational(3))
            .pass);
}
