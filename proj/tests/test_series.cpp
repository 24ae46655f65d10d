#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "truncata/series.hpp"

using namespace truncata;

namespace {

using SeriesQ = TruncSeries<Rational>;
using SeriesQq = TruncSeries<RatFuncQ>;

MatQ m1x1(const Rational& c) {
  MatQ m(1, 1);
  m(0, 0) = c;
  return m;
}

MatQq mq1x1(const RatFuncQ& c) {
  MatQq m(1, 1);
  m(0, 0) = c;
  return m;
}

SeriesQ scalar_series(Direction dir, long offset, std::vector<Rational> coeffs) {
  std::vector<MatQ> v;
  for (auto& c : coeffs) v.push_back(m1x1(c));
  return SeriesQ(dir, offset, std::move(v));
}

Rational at(const SeriesQ& s, long e) { return s.coeff_at(e)(0, 0); }

}  // namespace

TEST_CASE("product truncates to the common window") {
  // (1 + w)(1 - w) = 1 - w^2
  const auto a = scalar_series(Direction::asc_zinv, 0, {1, 1});
  const auto b = scalar_series(Direction::asc_zinv, 0, {1, -1});
  const auto p = a * b;
  CHECK(p.offset() == 0);
  CHECK(p.valid_to() == 1);  // windows of order 1 multiply to order 1
  CHECK(at(p, 0) == Rational(1));
  CHECK(at(p, 1) == Rational(0));

  const auto a3 = scalar_series(Direction::asc_zinv, 0, {1, 1, 0, 0});
  const auto b3 = scalar_series(Direction::asc_zinv, 0, {1, -1, 0, 0});
  const auto p3 = a3 * b3;
  CHECK(at(p3, 2) == Rational(-1));
  CHECK(at(p3, 3) == Rational(0));
}

TEST_CASE("series inverse against the geometric oracle") {
  CHECK(series_equal(series_inv(SeriesQ::one(Direction::asc_zinv, 1, 5)),
                     SeriesQ::one(Direction::asc_zinv, 1, 5)));
  // 1/(1+w) = sum (-1)^k w^k
  const auto a = scalar_series(Direction::asc_zinv, 0, {1, 1, 0, 0});
  const auto inv = series_inv(a);
  for (long k = 0; k <= 3; ++k) CHECK(at(inv, k) == pow(Rational(-1), k));
  CHECK_THROWS_AS(series_inv(scalar_series(Direction::asc_zinv, 0, {0, 1})), Error);
}

TEST_CASE("additive shift expands 1/(z -+ 1)") {
  // z^{-1} is w; shifting z -> z - 1 gives 1/(z-1) = w + w^2 + w^3 + ...
  const auto w = scalar_series(Direction::asc_zinv, 1, {1, 0, 0});
  const auto minus = shift_additive(w, Rational(-1));
  CHECK(at(minus, 1) == Rational(1));
  CHECK(at(minus, 2) == Rational(1));
  CHECK(at(minus, 3) == Rational(1));
  const auto plus = shift_additive(w, Rational(1));
  CHECK(at(plus, 1) == Rational(1));
  CHECK(at(plus, 2) == Rational(-1));
  CHECK(at(plus, 3) == Rational(1));
  // constants are fixed points
  const auto c = scalar_series(Direction::asc_zinv, 0, {7, 0, 0});
  CHECK(series_equal(shift_additive(c, Rational(5)), c));
}

TEST_CASE("additive shifts by +1 and -1 cancel") {
  std::mt19937 rng(321);
  std::uniform_int_distribution<int> c(-4, 4);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Rational> coeffs(9, Rational(0));
    for (auto& x : coeffs) x = Rational(c(rng));
    const auto a = scalar_series(Direction::asc_zinv, 0, std::move(coeffs));
    CHECK(series_equal(shift_additive(shift_additive(a, Rational(1)), Rational(-1)), a));
  }
}

TEST_CASE("scale shift") {
  const RatFuncQ q2 = RatFuncQ::q_pow(2);
  std::vector<MatQq> up = {mq1x1(RatFuncQ(1)), mq1x1(RatFuncQ(1))};
  const SeriesQq asc(Direction::asc_z, 0, up);
  const auto scaled = shift_scale(asc, q2);
  CHECK(scaled.coeff_at(1)(0, 0) == q2);

  std::vector<MatQq> down = {mq1x1(RatFuncQ(1)), mq1x1(RatFuncQ(1))};
  const SeriesQq desc(Direction::asc_zinv, 0, down);
  const auto dscaled = shift_scale(desc, q2);
  CHECK(dscaled.coeff_at(1)(0, 0) == RatFuncQ::q_pow(-2));

  const auto same = shift_scale(desc, RatFuncQ(1));
  CHECK(series_equal(same, desc));
  CHECK_THROWS_AS(shift_scale(desc, RatFuncQ(0)), Error);
}

TEST_CASE("log and exp") {
  const auto one = SeriesQ::one(Direction::asc_zinv, 1, 4);
  CHECK(series_log(one).low_exponent() > 4);
  CHECK(series_equal(series_exp(SeriesQ::zero(Direction::asc_zinv, 1, 1, 4)), one));

  // Mercator: log(1 + w) = w - w^2/2 + w^3/3
  const auto a = scalar_series(Direction::asc_zinv, 0, {1, 1, 0, 0});
  const auto l = series_log(a);
  CHECK(at(l, 1) == Rational(1));
  CHECK(at(l, 2) == Rational(-1, 2));
  CHECK(at(l, 3) == Rational(1, 3));

  // exp(log(1 + N z)) = 1 + N z for nilpotent N
  MatQ n = zero<Rational>(2, 2);
  n(0, 1) = Rational(3);
  std::vector<MatQ> coeffs = {identity<Rational>(2), n, zero<Rational>(2, 2)};
  const SeriesQ u(Direction::asc_z, 0, coeffs);
  CHECK(series_equal(series_exp(series_log(u)), u));
  CHECK_THROWS_AS(series_log(scalar_series(Direction::asc_zinv, 0, {2, 1})), Error);
  CHECK_THROWS_AS(series_exp(scalar_series(Direction::asc_zinv, 0, {2, 1})), Error);
}

TEST_CASE("exp(log) round trips on random unipotent series") {
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> c(-3, 3);
  std::uniform_int_distribution<int> den(1, 4);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<MatQ> coeffs;
    coeffs.push_back(identity<Rational>(2));
    for (int k = 1; k <= 8; ++k) {
      MatQ m(2, 2);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m(i, j) = Rational(c(rng), den(rng));
      coeffs.push_back(std::move(m));
    }
    const SeriesQ a(Direction::asc_zinv, 0, std::move(coeffs));
    CHECK(series_equal(series_exp(series_log(a)), a));
  }
}

TEST_CASE("two-factor solver recovers a planted solution") {
  CHECK(series_equal(
      solve_two_factor(SeriesQ::one(Direction::asc_zinv, 1, 6),
                       ShiftSpec<Rational>::additive(Rational(-1))),
      SeriesQ::one(Direction::asc_zinv, 1, 6)));

  std::mt19937 rng(2718);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int trial = 0; trial < 8; ++trial) {
    // planted diagonal unit series (coefficients commute)
    std::vector<MatQ> coeffs;
    coeffs.push_back(identity<Rational>(2));
    for (int k = 1; k <= 6; ++k) {
      MatQ m = zero<Rational>(2, 2);
      m(0, 0) = Rational(c(rng));
      m(1, 1) = Rational(c(rng));
      coeffs.push_back(std::move(m));
    }
    const SeriesQ planted(Direction::asc_zinv, 0, std::move(coeffs));
    const SeriesQ g = planted * shift_additive(planted, Rational(-1));
    const SeriesQ solved =
        solve_two_factor(g, ShiftSpec<Rational>::additive(Rational(-1)));
    CHECK(series_equal(solved, planted.truncated(solved.valid_to())));
  }
}

TEST_CASE("two-factor solver with the q^2 scale shift") {
  // G = (1 - az)(1 - q^2 az) factors as U(z) U(zq^2) with U = 1 - az
  const RatFuncQ a = RatFuncQ::parse("2*q^3");
  const RatFuncQ q2 = RatFuncQ::q_pow(2);
  const ZPoly<RatFuncQ> g = zpoly_mul<RatFuncQ>({RatFuncQ(1), -a}, {RatFuncQ(1), -(q2 * a)});
  const SeriesQq gs = zpoly_series(g, Direction::asc_z, 8);
  const SeriesQq u = solve_two_factor(gs, ShiftSpec<RatFuncQ>::scale(q2));
  CHECK(u.coeff_at(0)(0, 0) == RatFuncQ(1));
  CHECK(u.coeff_at(1)(0, 0) == -a);
  for (long k = 2; k <= 8; ++k) CHECK(u.coeff_at(k)(0, 0).is_zero());
  // and the factorization reproduces G
  CHECK(series_equal(u * shift_scale(u, q2), gs));
}

TEST_CASE("star factor of a monic even polynomial") {
  // a = 1: trivial factor
  const auto [m0, u0] = star_factor_additive<Rational>({Rational(1)}, 6);
  CHECK(m0 == 0);
  CHECK(series_equal(u0, SeriesQ::one(Direction::asc_zinv, 1, 6)));

  // a = z^2: u satisfies u(z) u(z-1) = (1 - w)^{-1}, first coefficient 1/2
  const auto [m1, u1] = star_factor_additive<Rational>({0, 0, Rational(1)}, 8);
  CHECK(m1 == 1);
  CHECK(at(u1, 1) == Rational(1, 2));
  // factor-check oracle: (z u(z)) ((z-1) u(z-1)) = z^2 to window order
  const auto lhs = (u1 * scalar_series(Direction::asc_zinv, 0, {1, -1, 0, 0, 0, 0, 0, 0, 0}) *
                    shift_additive(u1, Rational(-1)))
                       .shifted_by_monomial(-2);
  for (long e = lhs.offset(); e <= lhs.valid_to(); ++e)
    CHECK(at(lhs, e) == (e == -2 ? Rational(1) : Rational(0)));

  CHECK_THROWS_AS(star_factor_additive<Rational>({Rational(1), Rational(1)}, 6), Error);
  CHECK_THROWS_AS(star_factor_additive<Rational>({0, 0, Rational(2)}, 6), Error);
}

TEST_CASE("star factor is multiplicative") {
  auto quad = [](long u, long v) {
    return zpoly_mul(zpoly_linear(Rational(u)), zpoly_linear(Rational(v)));
  };
  std::mt19937 rng(1618);
  std::uniform_int_distribution<int> c(-3, 3);
  std::vector<std::pair<ZPoly<Rational>, ZPoly<Rational>>> pairs = {
      {quad(2, 1), quad(3, 2)}};
  for (int t = 0; t < 10; ++t)
    pairs.push_back({quad(c(rng), c(rng)), quad(c(rng), c(rng))});
  for (const auto& [a, b] : pairs) {
    const auto sa = star_factor_additive(a, 8);
    const auto sb = star_factor_additive(b, 8);
    const auto sab = star_factor_additive(zpoly_mul(a, b), 8);
    CHECK(sab.first == sa.first + sb.first);
    CHECK(series_equal(sab.second, (sa.second * sb.second).truncated(8)));
  }
}

TEST_CASE("rational function expansion helper") {
  // (z+1)(z-1)/(z(z-1)) = (z+1)/z = 1 + w
  const auto num = zpoly_mul(zpoly_linear(Rational(1)), zpoly_linear(Rational(-1)));
  const auto den = zpoly_mul(zpoly_linear(Rational(0)), zpoly_linear(Rational(-1)));
  const auto s = zpoly_ratio_series(num, den, Direction::asc_zinv, 5);
  CHECK(at(s, 0) == Rational(1));
  CHECK(at(s, 1) == Rational(1));
  for (long k = 2; k <= 5; ++k) CHECK(at(s, k) == Rational(0));
}

TEST_CASE("series text form") {
  const auto u = scalar_series(Direction::asc_zinv, -2, {1, Rational(1, 2)});
  CHECK(series_str(u) == "z^{2} * (1 + 1/2*z^-1)");
  const auto v = scalar_series(Direction::asc_z, 0, {1, 0, Rational(3)});
  CHECK(series_str(v) == "(1 + 3*z^2)");
}
