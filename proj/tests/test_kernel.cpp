#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "truncata/binomial_identities.hpp"
#include "truncata/matrix_ops.hpp"

using namespace truncata;

TEST_CASE("rational arithmetic and canonical form") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK((Rational(1, 3) * Rational(3, 5)) == Rational(1, 5));
  CHECK((Rational(1) / Rational(1, 7)).str() == "7");
  CHECK(Rational::from_string("-3/9") == Rational(-1, 3));
  CHECK(Rational::from_string("5").str() == "5");
  CHECK(Rational(3, 2).str() == "3/2");
  CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
  CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
}

TEST_CASE("generalized binomial") {
  CHECK(generalized_binomial(Rational(5), 2) == Rational(10));
  // (1/2 choose 2) = (1/2)(-1/2)/2
  CHECK(generalized_binomial(Rational(1, 2), 2) == Rational(-1, 8));
  CHECK(generalized_binomial(Rational(17, 3), 0) == Rational(1));
  CHECK(generalized_binomial(Rational(3), 5) == Rational(0));
  CHECK(generalized_binomial(Rational(-1), 3) == Rational(-1));
}

TEST_CASE("polynomial parse, print, divrem") {
  const PolyQ p = PolyQ::parse("3*q^2 + 1/2*q - 7");
  CHECK(p.str() == "3*q^2 + 1/2*q - 7");
  CHECK(PolyQ::parse("q^4-1").str() == "q^4 - 1");
  CHECK(PolyQ::parse("0").is_zero());
  CHECK(PolyQ::parse("-q^3+q").str() == "-q^3 + q");
  const auto [quo, rem] = PolyQ::divrem(PolyQ::parse("q^4-1"), PolyQ::parse("q^2-1"));
  CHECK(quo == PolyQ::parse("q^2+1"));
  CHECK(rem.is_zero());
}

TEST_CASE("polynomial gcd with multiply-back oracle") {
  const PolyQ a = PolyQ::parse("q^4 - 1");
  const PolyQ b = PolyQ::parse("q^2 - 1");
  const PolyQ g = PolyQ::gcd(a, b);
  CHECK(g == b);  // q^2 - 1 divides q^4 - 1: (q^2+1)(q^2-1) = q^4-1
  CHECK(PolyQ::parse("q^2+1") * b == a);
  CHECK(PolyQ::gcd(PolyQ::parse("q^2-1"), PolyQ::parse("q-1")) == PolyQ::parse("q-1"));
  CHECK(PolyQ::gcd(PolyQ::parse("q^3"), PolyQ::parse("q^5+q^2")) ==
        PolyQ::parse("q^2"));
  CHECK(PolyQ::gcd(PolyQ(), PolyQ::parse("2*q+2")) == PolyQ::parse("q+1"));
  CHECK(PolyQ::gcd(PolyQ::parse("q+1"), PolyQ::parse("q+2")).is_one());
}

TEST_CASE("rational function normalization") {
  // (q^2-1)/(q-1) reduces to q+1
  CHECK(RatFuncQ(PolyQ::parse("q^2-1"), PolyQ::parse("q-1")) ==
        RatFuncQ(PolyQ::parse("q+1")));
  // zero normalizes to 0/1
  const RatFuncQ z(PolyQ(), PolyQ::parse("q^3"));
  CHECK(z.is_zero());
  CHECK(z.den().is_one());
  // (q^4-1)/(q^2-1) = q^2+1
  CHECK(RatFuncQ(PolyQ::parse("q^4-1"), PolyQ::parse("q^2-1")) ==
        RatFuncQ(PolyQ::parse("q^2+1")));
  CHECK_THROWS_AS(RatFuncQ(PolyQ::parse("q"), PolyQ()), DivisionByZero);
  // denominator made monic
  const RatFuncQ r(PolyQ::parse("q"), PolyQ::parse("2*q^2+2"));
  CHECK(r.den().leading() == Rational(1));
  CHECK(r.str() == "(1/2*q)/(q^2 + 1)");
}

TEST_CASE("rational function canonical form is unique under arithmetic") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> deg(0, 3);
  auto random_poly = [&]() {
    std::vector<Rational> c(static_cast<size_t>(deg(rng)) + 1, Rational(0));
    for (auto& x : c) x = Rational(coef(rng));
    return PolyQ(std::move(c));
  };
  int tested = 0;
  while (tested < 200) {
    const PolyQ n1 = random_poly(), d1 = random_poly();
    const PolyQ n2 = random_poly(), d2 = random_poly();
    if (d1.is_zero() || d2.is_zero()) continue;
    ++tested;
    const RatFuncQ x(n1, d1), y(n2, d2);
    // building from scaled data gives the identical canonical form
    const PolyQ scale = PolyQ::parse("2*q+1");
    CHECK(RatFuncQ(n1 * scale, d1 * scale) == x);
    // product of canonical forms equals canonical form of the raw product
    CHECK(x * y == RatFuncQ(n1 * n2, d1 * d2));
  }
}

TEST_CASE("q-integers") {
  CHECK(q_integer(0).is_zero());
  CHECK(q_integer(1).is_one());
  CHECK(q_integer(3) == RatFuncQ(PolyQ::parse("q^4+q^2+1")));
  // long-division oracle: (n)_q * (q^2 - 1) = q^{2n} - 1
  for (long n = 0; n <= 8; ++n) {
    const RatFuncQ lhs = q_integer(n) * RatFuncQ(PolyQ::parse("q^2-1"));
    PolyQ target = PolyQ::monomial(Rational(1), 2 * n);
    target -= PolyQ(Rational(1));
    CHECK(lhs == RatFuncQ(target));
  }
  CHECK_THROWS_AS(q_integer(-1), Error);
  // value at q = 1 is n
  for (long n = 0; n <= 20; ++n)
    CHECK(q_integer(n).eval_at(Rational(1)) == Rational(n));
}

TEST_CASE("rational function parsing") {
  CHECK(RatFuncQ::parse("(q^4 - 1)/(q^2)").str() == "(q^4 - 1)/(q^2)");
  CHECK(RatFuncQ::parse("2*q^3") == RatFuncQ(PolyQ::parse("2*q^3")));
  CHECK(RatFuncQ::parse("q^-2") == RatFuncQ(PolyQ(Rational(1)), PolyQ::parse("q^2")));
  CHECK(RatFuncQ::parse("3/2*q^-1 + 1") ==
        RatFuncQ(PolyQ::parse("q + 3/2"), PolyQ::parse("q")));
  CHECK(RatFuncQ::q_pow(-3) * RatFuncQ::q_pow(3) == RatFuncQ(1));
  CHECK_THROWS_AS(RatFuncQ::parse("q^"), Error);
}

TEST_CASE("exact inverse") {
  using Mat = MatQq;
  const Mat id = identity<RatFuncQ>(3);
  CHECK(is_zero(exact_inverse(id) - id));

  Mat d = zero<RatFuncQ>(2, 2);
  d(0, 0) = RatFuncQ::q();
  d(1, 1) = RatFuncQ::q_pow(-1);
  const Mat dinv = exact_inverse(d);
  CHECK(dinv(0, 0) == RatFuncQ::q_pow(-1));
  CHECK(dinv(1, 1) == RatFuncQ::q());

  // 2x2 adjugate oracle: inv([[a,b],[c,d]]) = [[d,-b],[-c,a]]/det
  MatQ u(2, 2);
  u << Rational(1), Rational(1), Rational(0), Rational(1);
  MatQ adj(2, 2);
  adj << Rational(1), Rational(-1), Rational(0), Rational(1);
  CHECK(is_zero(exact_inverse(u) - adj));

  MatQ sing = zero<Rational>(2, 2);
  sing(0, 0) = Rational(1);
  sing(0, 1) = Rational(2);
  try {
    exact_inverse(sing);
    CHECK(false);
  } catch (const SingularMatrixError& e) {
    CHECK(e.pivot_column == 1);
  }
}

TEST_CASE("random exact inverses round trip") {
  std::mt19937 rng(987654);
  std::uniform_int_distribution<int> num(-10, 10);
  std::uniform_int_distribution<int> den(1, 10);
  std::uniform_int_distribution<int> dims(1, 6);
  int done = 0;
  while (done < 25) {
    const int n = dims(rng);
    MatQ m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = Rational(num(rng), den(rng));
    try {
      const MatQ inv = exact_inverse(m);
      CHECK(is_zero(m * inv - identity<Rational>(n)));
      CHECK(is_zero(inv * m - identity<Rational>(n)));
      ++done;
    } catch (const SingularMatrixError&) {
      // singular draw: try again
    }
  }
}

TEST_CASE("kron, comm, qcomm") {
  CHECK(is_zero(kron(identity<Rational>(2), identity<Rational>(3)) -
                          identity<Rational>(6)));
  // index convention: (i (x) j) -> i*cols(B)+j
  MatQ e01 = zero<Rational>(2, 2), e10 = zero<Rational>(2, 2);
  e01(0, 1) = Rational(1);
  e10(1, 0) = Rational(1);
  const MatQ k = kron(e01, e10);
  CHECK(k(1, 2) == Rational(1));  // row (0,1) = 1, col (1,0) = 2
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (!(i == 1 && j == 2)) CHECK(k(i, j).is_zero());

  std::mt19937 rng(5150);
  std::uniform_int_distribution<int> c(-3, 3);
  auto rnd = [&](int r, int cl) {
    MatQ m(r, cl);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < cl; ++j) m(i, j) = Rational(c(rng));
    return m;
  };
  const MatQ a = rnd(2, 2), b = rnd(3, 3), d = rnd(2, 2);
  CHECK(is_zero(kron(kron(a, b), d) - kron(a, kron(b, d))));
  CHECK(is_zero(comm(a, a)));

  // qcomm(diag(1,0), E01, q^2) = AB since BA = 0
  MatQq qa = zero<RatFuncQ>(2, 2), qb = zero<RatFuncQ>(2, 2);
  qa(0, 0) = RatFuncQ(1);
  qb(0, 1) = RatFuncQ(1);
  const MatQq r = qcomm(qa, qb, RatFuncQ::q_pow(2));
  CHECK(r(0, 1) == RatFuncQ(1));
  CHECK(r(0, 0).is_zero());
  CHECK(r(1, 0).is_zero());
  CHECK(r(1, 1).is_zero());
  CHECK_THROWS_AS(comm(rnd(2, 2), rnd(3, 3)), ShapeError);
}

TEST_CASE("nilpotent exponential") {
  MatQ n = zero<Rational>(2, 2);
  n(0, 1) = Rational(1);
  const MatQ e = exp_nilpotent(n);
  CHECK(e(0, 0) == Rational(1));
  CHECK(e(0, 1) == Rational(1));
  CHECK(e(1, 1) == Rational(1));
  MatQ bad = identity<Rational>(2);
  CHECK_THROWS_AS(exp_nilpotent(bad), Error);
}

TEST_CASE("twisted binomial coefficients") {
  const auto c0 = twisted_binomial_coeffs<Rational>(0, Rational(1, 3));
  REQUIRE(c0.size() == 1);
  CHECK(c0[0] == Rational(1));

  const Rational c(1, 4);
  const auto c2 = twisted_binomial_coeffs<Rational>(2, c);
  REQUIRE(c2.size() == 3);
  CHECK(c2[0] == Rational(1));
  CHECK(c2[1] == Rational(2));
  CHECK(c2[2] == Rational(1) - c);

  // A = E01 + E12, B = (E01 - E12)/2 satisfy AB - BA = -A^2 exactly
  MatQ a = zero<Rational>(3, 3), b = zero<Rational>(3, 3);
  a(0, 1) = Rational(1);
  a(1, 2) = Rational(1);
  b(0, 1) = Rational(1, 2);
  b(1, 2) = Rational(-1, 2);
  CHECK(is_zero(comm(a, b) + a * a));
  for (long n = 0; n <= 4; ++n) {
    const Report r = verify_twisted_binomial(a, b, Rational(-1), n);
    CHECK(r.pass);
  }
  // a wrong twist constant violates the hypothesis and is an error
  CHECK_THROWS_AS(verify_twisted_binomial(a, b, Rational(1), 2), Error);
}

TEST_CASE("matrix text form") {
  MatQ m(2, 2);
  m << Rational(1), Rational(1, 2), Rational(0), Rational(1);
  CHECK(mat_str(m) == "[[1, 1/2], [0, 1]]");
}
