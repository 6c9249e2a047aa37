#include <doctest.h>

#include "test_util.hpp"
#include "woundlab/hensel.hpp"

using namespace woundlab;
using namespace woundlab::testutil;

TEST_CASE("series precision is never overstated") {
  auto* F3 = FieldSpec::get(3, 1);
  for (int i = 0; i < 200; ++i) {
    LaurentSeries a = random_laurent_poly(F3, -4, 8);
    LaurentSeries b = random_laurent_poly(F3, -4, 8);
    long na = rand_int(-2, 6), nb = rand_int(-2, 6);
    LaurentSeries at = a.truncated(na), bt = b.truncated(nb);

    LaurentSeries sum_t = at + bt;
    LaurentSeries sum = a + b;
    for (long e = -10; e < sum_t.precision() && e < 10; ++e)
      CHECK(sum_t.coeff(e) == sum.coeff(e));

    LaurentSeries prod_t = at * bt;
    LaurentSeries prod = a * b;
    for (long e = -10; e < prod_t.precision() && e < 10; ++e)
      CHECK(prod_t.coeff(e) == prod.coeff(e));

    // asking beyond the horizon must throw
    CHECK_THROWS_AS(sum_t.coeff(sum_t.precision()), PrecisionError);
  }
}

TEST_CASE("hensel_solve examples") {
  auto* F3 = FieldSpec::get(3, 1);
  auto* F2 = FieldSpec::get(2, 1);

  SUBCASE("zero right-hand side") {
    FieldTower tw(F3);
    std::vector<LaurentSeries> a{LaurentSeries::variable(F3)};
    auto v = hensel_solve(tw, a, LaurentSeries::zero(F3), 10);
    CHECK(v.is_zero());
  }

  SUBCASE("v + t v^3 = t solved as t - t^4 modulo t^13") {
    FieldTower tw(F3);
    std::vector<LaurentSeries> a{LaurentSeries::variable(F3)};
    auto f = LaurentSeries::variable(F3);
    auto v = hensel_solve(tw, a, f, 13);
    auto expect = (LaurentSeries::variable(F3) +
                   LaurentSeries::monomial(FieldElement::from_int(F3, 2), 4))
                      .truncated(13);
    CHECK(v == expect);
    auto residual = v + a[0] * v.frobenius_pow(1) - f;
    CHECK((residual.is_zero() || residual.valuation() >= 13));
  }

  SUBCASE("char 2 with unit constant term: v + t v^2 = 1 + t gives v = 1") {
    FieldTower tw(F2);
    std::vector<LaurentSeries> a{LaurentSeries::variable(F2)};
    auto f = LaurentSeries::one(F2) + LaurentSeries::variable(F2);
    auto v = hensel_solve(tw, a, f, 8);
    CHECK(v.coeff(0).is_one());
    auto residual = v + a[0] * v.frobenius_pow(1) - f;
    CHECK((residual.is_zero() || residual.valuation() >= 8));
  }
}

TEST_CASE("hensel residual valuation meets the requested precision") {
  auto* F2 = FieldSpec::get(2, 1);
  for (int i = 0; i < 60; ++i) {
    FieldTower tw(F2);
    std::vector<LaurentSeries> a{random_laurent_poly(F2, 0, 3),
                                 random_laurent_poly(F2, 1, 4)};
    if (a.back().is_zero()) a.back() = LaurentSeries::variable(F2);
    LaurentSeries f = random_laurent_poly(F2, 0, 6);
    long N = rand_int(5, 24);
    auto v = hensel_solve(tw, a, f, N);
    LaurentSeries fl = lift_series(tw, f);
    LaurentSeries residual = v + lift_series(tw, a[0]) * v.frobenius_pow(1) +
                             lift_series(tw, a[1]) * v.frobenius_pow(2) - fl;
    CHECK((residual.is_zero() || residual.valuation() >= N));
  }
}

TEST_CASE("hensel precision errors") {
  auto* F3 = FieldSpec::get(3, 1);
  FieldTower tw(F3);
  std::vector<LaurentSeries> a{LaurentSeries::variable(F3)};
  auto f = LaurentSeries::one(F3).truncated(5);
  CHECK_THROWS_AS(hensel_solve(tw, a, f, 10), PrecisionError);
  auto bad = LaurentSeries::monomial(FieldElement::one(F3), -1);
  CHECK_THROWS_AS(hensel_solve(tw, a, bad, 10), DomainError);
}

TEST_CASE("hensel extends the residue field when the residue equation needs it") {
  // v + v^2 = c over F_2 has no root for c = 1; the tower must step to F_4
  auto* F2 = FieldSpec::get(2, 1);
  FieldTower tw(F2);
  std::vector<LaurentSeries> a{LaurentSeries::one(F2)};
  auto f = LaurentSeries::one(F2);
  auto v = hensel_solve(tw, a, f, 8);
  CHECK(tw.top()->size() == 4);
  LaurentSeries residual = v + lift_series(tw, a[0]) * v.frobenius_pow(1) - lift_series(tw, f);
  CHECK((residual.is_zero() || residual.valuation() >= 8));
}
