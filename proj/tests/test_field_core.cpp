#include <doctest.h>

#include "test_util.hpp"
#include "woundlab/tower.hpp"

using namespace woundlab;
using namespace woundlab::testutil;

TEST_CASE("pth_root on small fields") {
  auto* F3 = FieldSpec::get(3, 1);
  CHECK(FieldElement::from_int(F3, 2).pth_root() == FieldElement::from_int(F3, 2));

  auto* F4 = FieldSpec::get(2, 2);
  FieldElement w = FieldElement::generator(F4);
  CHECK(w.pth_root() == w * w);  // (w^2)^2 = w^4 = w
  CHECK(FieldElement::one(F4).pth_root().is_one());
}

TEST_CASE("pth_root inverts Frobenius on every element") {
  for (auto* s : {FieldSpec::get(2, 3), FieldSpec::get(3, 2), FieldSpec::get(5, 1), FieldSpec::get(7, 1)}) {
    for (auto& x : all_elements(s)) {
      CHECK(x.pth_root().pow(s->p) == x);
      CHECK(x.pow(s->p).pth_root() == x);
    }
  }
}

TEST_CASE("freshman's dream across the arithmetic carriers") {
  auto* F9 = FieldSpec::get(3, 2);
  for (int i = 0; i < 50; ++i) {
    FieldElement x = random_element(F9), y = random_element(F9);
    CHECK((x + y).pow(3) == x.pow(3) + y.pow(3));

    DensePoly f = random_poly(F9, 4), g = random_poly(F9, 4);
    CHECK((f + g).pow(3) == f.pow(3) + g.pow(3));

    RatFunc a = random_ratfunc(F9, 3), b = random_ratfunc(F9, 3);
    CHECK((a + b).pow(3) == a.pow(3) + b.pow(3));

    LaurentSeries u = random_laurent_poly(F9, -3, 3), v = random_laurent_poly(F9, -3, 3);
    CHECK((u + v).frobenius_pow(1) == u.frobenius_pow(1) + v.frobenius_pow(1));
  }
}

TEST_CASE("polynomial factorization multiplies back") {
  auto* F4 = FieldSpec::get(2, 2);
  auto* F3 = FieldSpec::get(3, 1);
  for (auto* s : {F4, F3}) {
    for (int i = 0; i < 30; ++i) {
      DensePoly f = random_poly(s, 6);
      if (f.degree() < 1) continue;
      auto fac = factor(f);
      DensePoly prod = DensePoly::constant(fac.unit);
      for (auto& [g, m] : fac.factors) {
        CHECK(is_irreducible(g));
        prod = prod * g.pow(m);
      }
      CHECK(prod == f);
    }
  }
}

TEST_CASE("rational p-th power detection") {
  auto* F2 = FieldSpec::get(2, 1);
  // (t+1)^2 = t^2 + 1 in characteristic 2
  RatFunc sq = RatFunc::from_poly(DensePoly::variable(F2) * DensePoly::variable(F2) + DensePoly::one(F2));
  auto root = is_pth_power(sq);
  REQUIRE(root.has_value());
  CHECK(root->to_string() == "t+1");
  CHECK(!is_pth_power(RatFunc::variable(F2)).has_value());

  // recovery of g from g^p, all three characteristics in play
  for (auto* s : {FieldSpec::get(2, 1), FieldSpec::get(3, 1), FieldSpec::get(2, 2)}) {
    for (int i = 0; i < 500; ++i) {
      RatFunc g = random_ratfunc(s, 3);
      auto r = is_pth_power(g.pow(s->p));
      REQUIRE(r.has_value());
      CHECK(*r == g);
    }
  }
}

TEST_CASE("tower embeddings preserve the minimal polynomial") {
  auto* F4 = FieldSpec::get(2, 2);
  FieldTower tower(F4);
  // force one splitting step: x^3 + gen has no root in F4 when gen generates
  DensePoly f = DensePoly::monomial(FieldElement::one(F4), 3) +
                DensePoly::constant(FieldElement::generator(F4));
  FieldElement root = tower.find_root(f);
  CHECK(tower.height() == 2);
  // the embedded generator still satisfies the F4 modulus
  FieldElement img = tower.lift(FieldElement::generator(F4));
  const FieldSpec* top = tower.top();
  FieldElement acc = FieldElement::zero(top);
  for (int i = F4->e; i >= 0; --i)
    acc = acc * img + FieldElement::from_int(top, F4->modulus[static_cast<size_t>(i)]);
  CHECK(acc.is_zero());
  // the root solves the lifted equation
  CHECK(tower.lift(root) == root);
  FieldElement val = root.pow(3) + tower.lift(FieldElement::generator(F4));
  CHECK(val.is_zero());
  // projection returns base-field values and rejects outsiders
  auto back = tower.project(img, F4);
  REQUIRE(back.has_value());
  CHECK(*back == FieldElement::generator(F4));
}

TEST_CASE("field ceiling and bad moduli are rejected") {
  CHECK_THROWS_AS(FieldSpec::get(11, 1), DomainError);
  CHECK_THROWS_AS(FieldSpec::get(2, 21), DomainError);
  // x^2 + 1 is reducible over F2
  CHECK_THROWS_AS(FieldSpec::get(2, std::vector<uint8_t>{1, 0, 1}), DomainError);
}
