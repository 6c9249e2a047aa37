#include <doctest.h>

#include "test_util.hpp"
#include "woundlab/grouplaw.hpp"

using namespace woundlab;
using namespace woundlab::testutil;

TEST_CASE("parameterization lands on the curve") {
  auto* F2 = FieldSpec::get(2, 1);
  QRGroup g(RatFunc::variable(F2));
  RatFunc t = RatFunc::variable(F2);
  RatFunc one = RatFunc::one(F2);

  SUBCASE("identity") {
    auto [u, v] = g.embed(RatFunc::zero(F2));
    CHECK(u.is_zero());
    CHECK(v.is_zero());
  }
  SUBCASE("s = 1") {
    auto [u, v] = g.embed(one);
    CHECK(u == one / (one + t));
    CHECK(v == one / (one + t));
    CHECK(g.curve_equation(u, v).is_zero());
  }
  SUBCASE("s = t") {
    auto [u, v] = g.embed(t);
    CHECK(u == t / (one + t.pow(3)));
    CHECK(v == t.pow(2) / (one + t.pow(3)));
    CHECK(g.curve_equation(u, v).is_zero());
  }
  SUBCASE("random parameters satisfy the equation") {
    for (int i = 0; i < 100; ++i) {
      auto [u, v] = g.embed(random_ratfunc(F2, 4));
      CHECK(g.curve_equation(u, v).is_zero());
    }
  }
}

TEST_CASE("group law basics") {
  auto* F2 = FieldSpec::get(2, 1);
  QRGroup g(RatFunc::variable(F2));
  RatFunc t = RatFunc::variable(F2);
  RatFunc one = RatFunc::one(F2);

  CHECK(g.add(RatFunc::zero(F2), t) == t);          // identity
  CHECK(g.add(t, t).is_zero());                     // self-inverse (2-torsion)
  CHECK(g.add(one, t) == one / (one + t));          // (1+t)/(1+t^2)
}

TEST_CASE("non-square parameter is required") {
  auto* F2 = FieldSpec::get(2, 1);
  RatFunc t = RatFunc::variable(F2);
  CHECK_THROWS_AS(QRGroup(t.pow(2)), DomainError);
  CHECK_THROWS_AS(QRGroup(RatFunc::one(F2)), DomainError);
}
