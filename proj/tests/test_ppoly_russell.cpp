#include <doctest.h>

#include "test_util.hpp"
#include "woundlab/russell.hpp"

using namespace woundlab;
using namespace woundlab::testutil;

namespace {

RussellEquation<RatFunc> make_r(int p, int n, std::vector<RatFunc> a) {
  RussellEquation<RatFunc> r;
  r.p = p;
  r.n = n;
  r.a = std::move(a);
  return r;
}

}  // namespace

TEST_CASE("principal part and separability") {
  auto* F2 = FieldSpec::get(2, 1);
  RatFunc t = RatFunc::variable(F2);

  // u^2 + v + t v^2
  auto phi = make_r(2, 1, {t}).to_ppolynomial();
  auto pp = phi.principal_part();
  CHECK(pp.coeffs[0].back().is_one());
  CHECK(pp.coeffs[1].back() == t);
  CHECK(pp.coeffs[1][0].is_zero());
  CHECK(phi.is_separable());
  CHECK(!pp.is_separable());

  // u^4 + v + a v^2 + b^2 v^4: top v-coefficient survives
  auto phi2 = make_r(2, 2, {t, t.pow(2)}).to_ppolynomial();
  auto pp2 = phi2.principal_part();
  CHECK(pp2.coeffs[1].back() == t.pow(2));
  CHECK(pp2.coeffs[1][1].is_zero());

  // single-variable polynomial keeps only its top monomial
  PPolynomial<RatFunc> single{2, {{t, RatFunc::zero(F2), t.pow(3)}}};
  auto sp = single.principal_part();
  CHECK(sp.coeffs[0][0].is_zero());
  CHECK(sp.coeffs[0][2] == t.pow(3));

  // every Russell equation is separable (the v-coefficient is 1)
  CHECK(make_r(2, 2, {t}).to_ppolynomial().is_separable());
}

TEST_CASE("additivity of evaluation") {
  auto* F4 = FieldSpec::get(2, 2);
  RatFunc t = RatFunc::variable(F4);
  auto phi = make_r(2, 1, {t, t.pow(3)}).to_ppolynomial();
  for (int i = 0; i < 200; ++i) {
    std::vector<RatFunc> x{random_ratfunc(F4, 2), random_ratfunc(F4, 2)};
    std::vector<RatFunc> y{random_ratfunc(F4, 2), random_ratfunc(F4, 2)};
    std::vector<RatFunc> xy{x[0] + y[0], x[1] + y[1]};
    CHECK(phi.evaluate(xy) == phi.evaluate(x) + phi.evaluate(y));
  }
}

TEST_CASE("woundness criterion") {
  auto* F2 = FieldSpec::get(2, 1);
  RatFunc t = RatFunc::variable(F2);

  SUBCASE("u^2 + t v^2 is wound: t is not a square") {
    PPolynomial<RatFunc> pp{2, {{RatFunc::zero(F2), RatFunc::one(F2)}, {RatFunc::zero(F2), t}}};
    CHECK(is_wound(pp).verdict == Woundness::Wound);
  }
  SUBCASE("u^2 + t^2 v^2 has the zero (t, 1)") {
    PPolynomial<RatFunc> pp{2, {{RatFunc::zero(F2), RatFunc::one(F2)}, {RatFunc::zero(F2), t.pow(2)}}};
    auto w = is_wound(pp);
    REQUIRE(w.verdict == Woundness::NotWound);
    REQUIRE(w.witness.size() == 2);
    CHECK(w.witness[0] == t);
    CHECK(w.witness[1].is_one());
    CHECK(pp.evaluate(w.witness).is_zero());
  }
  SUBCASE("image of a wound group under an additive change of coordinates") {
    // Pushing y^2 + x + t x^2 = 0 through (x, y) -> (x, y + y^2) yields
    // y^2 + x + (1+t) x^2 + t^2 x^4 = 0: same group, but the principal part
    // y^2 + t^2 x^4 now has the rational zero (1, t).
    PPolynomial<RatFunc> image{2,
                               {{RatFunc::one(F2), RatFunc::one(F2) + t, t.pow(2)},
                                {RatFunc::zero(F2), RatFunc::one(F2)}}};
    CHECK(is_wound(image).verdict == Woundness::Unknown);
  }
  SUBCASE("three active variables go through the bounded search") {
    auto* F3 = FieldSpec::get(3, 1);
    RatFunc z2 = RatFunc::zero(F2), one2 = RatFunc::one(F2);
    // x^2 + t y^2 + t^2 z^2 vanishes at (t, 0, 1)
    PPolynomial<RatFunc> has_zero{2, {{z2, one2}, {z2, t}, {z2, t.pow(2)}}};
    auto w = is_wound(has_zero);
    REQUIRE(w.verdict == Woundness::NotWound);
    CHECK(has_zero.evaluate(w.witness).is_zero());
    // x^3 + t y^3 + t^2 z^3 is wound (valuations distinct mod 3), but the
    // search cannot prove that: it must answer Unknown, never NotWound
    RatFunc z3 = RatFunc::zero(F3), one3 = RatFunc::one(F3), t3 = RatFunc::variable(F3);
    PPolynomial<RatFunc> wound3{3, {{z3, one3}, {z3, t3}, {z3, t3.pow(2)}}};
    CHECK(is_wound(wound3, 2).verdict == Woundness::Unknown);
  }
  SUBCASE("never wound when the splitting degree is 1") {
    for (int i = 0; i < 50; ++i) {
      // a = g^(p^n) splits, so the criterion must not report Wound
      RatFunc g = random_ratfunc(F2, 2);
      if (g.is_zero()) continue;
      auto r = make_r(2, 1, {g.pow(2)});
      CHECK(splitting_degree(r) == 1);
      CHECK(is_wound(r.to_ppolynomial().principal_part()).verdict != Woundness::Wound);
    }
  }
}

TEST_CASE("genus formula") {
  CHECK(genus(3, 1, 1) == 1);
  CHECK(genus(2, 2, 2) == 3);
  CHECK(genus(2, 1, 1) == 0);
  CHECK(genus(5, 1, 1) == 6);
  for (int p : {2, 3, 5})
    for (int n = 1; n <= 3; ++n)
      for (int m = 1; m <= 3; ++m) CHECK(genus(p, n, m) == genus(p, m, n));
}

TEST_CASE("splitting degrees") {
  auto* F3 = FieldSpec::get(3, 1);
  auto* F2 = FieldSpec::get(2, 1);
  RatFunc t3 = RatFunc::variable(F3);
  RatFunc t2 = RatFunc::variable(F2);
  CHECK(splitting_degree(make_r(3, 1, {t3})) == 3);
  CHECK(splitting_degree(make_r(2, 1, {t2.pow(2)})) == 1);
  CHECK(splitting_degree(make_r(2, 2, {t2})) == 4);
}

TEST_CASE("classification") {
  auto* F3 = FieldSpec::get(3, 1);
  auto* F2 = FieldSpec::get(2, 1);
  RatFunc t3 = RatFunc::variable(F3);
  RatFunc t2 = RatFunc::variable(F2);

  CHECK(classify(make_r(3, 1, {t3})).to_string() == "quasi_elliptic_case2");
  CHECK(classify(make_r(2, 1, {t2})).to_string() == "quasi_rational");
  CHECK(classify(make_r(2, 2, {t2})).to_string() == "quasi_elliptic_case1b");
  CHECK(classify(make_r(2, 1, {t2, t2.pow(3)})).to_string() == "quasi_elliptic_case1a");
  CHECK(classify(make_r(2, 1, {t2.pow(2)})).to_string() == "splits_to_Ga");
  // non-square top coefficient far from the normal forms: higher genus
  CHECK(classify(make_r(2, 1, {RatFunc::zero(F2), RatFunc::zero(F2), t2})).to_string() ==
        "higher_genus_3");
  CHECK(classify(make_r(3, 1, {RatFunc::zero(F3), t3})).to_string() == "higher_genus_7");
  // malformed equation
  auto bad = make_r(2, 1, {RatFunc::zero(F2)});
  CHECK_THROWS_AS(classify(bad), DomainError);

  SUBCASE("bivariate case 1(c) and its degenerations") {
    BivarRatFunc s = BivarRatFunc::var_s(F2);
    BivarRatFunc t = BivarRatFunc::var_t(F2);
    RussellEquation<BivarRatFunc> rc{2, 2, {s, t.pow(2)}};
    CHECK(classify(rc).to_string() == "quasi_elliptic_case1c");
    // b = s alpha^2 + beta^2 drops the degree to 2: reduces to case 1(b)
    BivarRatFunc b = s * t.pow(2) + BivarRatFunc::one(F2);
    RussellEquation<BivarRatFunc> rb{2, 2, {s, b.pow(2)}};
    CHECK(classify(rb).to_string() == "quasi_elliptic_case1b");
    // square a: genus zero
    RussellEquation<BivarRatFunc> rq{2, 2, {s.pow(2), t.pow(2)}};
    CHECK(classify(rq).to_string() == "quasi_rational");
  }
}

TEST_CASE("classification is stable under the a_m rewrite") {
  auto* F3 = FieldSpec::get(3, 1);
  auto* F2 = FieldSpec::get(2, 1);
  auto base3 = make_r(3, 1, {RatFunc::variable(F3)});
  auto base2 = make_r(2, 1, {RatFunc::variable(F2)});
  auto tag3 = classify(base3).to_string();
  auto tag2 = classify(base2).to_string();
  for (int i = 0; i < 50; ++i) {
    RatFunc g3 = random_ratfunc(F3, 2);
    auto r3 = base3;
    r3.a.back() = r3.a.back() + g3.pow(3);
    if (!r3.a.back().is_zero()) CHECK(classify(r3).to_string() == tag3);

    RatFunc g2 = random_ratfunc(F2, 2);
    auto r2 = base2;
    r2.a.back() = r2.a.back() + g2.pow(2);
    if (!r2.a.back().is_zero()) CHECK(classify(r2).to_string() == tag2);
  }
}

TEST_CASE("case 1(c) reduction to the cubic") {
  auto* F2 = FieldSpec::get(2, 1);
  BivarRatFunc s = BivarRatFunc::var_s(F2);
  BivarRatFunc t = BivarRatFunc::var_t(F2);

  SUBCASE("generic (a, c) = (s, t) stays in case 1(c)") {
    auto red = reduce_case_1c(s, t);
    CHECK(red.cubic_a == s);
    CHECK(red.cubic_c == t);
    CHECK(!red.genus_zero);
    CHECK(!red.to_1b_witness.has_value());
  }
  SUBCASE("square a flags genus zero") {
    auto red = reduce_case_1c(t.pow(2), s);
    CHECK(red.genus_zero);
  }
  SUBCASE("c = a alpha^2 + beta^2 flags the 1(b) reduction") {
    for (int i = 0; i < 20; ++i) {
      BivarRatFunc alpha = BivarRatFunc::from_poly(random_bivar_poly(F2, 2));
      BivarRatFunc beta = BivarRatFunc::from_poly(random_bivar_poly(F2, 2));
      BivarRatFunc c = s * alpha.pow(2) + beta.pow(2);
      if (c.is_zero()) continue;
      auto red = reduce_case_1c(s, c);
      REQUIRE(red.to_1b_witness.has_value());
      auto [al, be] = *red.to_1b_witness;
      CHECK(c == s * al.pow(2) + be.pow(2));
      CHECK(*red.case_1b_coeff == s);
    }
  }
}

TEST_CASE("compactification") {
  auto* F3 = FieldSpec::get(3, 1);
  auto* F2 = FieldSpec::get(2, 1);

  SUBCASE("p=3 cubic") {
    auto rep = compactify(make_r(3, 1, {RatFunc::variable(F3)}));
    CHECK(rep.degree == 3);
    CHECK(rep.w == 1);
    CHECK(rep.monomials.size() == 3);
    CHECK(rep.regular);
    CHECK(rep.arithmetic_genus == 1);
    CHECK(rep.boundary_degree == 3);
    CHECK(rep.canonical_twist == 0);
  }
  SUBCASE("p=2 conic") {
    auto rep = compactify(make_r(2, 1, {RatFunc::variable(F2)}));
    CHECK(rep.degree == 2);
    CHECK(rep.arithmetic_genus == 0);
    CHECK(rep.regular);
  }
  SUBCASE("heights (1,2) use weights (1,1,2)") {
    auto rep = compactify(make_r(2, 1, {RatFunc::variable(F2), RatFunc::variable(F2).pow(3)}));
    CHECK(rep.degree == 4);
    CHECK(rep.w0 == 1);
    CHECK(rep.w1 == 1);
    CHECK(rep.w2 == 2);
    for (auto& mono : rep.monomials) CHECK(rep.weighted_degree(mono) == 4);
  }
  SUBCASE("random equations: uniform degree, lossless, regular flag") {
    for (int i = 0; i < 20; ++i) {
      auto* s = (i % 2 == 0) ? F2 : F3;
      int n = static_cast<int>(rand_int(1, 2));
      int m = static_cast<int>(rand_int(1, 2));
      std::vector<RatFunc> a;
      for (int j = 0; j < m; ++j) a.push_back(random_ratfunc(s, 2));
      if (a.back().is_zero()) a.back() = RatFunc::variable(s);
      RussellEquation<RatFunc> r{s->p, n, a};
      auto rep = compactify(r);
      for (auto& mono : rep.monomials) CHECK(rep.weighted_degree(mono) == rep.degree);
      auto back = dehomogenize(rep);
      CHECK(back.n == r.n);
      REQUIRE(back.a.size() == r.a.size());
      for (size_t j = 0; j < r.a.size(); ++j) CHECK(back.a[j] == r.a[j]);
      CHECK(rep.regular == !is_pth_power(r.a.back()).has_value());
    }
  }
}
