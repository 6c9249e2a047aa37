#include <doctest.h>

#include <fstream>
#include <sstream>

#include "test_util.hpp"
#include "woundlab/cli.hpp"
#include "woundlab/corpus.hpp"
#include "woundlab/expr.hpp"
#include "woundlab/report.hpp"

using namespace woundlab;
using namespace woundlab::testutil;

TEST_CASE("expression parsing examples") {
  auto* F2 = FieldSpec::get(2, 1);
  auto* F3 = FieldSpec::get(3, 1);

  SUBCASE("Laurent support") {
    auto f = parse_laurent("t^-2 + 2*t^-1", F3);
    CHECK(f.coeff(-2).is_one());
    CHECK(f.coeff(-1) == FieldElement::from_int(F3, 2));
    CHECK(f.coeff(0).is_zero());
  }
  SUBCASE("binary form") {
    auto a = parse_binary_form("t0^2*t1^2*(t0^8+t1^8)", F3);
    CHECK(a.degree == 12);
    CHECK(a.coeff(2).is_one());
    CHECK(a.coeff(10).is_one());
    CHECK(a.coeff(6).is_zero());
  }
  SUBCASE("Russell equation") {
    auto r = eval_russell(*parse_expression("u^3+v+t*v^3"), F3);
    CHECK(r.p == 3);
    CHECK(r.n == 1);
    REQUIRE(r.a.size() == 1);
    CHECK(r.a[0] == RatFunc::variable(F3));
  }
  SUBCASE("field specs") {
    CHECK(parse_field_spec("F9")->size() == 9);
    const FieldSpec* F4 = parse_field_spec("F4:w^2+w+1");
    CHECK(F4->size() == 4);
    CHECK(F4->modulus == std::vector<uint8_t>{1, 1, 1});
    CHECK_THROWS_AS(parse_field_spec("F6"), DomainError);
  }
  SUBCASE("errors carry positions") {
    CHECK_THROWS_AS(parse_expression("t^"), ParseError);
    CHECK_THROWS_AS(parse_expression("x+1"), ParseError);
    CHECK_THROWS_AS(parse_expression("(t"), ParseError);
    CHECK_THROWS_WITH_AS(parse_laurent("t/(1+t)", F2), doctest::Contains("monomial"),
                         DomainError);
  }
}

TEST_CASE("formatter-parser round trips") {
  auto* F4 = FieldSpec::get(2, 2);
  auto* F3 = FieldSpec::get(3, 1);

  for (int i = 0; i < 500; ++i) {
    FieldElement x = random_element(F4);
    CHECK(parse_field_element(x.to_string(), F4) == x);

    RatFunc f = random_ratfunc(F3, 4);
    CHECK(parse_ratfunc(f.to_string(), F3) == f);

    LaurentSeries l = random_laurent_poly(F4, -5, 5);
    CHECK(parse_laurent(l.to_string(), F4) == l);

    if (i < 100) {  // bivariate arithmetic is the slow one
      BivarRatFunc b(random_bivar_poly(F3, 3), random_bivar_poly(F3, 2));
      CHECK(parse_bivar(b.to_string(), F3) == b);
    }
  }
}

TEST_CASE("JSON output is deterministic with sorted keys") {
  auto* F3 = FieldSpec::get(3, 1);
  auto r = eval_russell(*parse_expression("u^3+v+t*v^3"), F3);
  auto j1 = compactification_json(r, compactify(r)).dump();
  auto j2 = compactification_json(r, compactify(r)).dump();
  CHECK(j1 == j2);
  CHECK(j1.find("\"n\"") < j1.find("\"p\""));  // lexicographic key order
  CHECK(j1.find("\"boundary_degree\"") < j1.find("\"classification\""));
}

TEST_CASE("compact Russell form") {
  auto* F3 = FieldSpec::get(3, 1);
  auto r = parse_russell_compact("p=3 n=1 a=[t]", F3);
  CHECK(r.n == 1);
  REQUIRE(r.a.size() == 1);
  CHECK(r.a[0] == RatFunc::variable(F3));
  CHECK(classify(r).to_string() == "quasi_elliptic_case2");
  auto r2 = parse_russell_compact("p=3 n=2 a=[t, t^2+1]", F3);
  CHECK(r2.n == 2);
  CHECK(r2.a.size() == 2);
  CHECK_THROWS_AS(parse_russell_compact("p=2 n=1 a=[t]", F3), DomainError);
  CHECK_THROWS_AS(parse_russell_compact("p=3 n=1", F3), DomainError);
}

TEST_CASE("WOUNDLAB_PREC environment override") {
  setenv("WOUNDLAB_PREC", "20", 1);
  std::ostringstream out, err;
  int code = run_cli({"--field", "F3", "--json", "--trace", "torsor", "reduce", "--n", "1",
                      "--m", "1", "--k", "1", "--f", "t^-2+t"},
                     out, err);
  unsetenv("WOUNDLAB_PREC");
  CHECK(code == 0);
  CHECK(out.str().find("precision 20") != std::string::npos);
}

TEST_CASE("corpus machinery") {
  SUBCASE("default corpus passes completely") {
    auto entries = parse_corpus(default_corpus());
    CHECK(entries.size() >= 20);
    auto report = run_corpus(entries);
    for (auto& r : report.entries) {
      CAPTURE(r.name);
      CAPTURE(r.detail);
      CHECK(r.pass);
    }
    CHECK(report.failed == 0);
  }
  SUBCASE("a perturbed expectation fails exactly once") {
    std::string text = default_corpus();
    auto pos = text.find("expect_genus: 1");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 15, "expect_genus: 2");
    auto report = run_corpus(parse_corpus(text));
    CHECK(report.failed == 1);
  }
  SUBCASE("empty corpus runs clean") {
    auto report = run_corpus(parse_corpus("\n\n"));
    CHECK(report.entries.empty());
    CHECK(report.failed == 0);
  }
  SUBCASE("malformed corpus is rejected") {
    CHECK_THROWS_AS(parse_corpus("name broken-entry\n"), DomainError);
    CHECK_THROWS_AS(parse_corpus("name: x\n\n"), DomainError);  // missing command
  }
}

TEST_CASE("cli surface") {
  auto run = [](std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(std::move(args), out, err);
    return std::make_tuple(code, out.str(), err.str());
  };

  SUBCASE("classify") {
    auto [code, out, err] = run({"--field", "F3", "classify", "u^3+v+t*v^3"});
    CHECK(code == 0);
    CHECK(out.find("quasi_elliptic_case2") != std::string::npos);
  }
  SUBCASE("genus json") {
    auto [code, out, err] = run({"--json", "genus", "--p", "2", "--n", "2", "--m", "2"});
    CHECK(code == 0);
    CHECK(out.find("\"genus\": 3") != std::string::npos);
  }
  SUBCASE("torsor reduce with trace") {
    auto [code, out, err] = run({"--field", "F3", "--json", "--trace", "torsor", "reduce",
                                 "--n", "1", "--m", "1", "--k", "1", "--f", "t^-2"});
    CHECK(code == 0);
    CHECK(out.find("2*t^-1") != std::string::npos);
    CHECK(out.find("\"trace\"") != std::string::npos);
  }
  SUBCASE("hasse-witt") {
    auto [code, out, err] = run({"--field", "F3", "hasse-witt", "--p", "3", "--n", "1", "--m",
                                 "1", "--k", "2", "--a", "t0^2*t1^2*(t0^8+t1^8)"});
    CHECK(code == 0);
    CHECK(out.find("r=4") != std::string::npos);
  }
  SUBCASE("verify-paper") {
    auto [code, out, err] = run({"verify-paper"});
    CHECK(code == 0);
    CHECK(out.find("[PASS]") != std::string::npos);
    CHECK(out.find("[FAIL]") == std::string::npos);
  }
  SUBCASE("usage errors exit 2") {
    auto [code, out, err] = run({"torsor"});
    CHECK(code == 2);
    auto [code2, out2, err2] = run({"no-such-command"});
    CHECK(code2 == 2);
  }
  SUBCASE("computation errors exit 1") {
    auto [code, out, err] = run({"--field", "F2", "classify", "u^2+v"});
    CHECK(code == 1);
    CHECK(!err.empty());
  }
  SUBCASE("verification failure exits 3") {
    std::string path = "/tmp/woundlab_bad_corpus.txt";
    {
      std::ofstream f(path);
      f << "name: broken\ncommand: genus\np: 3\nn: 1\nm: 1\nexpect_genus: 99\n";
    }
    auto [code, out, err] = run({"verify-paper", "--corpus", path});
    CHECK(code == 3);
    CHECK(out.find("[FAIL]") != std::string::npos);
  }
}
