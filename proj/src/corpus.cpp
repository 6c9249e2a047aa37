#include "woundlab/corpus.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "woundlab/expr.hpp"
#include "woundlab/grouplaw.hpp"
#include "woundlab/report.hpp"

namespace woundlab {

std::vector<CorpusEntry> parse_corpus(const std::string& text) {
  std::vector<CorpusEntry> out;
  CorpusEntry cur;
  bool any = false;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto flush = [&]() {
    if (!any) return;
    if (cur.name.empty()) throw DomainError("corpus block without a name");
    if (cur.command.empty()) throw DomainError("corpus entry '" + cur.name + "' lacks a command");
    out.push_back(cur);
    cur = CorpusEntry{};
    any = false;
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string stripped = line;
    stripped.erase(0, stripped.find_first_not_of(" \t"));
    if (stripped.empty()) {
      flush();
      continue;
    }
    if (stripped[0] == '#') continue;
    const size_t colon = stripped.find(':');
    if (colon == std::string::npos)
      throw DomainError("corpus line " + std::to_string(lineno) + " is not 'key: value'");
    std::string key = stripped.substr(0, colon);
    std::string value = stripped.substr(colon + 1);
    key.erase(key.find_last_not_of(" \t") + 1);
    value.erase(0, value.find_first_not_of(" \t"));
    value.erase(value.find_last_not_of(" \t") + 1);
    any = true;
    if (key == "name")
      cur.name = value;
    else if (key == "command")
      cur.command = value;
    else if (key == "provenance")
      cur.provenance = value;
    else if (key.rfind("expect_", 0) == 0)
      cur.expect[key.substr(7)] = value;
    else
      cur.input[key] = value;
  }
  flush();
  return out;
}

namespace {

std::string need(const CorpusEntry& e, const std::string& key) {
  auto it = e.input.find(key);
  if (it == e.input.end())
    throw DomainError("entry '" + e.name + "' is missing the key '" + key + "'");
  return it->second;
}

std::string opt(const CorpusEntry& e, const std::string& key, const std::string& dflt) {
  auto it = e.input.find(key);
  return it == e.input.end() ? dflt : it->second;
}

bool uses_s(const std::string& expr) {
  for (size_t i = 0; i < expr.size(); ++i)
    if (expr[i] == 's' && (i == 0 || !std::isalnum(static_cast<unsigned char>(expr[i - 1]))))
      return true;
  return false;
}

}  // namespace

std::map<std::string, std::string> run_corpus_entry(const CorpusEntry& e) {
  std::map<std::string, std::string> out;
  const std::string& cmd = e.command;
  if (cmd == "genus") {
    out["genus"] = std::to_string(
        genus(std::stoi(need(e, "p")), std::stoi(need(e, "n")), std::stoi(need(e, "m"))));
    return out;
  }
  if (cmd == "classify" || cmd == "compactify") {
    const FieldSpec* s = parse_field_spec(need(e, "field"));
    const std::string eq = need(e, "equation");
    auto run = [&](auto russell) {
      out["classification"] = classify(russell).to_string();
      out["splitting_degree"] = std::to_string(splitting_degree(russell));
      if (cmd == "compactify") {
        auto rep = compactify(russell);
        out["genus"] = std::to_string(rep.arithmetic_genus);
        out["degree"] = std::to_string(rep.degree);
        out["regular"] = rep.regular ? "true" : "false";
        out["weights"] = std::to_string(rep.w0) + "," + std::to_string(rep.w1) + "," +
                         std::to_string(rep.w2);
        out["boundary_degree"] = std::to_string(rep.boundary_degree);
        out["monomial_count"] = std::to_string(rep.monomials.size());
      }
    };
    if (uses_s(eq))
      run(eval_russell_bivar(*parse_expression(eq), s));
    else
      run(eval_russell(*parse_expression(eq), s));
    return out;
  }
  if (cmd == "wound") {
    const FieldSpec* s = parse_field_spec(need(e, "field"));
    auto r = eval_russell(*parse_expression(need(e, "equation")), s);
    auto w = is_wound(r.to_ppolynomial());
    out["wound"] = w.verdict == Woundness::Wound
                       ? "wound"
                       : (w.verdict == Woundness::NotWound ? "not_wound" : "unknown");
    return out;
  }
  if (cmd == "torsor-reduce" || cmd == "torsor-trivial") {
    const FieldSpec* s = parse_field_spec(need(e, "field"));
    const int n = std::stoi(need(e, "n"));
    const int m = std::stoi(need(e, "m"));
    const int k = std::stoi(need(e, "k"));
    const long prec = std::stol(opt(e, "prec", "64"));
    auto lr = LocalRussell::monomial_shape(s, n, m, k);
    TorsorClass t{lr, parse_laurent(need(e, "f"), s)};
    NormalForm nf = reduce(t, prec);
    out["normal_form"] = nf.reduced.to_string();
    out["trivial"] = nf.trivial ? "true" : "false";
    if (nf.lang_k) out["lang_k"] = std::to_string(*nf.lang_k);
    if (nf.lang_degree) out["lang_n"] = std::to_string(*nf.lang_degree);
    out["field"] = nf.tower.top()->name;
    return out;
  }
  if (cmd == "hasse-witt") {
    const FieldSpec* s = parse_field_spec(need(e, "field"));
    auto rep = cohomology_report(std::stoi(need(e, "p")), std::stoi(need(e, "n")),
                                 std::stoi(need(e, "m")), std::stoi(need(e, "k")),
                                 parse_binary_form(need(e, "a"), s));
    out["d"] = std::to_string(rep.d);
    out["r"] = std::to_string(rep.r);
    out["h1G"] = "(Z/" + std::to_string(rep.torsion) + ")^" + std::to_string(rep.r);
    out["h2"] = "0";
    out["h1L_dim"] = std::to_string(rep.h1L_dim);
    return out;
  }
  if (cmd == "group-law") {
    const FieldSpec* s = parse_field_spec(need(e, "field"));
    QRGroup g(parse_ratfunc(need(e, "a"), s));
    RatFunc s1 = parse_ratfunc(need(e, "s1"), s);
    RatFunc s2 = parse_ratfunc(need(e, "s2"), s);
    RatFunc sum = g.add(s1, s2);
    out["sum"] = sum.to_string();
    auto [u, v] = g.embed(sum);
    out["u"] = u.to_string();
    out["v"] = v.to_string();
    out["on_curve"] = g.curve_equation(u, v).is_zero() ? "true" : "false";
    return out;
  }
  throw DomainError("unknown corpus command '" + cmd + "'");
}

RunReport run_corpus(const std::vector<CorpusEntry>& entries) {
  RunReport report;
  for (auto& e : entries) {
    EntryResult res;
    res.name = e.name;
    auto start = std::chrono::steady_clock::now();
    try {
      auto computed = run_corpus_entry(e);
      res.pass = true;
      for (auto& [key, want] : e.expect) {
        auto it = computed.find(key);
        const std::string got = it == computed.end() ? "<absent>" : it->second;
        if (got != want) {
          res.pass = false;
          if (!res.detail.empty()) res.detail += "; ";
          res.detail += key + ": expected '" + want + "', got '" + got + "'";
        }
      }
      if (res.pass && !e.expect.empty()) {
        res.detail = "";
        for (auto& [key, want] : e.expect) {
          if (!res.detail.empty()) res.detail += ", ";
          res.detail += key + "=" + want;
        }
      }
    } catch (const std::exception& ex) {
      res.pass = false;
      res.detail = std::string("exception: ") + ex.what();
    }
    res.elapsed_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    report.entries.push_back(std::move(res));
  }
  std::sort(report.entries.begin(), report.entries.end(),
            [](const EntryResult& a, const EntryResult& b) { return a.name < b.name; });
  for (auto& r : report.entries) (r.pass ? report.passed : report.failed)++;
  return report;
}

const std::string& default_corpus() {
  static const std::string corpus = R"corpus(
# Genus of the weighted homogeneous compactification.
name: genus-p3-quasielliptic
command: genus
p: 3
n: 1
m: 1
expect_genus: 1
provenance: Queen classification, p=3 case

name: genus-p2-case1c-shape
command: genus
p: 2
n: 2
m: 2
expect_genus: 3
provenance: Queen classification proof, non-regular case 1(c)

name: genus-p2-quasirational
command: genus
p: 2
n: 1
m: 1
expect_genus: 0
provenance: Rosenlicht quasi-rational groups

name: genus-p2-heights-1-2
command: genus
p: 2
n: 1
m: 2
expect_genus: 1
provenance: genus formula for heights (1,2)

name: genus-p2-heights-2-1
command: genus
p: 2
n: 2
m: 1
expect_genus: 1
provenance: genus formula for heights (2,1)

# Queen classification of quasi-elliptic Russell equations.
name: queen-p3-case2
command: classify
field: F3
equation: u^3+v+t*v^3
expect_classification: quasi_elliptic_case2
expect_splitting_degree: 3
provenance: Queen classification, case 2

name: queen-p2-case1b
command: classify
field: F2
equation: u^4+v+t*v^2
expect_classification: quasi_elliptic_case1b
expect_splitting_degree: 4
provenance: Queen classification, case 1(b)

name: queen-p2-case1c
command: classify
field: F2
equation: u^4+v+s*v^2+t^2*v^4
expect_classification: quasi_elliptic_case1c
provenance: Queen classification, case 1(c) over a field of imperfection degree 2

name: rosenlicht-quasirational-conic
command: classify
field: F2
equation: u^2+v+t*v^2
expect_classification: quasi_rational
provenance: Rosenlicht normal form; the strange-conic pencil model

name: splits-after-square
command: classify
field: F2
equation: u^2+v+t^2*v^2
expect_classification: splits_to_Ga
expect_splitting_degree: 1
provenance: splitting extension of a Russell equation

# Woundness via the principal part.
name: wound-odd-valuation
command: wound
field: F2
equation: u^2+v+t*v^2
expect_wound: wound
provenance: principal part u^2 + t v^2 has no rational zero

# Weighted homogeneous compactifications.
name: compactify-p3-cubic
command: compactify
field: F3
equation: u^3+v+t*v^3
expect_degree: 3
expect_weights: 1,1,1
expect_regular: true
expect_genus: 1
expect_monomial_count: 3
expect_boundary_degree: 3
provenance: weighted plane model of the p=3 quasi-elliptic group

name: compactify-p2-conic
command: compactify
field: F2
equation: u^2+v+t*v^2
expect_degree: 2
expect_regular: true
expect_genus: 0
provenance: conic model of the quasi-rational group

# Local torsor reduction over k((t)).
name: torsor-p3-hensel-absorb
command: torsor-reduce
field: F3
n: 1
m: 1
k: 1
f: t^2
expect_trivial: true
expect_normal_form: 0
provenance: Lang normal forms, p=3; integral classes are trivial

name: torsor-p3-u-move
command: torsor-reduce
field: F3
n: 1
m: 1
k: 1
f: t^-3
expect_trivial: true
provenance: Lang normal forms, p=3; cube denominators cancel

name: torsor-p3-lang-representative
command: torsor-reduce
field: F3
n: 1
m: 1
k: 1
f: t^-2
expect_trivial: false
expect_normal_form: 2*t^-1
expect_lang_k: 1
expect_lang_n: 0
provenance: Lang normal forms, p=3, k=1

name: torsor-p3-nontrivial-class
command: torsor-reduce
field: F3
n: 1
m: 1
k: 1
f: t^-1
expect_trivial: false
expect_normal_form: t^-1
provenance: Lang normal forms, p=3, k=1

name: torsor-p2-quasirational-trivial
command: torsor-reduce
field: F2
n: 1
m: 1
k: 1
f: t^-1
expect_trivial: true
expect_field: F4
provenance: quasi-rational local torsors are trivial (Hensel + Artin-Schreier step)

name: torsor-p2-case7-representative
command: torsor-reduce
field: F2
n: 2
m: 1
k: 1
f: t^-2
expect_trivial: false
expect_normal_form: t^-2
expect_lang_k: 2
provenance: char-2 local torsor list, case u^4 + v + t v^2

# Hasse-Witt matrices of Neron models over the projective line.
name: hassewitt-fermat-quartic
command: hasse-witt
field: F3
p: 3
n: 1
m: 1
k: 2
a: t0^2*t1^2*(t0^8+t1^8)
expect_d: 5
expect_r: 4
expect_h1G: (Z/3)^4
expect_h2: 0
expect_h1L_dim: 1
provenance: quasi-elliptic fibration on the supersingular Fermat quartic, char 3

name: hassewitt-second-k3
command: hasse-witt
field: F3
p: 3
n: 1
m: 1
k: 2
a: t0^2*t1^10+t0^5*t1^7+t0^8*t1^4+t0^10*t1^2
expect_d: 5
expect_r: 4
provenance: second supersingular quasi-elliptic K3, char 3

# Group law on the quasi-rational group.
name: grouplaw-add-one-t
command: group-law
field: F2
a: t
s1: 1
s2: t
expect_sum: 1/(t+1)
expect_on_curve: true
provenance: rational parameterization of the quasi-rational group
)corpus";
  return corpus;
}

}  // namespace woundlab
