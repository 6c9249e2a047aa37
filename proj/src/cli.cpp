#include "woundlab/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iomanip>

#include "woundlab/corpus.hpp"
#include "woundlab/expr.hpp"
#include "woundlab/grouplaw.hpp"
#include "woundlab/report.hpp"

namespace woundlab {

namespace {

long default_precision() {
  if (const char* env = std::getenv("WOUNDLAB_PREC")) {
    long v = std::atol(env);
    if (v > 0) return v;
  }
  return 64;
}

bool uses_s(const std::string& expr) {
  for (size_t i = 0; i < expr.size(); ++i)
    if (expr[i] == 's' && (i == 0 || !std::isalnum(static_cast<unsigned char>(expr[i - 1]))))
      return true;
  return false;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"woundlab: inseparable forms of the additive group, their torsors and cohomology"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string field_str = "F2";
  long prec = default_precision();
  bool json = false;
  bool trace = false;
  app.add_option("--field", field_str, "base field, e.g. F2, F9, F4:w^2+w+1");
  app.add_option("--prec", prec, "working precision for series (default 64, env WOUNDLAB_PREC)");
  app.add_flag("--json", json, "emit JSON");
  app.add_flag("--trace", trace, "include the reduction trace in torsor output");

  // classify / compactify
  std::string eq_text;
  auto* classify_cmd = app.add_subcommand("classify", "classify a Russell equation");
  classify_cmd->add_option("equation", eq_text, "e.g. \"u^3+v+t*v^3\"")->required();
  auto* compactify_cmd = app.add_subcommand("compactify", "weighted homogeneous compactification");
  std::string ceq_text;
  compactify_cmd->add_option("equation", ceq_text)->required();

  // genus
  int gp = 0, gn = 0, gm = 0;
  auto* genus_cmd = app.add_subcommand("genus", "arithmetic genus from (p, n, m)");
  genus_cmd->add_option("--p", gp)->required();
  genus_cmd->add_option("--n", gn)->required();
  genus_cmd->add_option("--m", gm)->required();

  // group-law
  auto* gl_cmd = app.add_subcommand("group-law", "quasi-rational group arithmetic");
  std::string gl_a = "t", gl_s1, gl_s2;
  gl_cmd->add_option("--a", gl_a, "non-square parameter a");
  gl_cmd->add_option("--s1", gl_s1)->required();
  gl_cmd->add_option("--s2", gl_s2)->required();

  // torsor
  auto* torsor_cmd = app.add_subcommand("torsor", "local torsor classes over k((t))");
  torsor_cmd->require_subcommand(1);
  int tn = 1, tm = 1, tk = 1;
  std::string tf;
  long tbound = 12;
  auto add_torsor_opts = [&](CLI::App* c) {
    c->add_option("--n", tn)->required();
    c->add_option("--m", tm)->required();
    c->add_option("--k", tk)->required();
    c->add_option("--f", tf, "class representative, e.g. \"t^-2+1\"")->required();
  };
  auto* t_reduce = torsor_cmd->add_subcommand("reduce", "canonical representative");
  add_torsor_opts(t_reduce);
  auto* t_trivial = torsor_cmd->add_subcommand("trivial", "triviality verdict");
  add_torsor_opts(t_trivial);
  t_trivial->add_option("--bound", tbound, "search bound for unsupported shapes");

  // hasse-witt
  auto* hw_cmd = app.add_subcommand("hasse-witt", "stable rank and cohomology over P^1");
  int hp = 3, hn = 1, hm = 1, hk = 1;
  std::string ha;
  bool hkernel = false;
  hw_cmd->add_option("--p", hp)->required();
  hw_cmd->add_option("--n", hn)->required();
  hw_cmd->add_option("--m", hm)->required();
  hw_cmd->add_option("--k", hk)->required();
  hw_cmd->add_option("--a", ha, "binary form in t0, t1")->required();
  hw_cmd->add_flag("--kernel", hkernel, "also compute a fixed-point basis");

  // verify-paper
  auto* verify_cmd = app.add_subcommand("verify-paper", "run the bundled example corpus");
  std::string corpus_file;
  verify_cmd->add_option("--corpus", corpus_file, "corpus file (defaults to the bundled one)");

  std::vector<const char*> argv;
  std::string prog = "woundlab";
  argv.push_back(prog.c_str());
  for (auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    const FieldSpec* fs = parse_field_spec(field_str);

    if (*genus_cmd) {
      long long g = genus(gp, gn, gm);
      if (json) {
        Json j{{"p", gp}, {"n", gn}, {"m", gm}, {"genus", g}};
        out << j.dump(2) << "\n";
      } else {
        out << g << "\n";
      }
      return 0;
    }

    if (*classify_cmd || *compactify_cmd) {
      const std::string& text = *classify_cmd ? eq_text : ceq_text;
      auto handle = [&](auto r) {
        if (*classify_cmd) {
          auto cls = classify(r);
          if (json)
            out << classification_json(r, cls).dump(2) << "\n";
          else
            out << cls.to_string() << " (splitting degree " << splitting_degree(r) << ")\n";
        } else {
          auto rep = compactify(r);
          if (json)
            out << compactification_json(r, rep).dump(2) << "\n";
          else {
            out << "degree " << rep.degree << " curve in P(" << rep.w0 << "," << rep.w1 << ","
                << rep.w2 << "), " << (rep.regular ? "regular" : "not regular") << ", genus "
                << rep.arithmetic_genus << ", boundary degree " << rep.boundary_degree << "\n";
          }
        }
      };
      if (text.find('=') != std::string::npos)
        handle(parse_russell_compact(text, fs));
      else if (uses_s(text))
        handle(eval_russell_bivar(*parse_expression(text), fs));
      else
        handle(eval_russell(*parse_expression(text), fs));
      return 0;
    }

    if (*gl_cmd) {
      QRGroup g(parse_ratfunc(gl_a, fs));
      RatFunc s1 = parse_ratfunc(gl_s1, fs);
      RatFunc s2 = parse_ratfunc(gl_s2, fs);
      RatFunc sum = g.add(s1, s2);
      auto [u, v] = g.embed(sum);
      if (json) {
        Json j{{"a", g.a().to_string()},
               {"s1", s1.to_string()},
               {"s2", s2.to_string()},
               {"sum", sum.to_string()},
               {"u", u.to_string()},
               {"v", v.to_string()}};
        out << j.dump(2) << "\n";
      } else {
        out << sum.to_string() << "\n";
      }
      return 0;
    }

    if (*torsor_cmd) {
      auto lr = LocalRussell::monomial_shape(fs, tn, tm, tk);
      TorsorClass t{lr, parse_laurent(tf, fs)};
      if (*t_reduce) {
        NormalForm nf = reduce(t, prec);
        if (json)
          out << torsor_json(nf, trace).dump(2) << "\n";
        else {
          out << (nf.trivial ? "trivial" : nf.reduced.to_string()) << "\n";
          if (trace)
            for (auto& mv : nf.trace) out << "  " << mv.note << "\n";
        }
      } else {
        Verdict v = is_trivial(t, tbound);
        const char* s = v == Verdict::True ? "true" : (v == Verdict::False ? "false" : "unknown");
        if (json)
          out << Json{{"trivial", s}}.dump(2) << "\n";
        else
          out << s << "\n";
      }
      return 0;
    }

    if (*hw_cmd) {
      auto rep = cohomology_report(hp, hn, hm, hk, parse_binary_form(ha, fs), hkernel);
      if (json)
        out << cohomology_json(rep).dump(2) << "\n";
      else
        out << "d=" << rep.d << " r=" << rep.r << " H1(C,G)=(Z/" << rep.torsion << ")^" << rep.r
            << " H2=0 h1(C,L)=" << rep.h1L_dim << (rep.experimental ? " [experimental]" : "")
            << "\n";
      return 0;
    }

    if (*verify_cmd) {
      std::string text;
      if (corpus_file.empty()) {
        text = default_corpus();
      } else {
        std::ifstream in(corpus_file);
        if (!in) throw DomainError("cannot read corpus file " + corpus_file);
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
      }
      auto entries = parse_corpus(text);
      auto report = run_corpus(entries);
      for (auto& r : report.entries) {
        out << (r.pass ? "[PASS] " : "[FAIL] ") << std::left << std::setw(36) << r.name
            << std::right << std::fixed << std::setprecision(1) << std::setw(8) << r.elapsed_ms
            << " ms";
        if (!r.detail.empty()) out << "  " << r.detail;
        out << "\n";
      }
      out << report.passed << " passed, " << report.failed << " failed, "
          << report.entries.size() << " total\n";
      return report.failed == 0 ? 0 : 3;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace woundlab
