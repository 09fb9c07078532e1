#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "tama/emit.hpp"
#include "tama/expression.hpp"
#include "tama/report.hpp"
#include "tama/suites.hpp"

using namespace tama;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Output {
  std::string format = "text";
  std::string path;

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << text;
  }
};

void add_output_flags(CLI::App* cmd, Output& out) {
  cmd->add_option("--format", out.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--out", out.path, "Write output to this file");
}

Json opoly_json(const OPolynomial& p) {
  Json out = Json::object();
  for (const auto& [d, c] : p) out[format_tama_diagram(d)] = format_rational(c);
  return out;
}

OPolynomial read_opolynomial(const std::string& text, int n) {
  if (text.find('[') != std::string::npos) {
    OPolynomial p;
    add_term(p, parse_tama_diagram(text), 1);
    return p;
  }
  return evaluate_opolynomial(*parse_expression(text), n);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact workbench for Weyl-Clifford, AMA and TAMA computations"};
  app.require_subcommand(1);

  Output out;
  SuiteOptions options;
  std::string expression;
  bool graded = false;
  auto* eval = app.add_subcommand("eval", "Evaluate an expression in WC or gr(WC)");
  eval->add_option("expression", expression, "Expression, e.g. 'L(1,3)*L(2,5)'")->required();
  eval->add_option("--n", options.n, "Number of variables")->check(CLI::Range(1, 16));
  eval->add_flag("--gr", graded, "Evaluate in the associated graded algebra");
  add_output_flags(eval, out);

  std::string suite;
  bool list = false;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "Suite name");
  verify->add_flag("--list", list, "List suite names");
  verify->add_option("--n", options.n, "Number of variables")->check(CLI::Range(1, 16));
  verify->add_option("--degree", options.degree, "Degree")->check(CLI::Range(0, 64));
  verify->add_option("--max-degree", options.max_degree, "Maximal degree")->check(CLI::Range(0, 64));
  verify->add_option("--seed", options.seed, "Seed for randomized checks");
  verify->add_option("--cap", options.cap, "Monomial resource cap");
  verify->add_option("--workers", options.workers, "Worker threads (0: automatic, capped by TAMA_WORKERS)");
  add_output_flags(verify, out);

  std::string kind;
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate diagrams");
  enumerate->add_option("kind", kind, "noncrossing, tama or uncrossable")
      ->required()
      ->check(CLI::IsMember({"noncrossing", "tama", "uncrossable"}));
  enumerate->add_option("--n", options.n, "Number of variables")->check(CLI::Range(1, 16));
  enumerate->add_option("--degree", options.degree, "Number of chords")->check(CLI::Range(0, 64));
  add_output_flags(enumerate, out);

  std::string input;
  auto* rewrite = app.add_subcommand("rewrite", "Rewrite an O-polynomial onto uncrossable monomials");
  rewrite->add_option("input", input, "O-polynomial such as 'O(1,3)*O(2,4)^2*O(3,5)' or T[...] text")->required();
  rewrite->add_option("--n", options.n, "Number of variables (4 or 5)")->check(CLI::IsMember({4, 5}));
  add_output_flags(rewrite, out);

  std::string diagram;
  std::string figure = "tikz";
  std::string out_path;
  auto* emit = app.add_subcommand("emit", "Render a D[...], T[...] or AE[...] diagram");
  emit->add_option("diagram", diagram, "Diagram text")->required();
  emit->add_option("--format", figure, "Figure format")->check(CLI::IsMember({"dot", "tikz"}));
  emit->add_option("--out", out_path, "Write output to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*eval) {
      AlgebraContext ctx(options.n);
      ExprPtr e = parse_expression(expression);
      std::string result = graded ? format(evaluate_gr(*e, ctx)) : format(evaluate_wc(*e, ctx));
      if (out.format == "json") {
        Json j;
        j["schema"] = 1;
        j["expression"] = render(*e);
        j["n"] = options.n;
        j["algebra"] = graded ? "gr" : "wc";
        j["result"] = result;
        out.write(j.dump(2) + "\n");
      } else {
        out.write(result + "\n");
      }
      return kPass;
    }
    if (*verify) {
      if (list) {
        std::string names;
        for (const auto& s : suite_names()) names += s + "\n";
        out.write(names);
        return kPass;
      }
      if (suite.empty()) {
        std::cerr << "verify: a suite name is required (see --list)\n";
        return kUsage;
      }
      Report r = run_suite(suite, options);
      out.write(out.format == "json" ? to_json(r).dump(2) + "\n" : to_text(r));
      return r.passed() ? kPass : kFail;
    }
    if (*enumerate) {
      std::vector<std::string> items;
      if (kind == "noncrossing") {
        for (const auto& d : enumerate_noncrossing(options.n, options.degree)) items.push_back(format_diagram(d));
      } else if (kind == "tama") {
        for (const auto& d : enumerate_tama_diagrams(options.n, options.degree)) items.push_back(format_tama_diagram(d));
      } else {
        for (const auto& d : enumerate_uncrossable(options.n, options.degree)) items.push_back(format_tama_diagram(d));
      }
      if (out.format == "json") {
        Json j;
        j["schema"] = 1;
        j["kind"] = kind;
        j["n"] = options.n;
        j["degree"] = options.degree;
        j["count"] = items.size();
        j["items"] = items;
        out.write(j.dump(2) + "\n");
      } else {
        std::string text;
        for (const auto& s : items) text += s + "\n";
        out.write(text);
      }
      return kPass;
    }
    if (*rewrite) {
      const OPolynomial u = read_opolynomial(input, options.n);
      const RewriteResult r = rewrite_to_uncrossable(u, options.n);
      const bool certified = expand_to_ama_ext(u) == expand_to_ama_ext(r.result);
      if (out.format == "json") {
        Json j;
        j["schema"] = 1;
        j["n"] = options.n;
        j["input"] = opoly_json(u);
        j["result"] = opoly_json(r.result);
        j["steps"] = r.steps;
        j["certified"] = certified;
        j["measure_decreasing"] = r.measure_decreasing;
        out.write(j.dump(2) + "\n");
      } else {
        out.write(format_opolynomial(r.result) + "\n");
      }
      return certified ? kPass : kFail;
    }
    if (*emit) {
      Output o;
      o.path = out_path;
      o.write(emit_diagram(parse_any_diagram(diagram), figure == "dot" ? FigureFormat::dot : FigureFormat::tikz));
      return kPass;
    }
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kFail;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
