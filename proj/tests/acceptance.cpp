// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tama/expression.hpp"
#include "tama/report.hpp"
#include "tama/suites.hpp"
#include "tama/tama.hpp"
#include "tama/uncross.hpp"

using namespace tama;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int number;
  std::string title;
  double limit_s;
  std::function<Outcome()> run;
};

/// Runs suites and collects the failing checks.
Outcome suites(const std::vector<std::pair<std::string, SuiteOptions>>& runs) {
  Outcome out;
  std::size_t total = 0;
  std::vector<std::string> failed;
  for (const auto& [name, opts] : runs) {
    const Report r = run_suite(name, opts);
    total += r.checks.size();
    for (const auto& c : r.checks) {
      if (c.status == Status::fail) failed.push_back(name + "/" + c.name + " " + c.parameters.dump());
    }
  }
  out.ok = failed.empty();
  out.detail = std::to_string(total - failed.size()) + "/" + std::to_string(total) + " checks";
  for (const auto& f : failed) out.detail += "; failed " + f;
  return out;
}

SuiteOptions with_n(int n, int max_degree = 4) {
  SuiteOptions o;
  o.n = n;
  o.max_degree = max_degree;
  return o;
}

Outcome normal_ordering() {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> pick_n(1, 4);
  int bad = 0;
  for (int t = 0; t < 500; ++t) {
    const int n = pick_n(rng);
    const auto w = oracle::random_word(rng, n, 6);
    if (!(word_product(AlgebraContext(n), w) == oracle::bubble_sort_product(n, w))) ++bad;
  }
  return {bad == 0, std::to_string(500 - bad) + "/500 words agree"};
}

Outcome kostant() {
  std::vector<std::pair<std::string, SuiteOptions>> runs;
  for (int n = 1; n <= 3; ++n) runs.push_back({"kostant", with_n(n, 4)});
  return suites(runs);
}

Outcome up_to_six(const std::string& name, int from) {
  std::vector<std::pair<std::string, SuiteOptions>> runs;
  for (int n = from; n <= 6; ++n) runs.push_back({name, with_n(n)});
  return suites(runs);
}

Outcome noncrossing() {
  std::vector<std::pair<std::string, SuiteOptions>> runs;
  for (int n = 2; n <= 5; ++n) runs.push_back({"noncrossing", with_n(n, 3)});
  return suites(runs);
}

Outcome gram() {
  SuiteOptions two = with_n(6);
  two.degree = 2;
  SuiteOptions three = with_n(5);
  three.degree = 3;
  Outcome out = suites({{"gram", two}, {"gram", three}, {"kernel", with_n(4, 3)}});
  const GramRank g = gram_rank_degree3(AlgebraContext(6), {1, 2, 3, 4, 5, 6});
  out.ok = out.ok && g.full_rank();
  out.detail += "; distinct tuple rank " + std::to_string(g.rank) + "/" + std::to_string(g.size);
  return out;
}

Outcome gr_identities() {
  Outcome out = suites({{"gr", SuiteOptions{}}});
  const Report r = run_suite("gr", SuiteOptions{});
  for (const auto& c : r.checks) {
    if (c.name != "printed-vs-derived") continue;
    for (const auto& [family, diff] : c.witness.items()) {
      out.detail += "; printed " + family + " differs in " + diff["differing_terms"].dump() + " terms";
    }
  }
  return out;
}

Outcome figure_six() {
  Outcome out = suites({{"figure6", SuiteOptions{}}});
  std::size_t discrepancies = 0;
  std::ostringstream terms;
  for (const auto& t : figure_six_comparison()) {
    if (t.computed == t.printed) continue;
    ++discrepancies;
    terms << "; " << format_ama_ext(t.diagram) << " computed " << format_rational(t.computed) << " printed "
          << format_rational(t.printed);
  }
  out.detail += "; " + std::to_string(discrepancies) + " coefficient discrepancies (finding)" + terms.str();
  return out;
}

Outcome basis(int n, int max_degree) {
  Outcome out;
  std::ostringstream detail;
  bool spanning = true, independence = true, classification = true, measure = true, unique = true;
  std::size_t literal = 0, total = 0;
  for (int d = 0; d <= max_degree; ++d) {
    const BasisReport r = independence_and_spanning_report(n, d);
    spanning = spanning && r.spanning();
    independence = independence && r.independence();
    classification = classification && r.classification_agrees;
    measure = measure && r.measure_decreasing;
    unique = unique && r.witnesses_unique();
    literal += r.witness_unique;
    total += r.uncrossable;
    if (!r.witnesses_unique()) {
      detail << "; degree " << d << " literal witness uniqueness " << r.witness_unique << "/" << r.uncrossable;
    }
  }
  out.ok = spanning && independence && classification && measure && unique;
  out.detail = std::string("spanning ") + (spanning ? "ok" : "FAILED") + ", triangular independence and rank " +
               (independence ? "ok" : "FAILED") + ", classification " + (classification ? "ok" : "FAILED") +
               ", measure " + (measure ? "ok" : "FAILED") + ", witness uniqueness " + std::to_string(literal) + "/" +
               std::to_string(total) + detail.str();
  return out;
}

Outcome cli() {
  Outcome out = suites({{"parser", SuiteOptions{}}});
  SuiteOptions opts = with_n(5);
  const std::string a = without_runtimes(to_json(run_suite("tableau", opts))).dump(2);
  opts.workers = 1;
  const std::string b = without_runtimes(to_json(run_suite("tableau", opts))).dump(2);
  out.ok = out.ok && a == b;
  out.detail += a == b ? "; reports byte-identical" : "; reports differ";
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "normal ordering vs single-swap rewriter", 10, normal_ordering},
      {2, "Kostant closed form vs permanent", 5, kostant},
      {3, "crossing relations on {1..5}^4", 10, [] { return suites({{"crossing", with_n(5)}}); }},
      {4, "non-crossing basis injectivity and triangularity", 30, noncrossing},
      {5, "projector identities", 60, [] { return up_to_six("projector", 2); }},
      {6, "centraliser", 60, [] { return up_to_six("centraliser", 2); }},
      {7, "2-3 commutation table", 30, [] { return up_to_six("commutation", 3); }},
      {8, "tableau relations", 300,
       [] { return suites({{"tableau", with_n(4)}, {"tableau", with_n(5)}, {"tableau", with_n(6)}}); }},
      {9, "Gram ranks and kernel probes", 600, gram},
      {10, "gr identities", 30, gr_identities},
      {11, "expansion of O13^2 O24", 5, figure_six},
      {12, "n=4 basis theorem, degree <= 5", 300, [] { return basis(4, 5); }},
      {13, "n=5 basis theorem, degree <= 4", 600, [] { return basis(5, 4); }},
      {14, "parser round trip and deterministic reports", 10, cli},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = o.ok && s < c.limit_s;
    if (!ok) ++failures;
    std::printf("%s criterion %d: %s (%.2f s, limit %.0f s) %s\n", ok ? "PASS" : "FAIL", c.number, c.title.c_str(), s,
                c.limit_s, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failures);
  return failures == 0 ? 0 : 1;
}
