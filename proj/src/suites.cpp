#include "tama/suites.hpp"

#include <chrono>
#include <future>
#include <map>
#include <random>
#include <stdexcept>

#include "tama/ama.hpp"
#include "tama/expression.hpp"
#include "tama/pairing.hpp"
#include "tama/report.hpp"

namespace tama {

std::vector<std::vector<int>> ascending_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = next; v <= n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

std::vector<FigureSixTerm> figure_six_comparison() {
  const int n = 4;
  auto ae = [](std::initializer_list<std::pair<Chord, int>> chords, std::uint16_t black) {
    TamaDiagram d(4);
    for (const auto& [c, m] : chords) d.add(c.i, c.j, m);
    return AmaExtDiagram{d, black};
  };
  // published values, in their listed order
  const std::vector<std::pair<AmaExtDiagram, Rational>> printed = {
      {ae({{{1, 2}, 1}, {{1, 3}, 1}, {{3, 4}, 1}}, 0), -1},
      {ae({{{1, 3}, 1}, {{1, 4}, 1}, {{2, 3}, 1}}, 0), -1},
      {ae({{{1, 2}, 1}, {{3, 4}, 1}}, 0b0101), Rational(-1, 2)},
      {ae({{{1, 4}, 1}, {{2, 3}, 1}}, 0b0101), Rational(-1, 2)},
      {ae({{{1, 3}, 2}}, 0b1010), Rational(1, 2)},
      {ae({{{1, 3}, 1}}, 0b1111), Rational(1, 4)},
  };
  const AmaExtExpansion computed = expand_to_ama_ext(TamaDiagram(n, {{{1, 3}, 2}, {{2, 4}, 1}}));
  std::vector<FigureSixTerm> out;
  for (const auto& [d, p] : printed) {
    auto it = computed.find(d);
    out.push_back({d, it == computed.end() ? Rational(0) : it->second, p});
  }
  for (const auto& [d, c] : computed) {
    bool listed = std::any_of(printed.begin(), printed.end(), [&](const auto& t) { return t.first == d; });
    if (!listed) out.push_back({d, c, 0});
  }
  return out;
}

namespace {

using Task = CheckTask;

std::pair<Status, Json> verdict(bool ok, Json witness = Json::object()) {
  return {ok ? Status::pass : Status::fail, std::move(witness)};
}

IndexQuad to_quad(const std::vector<int>& v) { return {v[0], v[1], v[2], v[3]}; }

Json opoly_json(const OPolynomial& p) {
  Json out = Json::object();
  for (const auto& [d, c] : p) out[format_tama_diagram(d)] = format_rational(c);
  return out;
}

void require_n(int n, int lo, int hi, const std::string& suite) {
  if (n < lo || n > hi) {
    throw std::invalid_argument(suite + " needs " + std::to_string(lo) + " <= n <= " + std::to_string(hi));
  }
}

std::vector<Task> crossing_tasks(const SuiteOptions& o) {
  require_n(o.n, 1, 8, "crossing");
  std::vector<Task> tasks;
  for (int i = 1; i <= o.n; ++i) {
    for (int j = 1; j <= o.n; ++j) {
      for (int k = 1; k <= o.n; ++k) {
        for (int l = 1; l <= o.n; ++l) {
          tasks.push_back({"crossing-relation", {{"n", o.n}, {"ijkl", {i, j, k, l}}}, [n = o.n, i, j, k, l] {
                             AlgebraContext ctx(n);
                             const WCElement r = crossing_relation_element(ctx, i, j, k, l);
                             return verdict(r.is_zero(), {{"printed_form_zero", crossing_relation_printed(ctx, i, j, k, l).is_zero()}});
                           }});
        }
      }
    }
  }
  return tasks;
}

std::vector<Task> noncrossing_tasks(const SuiteOptions& o) {
  require_n(o.n, 2, 7, "noncrossing");
  std::vector<Task> tasks;
  for (int p = 0; p <= o.max_degree; ++p) {
    tasks.push_back({"injectivity", {{"n", o.n}, {"p", p}}, [n = o.n, p] { return verdict(check_injectivity(n, p)); }});
    tasks.push_back({"triangularity", {{"n", o.n}, {"p", p}}, [n = o.n, p] {
                       AlgebraContext ctx(n);
                       const auto diagrams = enumerate_noncrossing(n, p);
                       Json bad = Json::array();
                       for (const auto& d : diagrams) {
                         if (!check_triangularity(ctx, d)) bad.push_back(format_diagram(d));
                       }
                       return verdict(bad.empty(), {{"diagrams", diagrams.size()}, {"violations", bad}});
                     }});
  }
  return tasks;
}

std::vector<std::vector<Factor>> factor_multisets(int n, int length) {
  std::vector<Factor> letters;
  for (int i = 1; i <= n; ++i) {
    letters.push_back({Factor::Kind::x, i});
    letters.push_back({Factor::Kind::y, i});
  }
  std::vector<std::vector<Factor>> out;
  std::vector<Factor> cur;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (static_cast<int>(cur.size()) == length) {
      out.push_back(cur);
      return;
    }
    for (std::size_t t = from; t < letters.size(); ++t) {
      cur.push_back(letters[t]);
      self(self, t);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<Task> kostant_tasks(const SuiteOptions& o) {
  require_n(o.n, 1, 4, "kostant");
  std::vector<Task> tasks;
  for (int len = 0; len <= o.max_degree; ++len) {
    tasks.push_back({"kostant-closed-form", {{"n", o.n}, {"length", len}}, [n = o.n, len] {
                       AlgebraContext ctx(n);
                       const auto words = factor_multisets(n, len);
                       std::vector<WCElement> q;
                       for (const auto& w : words) q.push_back(quantize_w(ctx, w));
                       std::size_t mismatches = 0;
                       for (std::size_t a = 0; a < words.size(); ++a) {
                         for (std::size_t b = 0; b < words.size(); ++b) {
                           if (kostant_pairing(q[a], q[b]) != kostant_bruteforce(words[a], words[b])) ++mismatches;
                         }
                       }
                       return verdict(mismatches == 0, {{"multisets", words.size()}, {"mismatches", mismatches}});
                     }});
  }
  return tasks;
}

std::vector<Task> projector_tasks(const SuiteOptions& o) {
  require_n(o.n, 2, 7, "projector");
  std::vector<Task> tasks;
  for (int i = 1; i <= o.n; ++i) {
    tasks.push_back({"adp-kills-e", {{"n", o.n}, {"i", i}}, [n = o.n, i] {
                       AlgebraContext ctx(n);
                       return verdict(ad_p(ctx, gen_e(ctx, i)).is_zero());
                     }});
  }
  for (int i = 1; i <= o.n; ++i) {
    for (int j = i + 1; j <= o.n; ++j) {
      tasks.push_back({"adp-two-index", {{"n", o.n}, {"ij", {i, j}}}, [n = o.n, i, j] {
                         AlgebraContext ctx(n);
                         const WCElement lhs = Rational(-1, 2) * ad_p(ctx, multiply(gen_e(ctx, i), gen_e(ctx, j)));
                         const WCElement rhs = L_of_chord(ctx, {i, j}) + Rational(1, 2) * multiply(gen_e(ctx, i), gen_e(ctx, j));
                         return verdict(lhs == rhs);
                       }});
    }
  }
  for (int k = 2; k <= o.n; ++k) {
    for (const auto& a : ascending_subsets(o.n, k)) {
      tasks.push_back({"k-index-closed-form", {{"n", o.n}, {"A", a}}, [n = o.n, a] {
                         AlgebraContext ctx(n);
                         return verdict(o_symmetry(ctx, a) == o_symmetry_closed_form(ctx, a));
                       }});
    }
  }
  return tasks;
}

std::vector<Task> centraliser_tasks(const SuiteOptions& o) {
  require_n(o.n, 2, 7, "centraliser");
  std::vector<Task> tasks;
  for (int k = 2; k <= o.n; ++k) {
    for (const auto& a : ascending_subsets(o.n, k)) {
      tasks.push_back({"centraliser", {{"n", o.n}, {"A", a}}, [n = o.n, a] {
                         AlgebraContext ctx(n);
                         return verdict(centraliser_check(ctx, o_symmetry(ctx, a)));
                       }});
    }
  }
  return tasks;
}

std::vector<Task> commutation_tasks(const SuiteOptions& o) {
  require_n(o.n, 3, 7, "commutation");
  std::vector<Task> tasks;
  for (int i = 1; i <= o.n; ++i) {
    for (int j = 1; j <= o.n; ++j) {
      if (i == j) continue;
      tasks.push_back({"commutation-2-3", {{"n", o.n}, {"ij", {i, j}}}, [n = o.n, i, j] {
                         AlgebraContext ctx(n);
                         std::size_t total = 0;
                         Json bad = Json::array();
                         for (int p = 1; p <= n; ++p) {
                           for (int q = 1; q <= n; ++q) {
                             for (int r = 1; r <= n; ++r) {
                               if (p == q || q == r || p == r) continue;
                               ++total;
                               if (!(comm_2_3(ctx, i, j, p, q, r) == comm_2_3_expected(ctx, i, j, p, q, r))) {
                                 bad.push_back({p, q, r});
                               }
                             }
                           }
                         }
                         return verdict(bad.empty(), {{"configurations", total}, {"violations", bad}});
                       }});
    }
  }
  return tasks;
}

std::vector<Task> tableau_tasks(const SuiteOptions& o) {
  require_n(o.n, 4, 7, "tableau");
  std::vector<Task> tasks;
  const auto subsets = ascending_subsets(o.n, 4);
  for (const auto& a : subsets) {
    for (const auto& b : subsets) {
      tasks.push_back({"tableau-relation", {{"n", o.n}, {"A", a}, {"B", b}}, [n = o.n, a, b] {
                         AlgebraContext ctx(n);
                         const WCElement r = tableau_relation(ctx, to_quad(a), to_quad(b));
                         return verdict(r.is_zero(), {{"terms", r.size()}});
                       }});
    }
  }
  {
    tasks.push_back({"example-square", {{"n", 4}}, [] {
                       AlgebraContext ctx(4);
                       const int a[] = {1, 2, 3, 4};
                       const WCElement o_a = o_symmetry(ctx, a);
                       WCElement rhs = constant(ctx, Rational(3, 4));
                       for (int i = 1; i <= 4; ++i) {
                         for (int j = i + 1; j <= 4; ++j) rhs -= power(o2(ctx, i, j), 2);
                       }
                       return verdict(multiply(o_a, o_a) == rhs);
                     }});
    tasks.push_back({"example-anticommutator", {{"n", 5}}, [] {
                       AlgebraContext ctx(5);
                       const int a[] = {1, 2, 3, 4};
                       const int b[] = {1, 2, 3, 5};
                       const WCElement o_a = o_symmetry(ctx, a);
                       const WCElement o_b = o_symmetry(ctx, b);
                       WCElement rhs(5);
                       for (int i = 1; i <= 3; ++i) {
                         rhs -= multiply(o2(ctx, i, 4), o2(ctx, i, 5)) + multiply(o2(ctx, i, 5), o2(ctx, i, 4));
                       }
                       return verdict(multiply(o_a, o_b) + multiply(o_b, o_a) == rhs);
                     }});
  }
  return tasks;
}

std::vector<Task> gram_tasks(const SuiteOptions& o) {
  require_n(o.n, 2, 7, "gram");
  if (o.degree != 2 && o.degree != 3) throw std::invalid_argument("gram needs --degree 2 or 3");
  std::vector<Task> tasks;
  if (o.degree == 2) {
    for (int i = 1; i <= o.n; ++i) {
      tasks.push_back({"gram-degree-2", {{"n", o.n}, {"i", i}}, [n = o.n, i] {
                         AlgebraContext ctx(n);
                         Json bad = Json::array();
                         std::size_t total = 0;
                         for (int j = 1; j <= n; ++j) {
                           for (int k = 1; k <= n; ++k) {
                             for (int l = 1; l <= n; ++l) {
                               ++total;
                               if (!gram_rank_degree2(ctx, i, j, k, l).full_rank()) bad.push_back({i, j, k, l});
                             }
                           }
                         }
                         return verdict(bad.empty(), {{"tuples", total}, {"rank_deficient", bad}});
                       }});
    }
    return tasks;
  }
  for (int i = 1; i <= o.n; ++i) {
    for (int j = 1; j <= o.n; ++j) {
      tasks.push_back({"gram-degree-3", {{"n", o.n}, {"prefix", {i, j}}}, [n = o.n, i, j] {
                         AlgebraContext ctx(n);
                         Json bad = Json::array();
                         std::size_t total = 0;
                         std::array<int, 6> s{i, j, 1, 1, 1, 1};
                         while (true) {
                           ++total;
                           if (!gram_rank_degree3(ctx, s).full_rank()) bad.push_back(s);
                           int t = 5;
                           while (t >= 2 && s[t] == n) s[t--] = 1;
                           if (t < 2) break;
                           ++s[t];
                         }
                         return verdict(bad.empty(), {{"tuples", total}, {"rank_deficient", bad}});
                       }});
    }
  }
  if (o.n >= 6) {
    tasks.push_back({"gram-degree-3-distinct", {{"n", o.n}, {"tuple", {1, 2, 3, 4, 5, 6}}}, [n = o.n] {
                       AlgebraContext ctx(n);
                       GramRank g = gram_rank_degree3(ctx, {1, 2, 3, 4, 5, 6});
                       return verdict(g.full_rank(), {{"size", g.size}, {"rank", g.rank}});
                     }});
  }
  return tasks;
}

std::vector<Task> kernel_tasks(const SuiteOptions& o) {
  require_n(o.n, 2, 7, "kernel");
  std::vector<Task> tasks;
  for (int d = 1; d <= o.max_degree; ++d) {
    tasks.push_back({"kernel-probe", {{"n", o.n}, {"degree", d}}, [n = o.n, d, cap = o.cap] {
                       const std::size_t k = kernel_probe_degree(n, d, cap);
                       if (d <= 3) return verdict(k == 0, {{"kernel_dimension", k}});
                       if (d == 4 && n >= 4) {
                         const std::size_t rel = relation_span_degree4(n);
                         return verdict(k == rel, {{"kernel_dimension", k}, {"relation_span", rel}});
                       }
                       return std::pair<Status, Json>{Status::skipped, {{"kernel_dimension", k}}};
                     }});
  }
  return tasks;
}

std::vector<Task> gr_tasks(const SuiteOptions&) {
  std::vector<Task> tasks;
  tasks.push_back({"plucker", {{"n", 5}}, [] {
                     AlgebraContext ctx(5);
                     std::size_t bad = 0;
                     for (const auto& s : ascending_subsets(5, 4)) {
                       const int i = s[0], j = s[1], k = s[2], l = s[3];
                       const GrElement r = gr_L(ctx, i, j) * gr_L(ctx, k, l) - gr_L(ctx, i, k) * gr_L(ctx, j, l) +
                                           gr_L(ctx, i, l) * gr_L(ctx, j, k);
                       if (!r.is_zero()) ++bad;
                     }
                     return verdict(bad == 0, {{"nonzero", bad}});
                   }});
  tasks.push_back({"double-cross-leading-part", {{"n", 4}}, [] {
                     const OPolynomial top = tableau_top_symbol(4, {1, 2, 3, 4}, {1, 2, 3, 4});
                     return verdict(gr_image(AlgebraContext(4), top).is_zero() && degree(top) == 4,
                                    {{"terms", top.size()}});
                   }});
  for (int n : {4, 5}) {
    tasks.push_back({"derived-rules", {{"n", n}}, [n] {
                       const auto rules = derive_rules(n);
                       const AlgebraContext ctx(n);
                       Json families = Json::array();
                       bool zero = !rules.empty();
                       for (const auto& r : rules) {
                         const bool z = gr_image(ctx, r.certificate).is_zero();
                         zero = zero && z;
                         families.push_back({{"family", r.family},
                                             {"rotation", r.rotation},
                                             {"pattern", format_tama_diagram(r.pattern)},
                                             {"zero_in_gr", z}});
                       }
                       return verdict(zero, {{"rules", families}});
                     }});
  }
  tasks.push_back({"printed-vs-derived", Json::object(), [] {
                     Json diffs = Json::object();
                     for (const auto& printed : printed_relations()) {
                       const int n = printed.family == "double-cross" ? 4 : 5;
                       for (const auto& rule : derive_rules(n)) {
                         if (rule.family != printed.family || rule.rotation != 0) continue;
                         OPolynomial derived;
                         add_term(derived, rule.pattern, 1);
                         derived = add(derived, rule.replacement, -1);
                         const OPolynomial diff = add(derived, printed.relation, -1);
                         diffs[printed.family] = {{"printed_zero_in_gr", gr_image(AlgebraContext(n), printed.relation).is_zero()},
                                                  {"differing_terms", diff.size()},
                                                  {"derived_minus_printed", opoly_json(diff)}};
                       }
                     }
                     return verdict(true, diffs);
                   }});
  return tasks;
}

std::vector<Task> figure6_tasks(const SuiteOptions&) {
  std::vector<Task> tasks;
  tasks.push_back({"figure-6", Json::object(), [] {
                     const TamaDiagram d(4, {{{1, 3}, 2}, {{2, 4}, 1}});
                     const AmaExtExpansion e = expand_to_ama_ext(d);
                     AlgebraContext ctx(4);
                     const bool exact = gr_image(ctx, e) == gr_image(ctx, d);
                     Json terms = Json::array();
                     std::size_t discrepancies = 0;
                     for (const auto& t : figure_six_comparison()) {
                       if (t.computed != t.printed) ++discrepancies;
                       terms.push_back({{"diagram", format_ama_ext(t.diagram)},
                                        {"computed", format_rational(t.computed)},
                                        {"printed", format_rational(t.printed)}});
                     }
                     return verdict(e.size() == 6 && exact,
                                    {{"support", e.size()}, {"expansion_exact", exact}, {"coefficient_discrepancies", discrepancies}, {"terms", terms}});
                   }});
  return tasks;
}

std::vector<Task> basis_tasks(const SuiteOptions& o) {
  if (o.n != 4 && o.n != 5) throw std::invalid_argument("basis needs n = 4 or 5");
  std::vector<Task> tasks;
  for (int d = 0; d <= o.max_degree; ++d) {
    // both checks of a degree share one report
    auto shared = std::async(std::launch::deferred, [n = o.n, d] { return independence_and_spanning_report(n, d); }).share();
    tasks.push_back({"basis", {{"n", o.n}, {"degree", d}}, [shared] {
                       const BasisReport& r = shared.get();
                       Json w = {{"monomials", r.monomials},
                                 {"uncrossable", r.uncrossable},
                                 {"spanning_ok", r.spanning_ok},
                                 {"witness_triangular", r.witness_triangular},
                                 {"independent_rank", r.independent_rank},
                                 {"classification_agrees", r.classification_agrees},
                                 {"measure_decreasing", r.measure_decreasing}};
                       return verdict(r.passed(), w);
                     }});
    tasks.push_back({"witness-uniqueness", {{"n", o.n}, {"degree", d}}, [shared] {
                       const BasisReport& r = shared.get();
                       return verdict(r.witnesses_unique(), {{"uncrossable", r.uncrossable}, {"witness_unique", r.witness_unique}});
                     }});
  }
  return tasks;
}

std::vector<Task> parser_tasks(const SuiteOptions& o) {
  std::vector<Task> tasks;
  tasks.push_back({"parser-round-trip", {{"seed", o.seed}, {"count", 500}}, [seed = o.seed, n = std::max(o.n, 2)] {
                     std::mt19937_64 rng(seed);
                     std::size_t bad = 0;
                     for (int t = 0; t < 500; ++t) {
                       const ExprPtr e = random_expression(rng, n, 6);
                       const std::string text = render(*e);
                       if (!(*parse_expression(text) == *e) || render(*parse_expression(text)) != text) ++bad;
                     }
                     return verdict(bad == 0, {{"mismatches", bad}});
                   }});
  return tasks;
}

using Builder = std::vector<Task> (*)(const SuiteOptions&);

const std::map<std::string, Builder>& builders() {
  static const std::map<std::string, Builder> table = {
      {"basis", basis_tasks},         {"centraliser", centraliser_tasks}, {"commutation", commutation_tasks},
      {"crossing", crossing_tasks},   {"figure6", figure6_tasks},         {"gr", gr_tasks},
      {"gram", gram_tasks},           {"kernel", kernel_tasks},           {"kostant", kostant_tasks},
      {"noncrossing", noncrossing_tasks}, {"parser", parser_tasks},       {"projector", projector_tasks},
      {"tableau", tableau_tasks},
  };
  return table;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, b] : builders()) out.push_back(name);
  return out;
}

Report run_suite(const std::string& name, const SuiteOptions& options) {
  auto it = builders().find(name);
  if (it == builders().end()) throw std::invalid_argument("unknown suite '" + name + "'");
  auto start = std::chrono::steady_clock::now();
  Report report;
  report.suite = name;
  report.parameters = {{"n", options.n},
                       {"degree", options.degree},
                       {"max_degree", options.max_degree},
                       {"seed", options.seed},
                       {"cap", options.cap}};
  report.checks = run_tasks(it->second(options), options.workers);
  report.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace tama
