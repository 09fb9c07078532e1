#include "tama/uncross.hpp"

#include <bit>
#include <regex>

#include "tama/linalg.hpp"

namespace tama {

namespace {

bool chords_cross(Chord p, Chord q) {
  return (p.i < q.i && q.i < p.j && p.j < q.j) || (q.i < p.i && p.i < q.j && q.j < p.j);
}

/// First pair of present chords that cross, in chord order.
bool find_crossing(const TamaDiagram& d, Chord& first, Chord& second) {
  const auto chords = d.chords();
  for (std::size_t s = 0; s < chords.size(); ++s) {
    for (std::size_t t = s + 1; t < chords.size(); ++t) {
      if (chords_cross(chords[s].first, chords[t].first)) {
        first = chords[s].first;
        second = chords[t].first;
        return true;
      }
    }
  }
  return false;
}

/// Sign of moving e_k past the generators of `mask` with larger index.
int wedge_sign(std::uint16_t mask, int k) {
  return (std::popcount(static_cast<unsigned>(mask) >> k) & 1) ? -1 : 1;
}

using Expansion = std::map<TamaDiagram, Rational>;

void add_scaled(Expansion& into, const Expansion& from, const Rational& c) {
  for (const auto& [d, v] : from) {
    auto [it, inserted] = into.try_emplace(d, c * v);
    if (!inserted) {
      it->second += c * v;
      if (it->second == 0) into.erase(it);
    }
  }
}

const Expansion& uncross_rec(const TamaDiagram& d, std::map<TamaDiagram, Expansion>& memo) {
  if (auto it = memo.find(d); it != memo.end()) return it->second;
  Expansion out;
  Chord p;
  Chord q;
  if (!find_crossing(d, p, q)) {
    out.emplace(d, 1);
  } else {
    // label the crossing pair as (i,k), (j,l) with i < j < k < l
    if (q.i < p.i) std::swap(p, q);
    const int i = p.i, k = p.j, j = q.i, l = q.j;
    TamaDiagram rest = d;
    rest.add(i, k, -1);
    rest.add(j, l, -1);
    TamaDiagram first = rest;
    first.add(i, j, 1);
    first.add(k, l, 1);
    TamaDiagram second = rest;
    second.add(i, l, 1);
    second.add(j, k, 1);
    Expansion a = uncross_rec(first, memo);
    add_scaled(out, a, 1);
    Expansion b = uncross_rec(second, memo);
    add_scaled(out, b, 1);
  }
  return memo.emplace(d, std::move(out)).first->second;
}

void expand_into(AmaExtExpansion& out, const TamaDiagram& d, const Rational& scale,
                 std::map<TamaDiagram, Expansion>& memo) {
  const auto chords = d.chords();
  const std::size_t count = chords.size();
  if (count > 20) throw ResourceError("too many distinct chords to expand");
  for (std::uint32_t s = 0; s < (1u << count); ++s) {
    std::uint16_t mask = 0;
    int sign = 1;
    Rational coef = scale;
    TamaDiagram l_part = d;
    bool vanishes = false;
    for (std::size_t t = 0; t < count && !vanishes; ++t) {
      if (!(s >> t & 1u)) continue;
      const auto& [c, m] = chords[t];
      const std::uint16_t bi = static_cast<std::uint16_t>(1u << (c.i - 1));
      const std::uint16_t bj = static_cast<std::uint16_t>(1u << (c.j - 1));
      if ((mask & bi) || (mask & bj)) {
        vanishes = true;
        break;
      }
      sign *= wedge_sign(mask, c.i);
      mask |= bi;
      sign *= wedge_sign(mask, c.j);
      mask |= bj;
      coef *= make_rational(m, 2);
      l_part.add(c.i, c.j, -1);
    }
    if (vanishes) continue;
    if (sign < 0) coef = -coef;
    for (const auto& [u, cu] : uncross_rec(l_part, memo)) {
      AmaExtDiagram key{u, mask};
      Rational v = coef * cu;
      auto [it, inserted] = out.try_emplace(key, v);
      if (!inserted) {
        it->second += v;
        if (it->second == 0) out.erase(it);
      }
    }
  }
}

int rotate(int v, int r) { return (v - 1 + r) % 5 + 1; }

IndexQuad rotate_sorted(const IndexQuad& s, int r) {
  IndexQuad out;
  for (std::size_t t = 0; t < 4; ++t) out[t] = rotate(s[t], r);
  std::sort(out.begin(), out.end());
  return out;
}

TamaDiagram rotate_diagram(const TamaDiagram& d, int r) {
  TamaDiagram out(d.n());
  for (const auto& [c, m] : d.chords()) out.add(rotate(c.i, r), rotate(c.j, r), m);
  return out;
}

RewriteRule make_rule(int n, const std::string& family, int rotation, const IndexQuad& a, const IndexQuad& b,
                      const TamaDiagram& pattern) {
  RewriteRule rule;
  rule.family = family;
  rule.rotation = rotation;
  rule.a = a;
  rule.b = b;
  rule.pattern = pattern;
  rule.certificate = tableau_top_symbol(n, a, b);
  auto it = rule.certificate.find(pattern);
  if (it == rule.certificate.end()) {
    throw AlgebraError("pattern " + format_tama_diagram(pattern) + " missing from its relation");
  }
  rule.pattern_coefficient = it->second;
  if (!gr_image(AlgebraContext(n), rule.certificate).is_zero()) {
    throw AlgebraError("relation for " + format_tama_diagram(pattern) + " does not vanish in gr");
  }
  for (const auto& [d, c] : rule.certificate) {
    if (!(d == pattern)) add_term(rule.replacement, d, -c / rule.pattern_coefficient);
  }
  return rule;
}

OPolynomial monomial_poly(int n, std::initializer_list<std::pair<int, int>> factors, const Rational& c) {
  OPolynomial out;
  TamaDiagram one(n);
  out.emplace(one, c);
  for (const auto& [i, j] : factors) out = multiply(out, x_symbol(n, i, j));
  return out;
}

}  // namespace

std::string format_ama_ext(const AmaExtDiagram& d) {
  std::string chords = format_tama_diagram(d.chords);
  std::string out = "AE" + chords.substr(1) + " | black={";
  bool first = true;
  for (int k = 1; k <= d.chords.n(); ++k) {
    if (!(d.black >> (k - 1) & 1u)) continue;
    if (!first) out += ",";
    out += std::to_string(k);
    first = false;
  }
  return out + "}";
}

AmaExtDiagram parse_ama_ext(const std::string& text) {
  static const std::regex form(R"(^\s*AE(\[n=\d+\]:.*?)\s*\|\s*black=\{([\d,\s]*)\}\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, form)) throw AlgebraError("malformed AMA-exterior diagram: '" + text + "'");
  AmaExtDiagram d{parse_tama_diagram("T" + m[1].str()), 0};
  std::string list = m[2].str();
  static const std::regex number(R"(\d+)");
  for (auto it = std::sregex_iterator(list.begin(), list.end(), number); it != std::sregex_iterator(); ++it) {
    int k = std::stoi(it->str());
    if (k < 1 || k > d.chords.n()) throw AlgebraError("black vertex out of range");
    d.black = static_cast<std::uint16_t>(d.black | (1u << (k - 1)));
  }
  return d;
}

bool is_uncrossed(const TamaDiagram& d) {
  Chord p;
  Chord q;
  return !find_crossing(d, p, q);
}

long crossing_number(const TamaDiagram& d) {
  long total = 0;
  const auto chords = d.chords();
  for (std::size_t s = 0; s < chords.size(); ++s) {
    for (std::size_t t = s + 1; t < chords.size(); ++t) {
      if (chords_cross(chords[s].first, chords[t].first)) total += static_cast<long>(chords[s].second) * chords[t].second;
    }
  }
  return total;
}

std::vector<Chord> removable_chords(const TamaDiagram& d) {
  std::vector<Chord> out;
  for (const auto& [c, m] : d.chords()) {
    TamaDiagram rest = d;
    rest.add(c.i, c.j, -1);
    if (is_uncrossed(rest)) out.push_back(c);
  }
  return out;
}

bool is_uncrossable(const TamaDiagram& d) { return is_uncrossed(d) || !removable_chords(d).empty(); }

bool uncrossable_condition_n4(const TamaDiagram& d) {
  if (d.n() != 4) throw AlgebraError("condition applies to n = 4");
  return d.multiplicity(1, 3) <= 1 || d.multiplicity(2, 4) <= 1;
}

bool uncrossable_condition_n5(const TamaDiagram& d) {
  if (d.n() != 5) throw AlgebraError("condition applies to n = 5");
  int present = 0;
  for (int i = 1; i <= 5; ++i) present += d.multiplicity(i, rotate(i, 2)) > 0;
  if (present > 3) return false;
  for (int i = 1; i <= 5; ++i) {
    if (d.multiplicity(i, rotate(i, 2)) >= 2 &&
        d.multiplicity(rotate(i, 1), rotate(i, 3)) + d.multiplicity(rotate(i, 1), rotate(i, 4)) > 1) {
      return false;
    }
  }
  return true;
}

std::vector<TamaDiagram> enumerate_uncrossable(int n, int degree) {
  if (n != 4 && n != 5) throw AlgebraError("uncrossable enumeration supports n = 4 and n = 5");
  std::vector<TamaDiagram> out;
  for (auto& d : enumerate_tama_diagrams(n, degree)) {
    if (is_uncrossable(d)) out.push_back(std::move(d));
  }
  return out;
}

std::map<TamaDiagram, Rational> uncross_commutative(const TamaDiagram& l_part) {
  std::map<TamaDiagram, Expansion> memo;
  return uncross_rec(l_part, memo);
}

AmaExtExpansion expand_to_ama_ext(const TamaDiagram& d) {
  AmaExtExpansion out;
  std::map<TamaDiagram, Expansion> memo;
  expand_into(out, d, 1, memo);
  return out;
}

AmaExtExpansion expand_to_ama_ext(const OPolynomial& p) {
  AmaExtExpansion out;
  std::map<TamaDiagram, Expansion> memo;
  for (const auto& [d, c] : p) expand_into(out, d, c, memo);
  return out;
}

GrElement gr_image(const AlgebraContext& ctx, const AmaExtExpansion& e) {
  TermAccumulator acc;
  for (const auto& [d, c] : e) {
    GrElement term = gr_constant(ctx, c);
    for (const auto& [ch, m] : d.chords.chords()) term = term * gr_power(gr_L(ctx, ch.i, ch.j), static_cast<unsigned>(m));
    Monomial ext;
    ext.gamma = d.black;
    term = term * GrElement(ctx.n(), ext, 1);
    const GrElement product = term;
    for (const auto& [mono, v] : product.terms()) accumulate(acc, mono, v);
  }
  return GrElement::from_accumulator(ctx.n(), std::move(acc));
}

AmaExtDiagram witness_diagram(const TamaDiagram& d, Chord removed) {
  if (removed.i > removed.j) removed = removed.reversed();
  if (d.multiplicity(removed.i, removed.j) == 0) throw AlgebraError("chord to remove is not present");
  TamaDiagram rest = d;
  rest.add(removed.i, removed.j, -1);
  if (!is_uncrossed(rest)) throw AlgebraError("removing the chord does not leave an uncrossed diagram");
  return {rest, static_cast<std::uint16_t>((1u << (removed.i - 1)) | (1u << (removed.j - 1)))};
}

std::vector<RewriteRule> derive_rules(int n) {
  std::vector<RewriteRule> rules;
  if (n == 4) {
    rules.push_back(make_rule(4, "double-cross", 0, {1, 2, 3, 4}, {1, 2, 3, 4}, TamaDiagram(4, {{{1, 3}, 2}, {{2, 4}, 2}})));
    return rules;
  }
  if (n != 5) throw AlgebraError("rewrite rules are derived for n = 4 and n = 5");
  const TamaDiagram a_pattern(5, {{{1, 3}, 1}, {{2, 4}, 2}, {{3, 5}, 1}});
  const TamaDiagram star_pattern(5, {{{1, 3}, 1}, {{1, 4}, 1}, {{2, 4}, 1}, {{3, 5}, 1}});
  for (int r = 0; r < 5; ++r) {
    IndexQuad a = rotate_sorted({1, 2, 3, 4}, r);
    TamaDiagram pattern(5);
    pattern.add(a[0], a[2], 2);
    pattern.add(a[1], a[3], 2);
    rules.push_back(make_rule(5, "double-cross", r, a, a, pattern));
  }
  for (int r = 0; r < 5; ++r) {
    rules.push_back(make_rule(5, "A", r, rotate_sorted({1, 2, 3, 4}, r), rotate_sorted({2, 3, 4, 5}, r),
                              rotate_diagram(a_pattern, r)));
  }
  for (int r = 0; r < 5; ++r) {
    rules.push_back(make_rule(5, "star", r, rotate_sorted({1, 2, 3, 4}, r), rotate_sorted({1, 3, 4, 5}, r),
                              rotate_diagram(star_pattern, r)));
  }
  return rules;
}

std::vector<PrintedRelation> printed_relations() {
  std::vector<PrintedRelation> out;
  {
    OPolynomial base = add(add(monomial_poly(4, {{1, 2}, {3, 4}}, 1), monomial_poly(4, {{1, 3}, {4, 2}}, -1)),
                           monomial_poly(4, {{1, 4}, {3, 2}}, 1));
    out.push_back({"double-cross", multiply(base, base)});
  }
  {
    OPolynomial rel = monomial_poly(5, {{1, 3}, {2, 4}, {2, 4}, {3, 5}}, 1);
    for (const auto& term : {monomial_poly(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}}, 1),
                             monomial_poly(5, {{1, 2}, {2, 4}, {3, 4}, {3, 5}}, 1),
                             monomial_poly(5, {{1, 2}, {2, 5}, {3, 4}, {3, 4}}, -1),
                             monomial_poly(5, {{1, 3}, {2, 3}, {2, 4}, {4, 5}}, 1),
                             monomial_poly(5, {{1, 3}, {2, 4}, {2, 5}, {4, 3}}, 1),
                             monomial_poly(5, {{1, 4}, {2, 3}, {2, 3}, {4, 5}}, -1),
                             monomial_poly(5, {{1, 4}, {2, 3}, {2, 4}, {3, 5}}, 1),
                             monomial_poly(5, {{1, 4}, {2, 3}, {2, 5}, {4, 3}}, 1)}) {
      rel = add(rel, term);
    }
    out.push_back({"A", rel});
  }
  {
    OPolynomial rel = monomial_poly(5, {{1, 3}, {1, 4}, {2, 4}, {3, 5}}, 1);
    for (const auto& term : {monomial_poly(5, {{1, 2}, {1, 3}, {3, 4}, {4, 5}}, 1),
                             monomial_poly(5, {{1, 2}, {1, 4}, {3, 4}, {3, 5}}, 1),
                             monomial_poly(5, {{1, 2}, {1, 5}, {3, 4}, {3, 4}}, -1),
                             monomial_poly(5, {{1, 3}, {1, 3}, {2, 4}, {4, 5}}, 1),
                             monomial_poly(5, {{1, 3}, {1, 5}, {2, 4}, {4, 3}}, 1),
                             monomial_poly(5, {{1, 4}, {1, 3}, {2, 4}, {4, 5}}, -1),
                             monomial_poly(5, {{1, 4}, {2, 3}, {1, 4}, {3, 5}}, 1),
                             monomial_poly(5, {{1, 4}, {1, 5}, {2, 3}, {4, 3}}, 1)}) {
      rel = add(rel, term);
    }
    out.push_back({"star", rel});
  }
  return out;
}

Integer pattern_measure(const TamaDiagram& d, const std::vector<RewriteRule>& rules) {
  Integer total = 0;
  for (const auto& rule : rules) {
    Integer occurrences = 1;
    for (const auto& [c, p] : rule.pattern.chords()) {
      Integer b;
      mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(d.multiplicity(c.i, c.j)), static_cast<unsigned long>(p));
      occurrences *= b;
    }
    total += occurrences;
  }
  return total;
}

RewriteResult rewrite_to_uncrossable(const OPolynomial& u, int n, std::size_t max_steps) {
  return rewrite_to_uncrossable(u, derive_rules(n), max_steps);
}

RewriteResult rewrite_to_uncrossable(const OPolynomial& u, const std::vector<RewriteRule>& rules,
                                     std::size_t max_steps) {
  RewriteResult out;
  out.result = u;
  std::map<TamaDiagram, bool> uncrossable_cache;
  auto uncrossable = [&](const TamaDiagram& d) {
    auto it = uncrossable_cache.find(d);
    if (it == uncrossable_cache.end()) it = uncrossable_cache.emplace(d, is_uncrossable(d)).first;
    return it->second;
  };
  while (true) {
    auto target = std::find_if(out.result.begin(), out.result.end(), [&](const auto& t) { return !uncrossable(t.first); });
    if (target == out.result.end()) return out;
    if (out.steps == max_steps) throw AlgebraError("rewriting exceeded " + std::to_string(max_steps) + " steps");
    const TamaDiagram monomial = target->first;
    const Rational coef = target->second;
    auto rule = std::find_if(rules.begin(), rules.end(), [&](const RewriteRule& r) { return monomial.divisible_by(r.pattern); });
    if (rule == rules.end()) throw AlgebraError("no rule applies to " + format_tama_diagram(monomial));
    const TamaDiagram cofactor = monomial.quotient(rule->pattern);
    const Integer before = pattern_measure(monomial, rules);
    out.result.erase(target);
    for (const auto& [r, c] : rule->replacement) {
      const TamaDiagram next = cofactor * r;
      if (pattern_measure(next, rules) >= before) out.measure_decreasing = false;
      add_term(out.result, next, coef * c);
    }
    ++out.steps;
  }
}

BasisReport independence_and_spanning_report(int n, int degree) {
  if (n != 4 && n != 5) throw AlgebraError("basis report supports n = 4 and n = 5");
  const AlgebraContext ctx(n);
  const auto rules = derive_rules(n);
  BasisReport report;
  report.n = n;
  report.degree = degree;
  const auto monomials = enumerate_tama_diagrams(n, degree);
  report.monomials = monomials.size();
  std::vector<TamaDiagram> uncrossable;
  for (const auto& m : monomials) {
    const bool u = is_uncrossable(m);
    const bool closed = n == 4 ? uncrossable_condition_n4(m) : uncrossable_condition_n5(m);
    if (u != closed) report.classification_agrees = false;
    if (u) uncrossable.push_back(m);
  }
  report.uncrossable = uncrossable.size();

  for (const auto& m : monomials) {
    OPolynomial input;
    input.emplace(m, 1);
    RewriteResult r = rewrite_to_uncrossable(input, rules);
    if (!r.measure_decreasing) report.measure_decreasing = false;
    bool ok = std::all_of(r.result.begin(), r.result.end(), [](const auto& t) { return is_uncrossable(t.first); });
    if (ok && expand_to_ama_ext(input) == expand_to_ama_ext(r.result)) ++report.spanning_ok;
  }

  std::vector<AmaExtExpansion> supports;
  std::map<AmaExtDiagram, std::vector<std::size_t>> owners;
  for (std::size_t s = 0; s < uncrossable.size(); ++s) {
    supports.push_back(expand_to_ama_ext(uncrossable[s]));
    for (const auto& [key, c] : supports.back()) owners[key].push_back(s);
  }
  std::vector<long> crossings;
  for (const auto& d : uncrossable) crossings.push_back(crossing_number(d));
  for (std::size_t s = 0; s < uncrossable.size(); ++s) {
    const auto& d = uncrossable[s];
    if (d.degree() == 0) {
      ++report.witness_unique;
      ++report.witness_triangular;
      continue;
    }
    bool unique = false;
    bool triangular = false;
    for (const Chord& c : removable_chords(d)) {
      AmaExtDiagram w = witness_diagram(d, c);
      if (!supports[s].count(w)) continue;
      const auto& holders = owners[w];
      if (holders.size() == 1) unique = true;
      if (std::none_of(holders.begin(), holders.end(), [&](std::size_t t) { return t != s && crossings[t] <= crossings[s]; })) {
        triangular = true;
      }
      if (unique && triangular) break;
    }
    if (unique) ++report.witness_unique;
    if (triangular) ++report.witness_triangular;
  }

  std::unordered_map<Monomial, std::size_t, MonomialHash> columns;
  SparseEchelon echelon;
  for (const auto& d : uncrossable) {
    SparseVector v;
    const GrElement image = gr_image(ctx, d);
    for (const auto& [m, c] : image.terms()) {
      auto [it, inserted] = columns.try_emplace(m, columns.size());
      v.emplace(it->second, c);
    }
    echelon.insert(v);
  }
  report.independent_rank = echelon.rank();
  return report;
}

}  // namespace tama
