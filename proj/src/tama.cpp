#include "tama/tama.hpp"

#include <algorithm>
#include <tuple>
#include <unordered_map>

#include "tama/linalg.hpp"
#include "tama/pairing.hpp"

namespace tama {

namespace {

void check_strictly_increasing(const AlgebraContext& ctx, std::span<const int> a) {
  if (a.size() < 2 || static_cast<int>(a.size()) > ctx.n()) {
    throw AlgebraError("index sequence length must lie in 2..n");
  }
  for (std::size_t s = 0; s < a.size(); ++s) {
    ctx.check_index(a[s]);
    if (s > 0 && a[s] <= a[s - 1]) throw AlgebraError("index sequence must be strictly increasing");
  }
}

void check_distinct(std::span<const int> a, const char* what) {
  for (std::size_t s = 0; s < a.size(); ++s) {
    for (std::size_t t = s + 1; t < a.size(); ++t) {
      if (a[s] == a[t]) throw AlgebraError(std::string(what) + " has a repeated index");
    }
  }
}

/// Sign of the permutation sorting a sequence of distinct entries.
int sorting_sign(std::span<const int> a) {
  int inversions = 0;
  for (std::size_t s = 0; s < a.size(); ++s) {
    for (std::size_t t = s + 1; t < a.size(); ++t) inversions += a[s] > a[t];
  }
  return (inversions & 1) ? -1 : 1;
}

GrElement gr_o2(const AlgebraContext& ctx, int i, int j) {
  if (i == j) return GrElement(ctx.n());
  if (i > j) return -gr_O(ctx, j, i);
  return gr_O(ctx, i, j);
}

/// Column ids for monomials, assigned in order of first appearance.
class MonomialColumns {
 public:
  SparseVector vector_of(const std::vector<std::pair<Monomial, Rational>>& terms) {
    SparseVector v;
    for (const auto& [m, c] : terms) {
      auto [it, inserted] = ids_.try_emplace(m, ids_.size());
      v.emplace(it->second, c);
    }
    return v;
  }
  SparseVector lookup(const std::vector<std::pair<Monomial, Rational>>& terms, bool& unknown) const {
    SparseVector v;
    unknown = false;
    for (const auto& [m, c] : terms) {
      auto it = ids_.find(m);
      if (it == ids_.end()) {
        unknown = true;
        return v;
      }
      v.emplace(it->second, c);
    }
    return v;
  }

 private:
  std::unordered_map<Monomial, std::size_t, MonomialHash> ids_;
};

GramRank gram_of(const std::vector<GrElement>& candidates) {
  MonomialColumns columns;
  SparseEchelon echelon;
  std::vector<const GrElement*> basis;
  for (const auto& g : candidates) {
    if (g.is_zero()) continue;
    if (echelon.insert(columns.vector_of(g.terms()))) basis.push_back(&g);
  }
  RationalMatrix gram(basis.size(), basis.size());
  for (std::size_t r = 0; r < basis.size(); ++r) {
    for (std::size_t c = 0; c < basis.size(); ++c) gram(r, c) = beta_pairing(*basis[r], *basis[c]);
  }
  return {basis.size(), bareiss_rank(gram)};
}

std::size_t binomial_count(std::size_t n, std::size_t k) {
  std::size_t out = 1;
  for (std::size_t t = 1; t <= k; ++t) out = out * (n - k + t) / t;
  return out;
}

std::size_t pow3(int d) {
  std::size_t out = 1;
  for (int t = 0; t < d; ++t) out *= 3;
  return out;
}

/// X_{s0 s1} X_{s2 s3} + X_{s0 s2} X_{s3 s1} + X_{s0 s3} X_{s1 s2}.
OPolynomial x4_symbol(int n, const IndexQuad& s) {
  OPolynomial out = multiply(x_symbol(n, s[0], s[1]), x_symbol(n, s[2], s[3]));
  out = add(out, multiply(x_symbol(n, s[0], s[2]), x_symbol(n, s[3], s[1])));
  return add(out, multiply(x_symbol(n, s[0], s[3]), x_symbol(n, s[1], s[2])));
}

std::pair<IndexQuad, IndexQuad> swap_slots(IndexQuad a, IndexQuad b, unsigned mask) {
  for (int t = 0; t < 4; ++t) {
    if (mask >> t & 1u) std::swap(a[t], b[t]);
  }
  return {a, b};
}

/// Unordered pairs {x < y} of values common to both sequences.
std::vector<std::pair<int, int>> common_pairs(const IndexQuad& a, const IndexQuad& b) {
  std::vector<int> common;
  for (int v : a) {
    if (std::find(b.begin(), b.end(), v) != b.end() && std::find(common.begin(), common.end(), v) == common.end()) {
      common.push_back(v);
    }
  }
  std::sort(common.begin(), common.end());
  std::vector<std::pair<int, int>> out;
  for (std::size_t s = 0; s < common.size(); ++s) {
    for (std::size_t t = s + 1; t < common.size(); ++t) out.emplace_back(common[s], common[t]);
  }
  return out;
}

/// Slot positions left after removing the first occurrences of x and y.
std::array<int, 2> residual_slots(const IndexQuad& s, int x, int y) {
  bool used_x = false;
  bool used_y = false;
  std::array<int, 2> out{};
  int k = 0;
  for (int t = 0; t < 4; ++t) {
    if (!used_x && s[t] == x) {
      used_x = true;
    } else if (!used_y && s[t] == y) {
      used_y = true;
    } else {
      if (k == 2) throw AlgebraError("internal: bad residual slots");
      out[k++] = t;
    }
  }
  if (k != 2) throw AlgebraError("internal: bad residual slots");
  return out;
}

}  // namespace

OspGenerators osp_generators(const AlgebraContext& ctx) {
  OspGenerators g{WCElement(ctx.n()), WCElement(ctx.n())};
  for (int j = 1; j <= ctx.n(); ++j) {
    g.dirac += gen_y(ctx, j) * gen_e(ctx, j);
    g.coord += gen_x(ctx, j) * gen_e(ctx, j);
  }
  return g;
}

WCElement ad_p(const AlgebraContext& ctx, const WCElement& a) {
  if (parity(a) == Parity::inhomogeneous) throw AlgebraError("ad_p needs a parity-homogeneous element");
  const auto g = osp_generators(ctx);
  if (a.is_zero()) return a;
  WCElement inner = graded_commutator(g.coord, a);
  if (inner.is_zero()) return a;
  return a - Rational(1, 2) * graded_commutator(g.dirac, inner);
}

WCElement ad_p_literal(const AlgebraContext& ctx, const WCElement& a) {
  const auto g = osp_generators(ctx);
  WCElement p = constant(ctx, 1) - Rational(1, 2) * (g.dirac * g.coord);
  return commutator(p, a);
}

WCElement o2(const AlgebraContext& ctx, int i, int j) {
  ctx.check_index(i);
  ctx.check_index(j);
  if (i == j) return WCElement(ctx.n());
  return gen_x(ctx, i) * gen_y(ctx, j) - gen_x(ctx, j) * gen_y(ctx, i) +
         Rational(1, 2) * (gen_e(ctx, i) * gen_e(ctx, j));
}

WCElement o_symmetry(const AlgebraContext& ctx, std::span<const int> a) {
  check_strictly_increasing(ctx, a);
  return Rational(-1, 2) * ad_p(ctx, clifford_word(ctx, a));
}

WCElement o_symmetry_closed_form(const AlgebraContext& ctx, std::span<const int> a) {
  check_strictly_increasing(ctx, a);
  const WCElement ea = clifford_word(ctx, a);
  WCElement out = make_rational(static_cast<long>(a.size()) - 1, 2) * ea;
  for (std::size_t p = 0; p < a.size(); ++p) {
    for (std::size_t q = p + 1; q < a.size(); ++q) {
      const int pair[2] = {a[p], a[q]};
      out -= L_of_chord(ctx, {a[p], a[q]}) * clifford_word(ctx, pair) * ea;
    }
  }
  return out;
}

WCElement o_signed(const AlgebraContext& ctx, std::span<const int> a) {
  check_distinct(a, "index sequence");
  std::vector<int> sorted(a.begin(), a.end());
  std::sort(sorted.begin(), sorted.end());
  WCElement out = o_symmetry(ctx, sorted);
  if (sorting_sign(a) < 0) out *= Rational(-1);
  return out;
}

WCElement o4_of_sequence(const AlgebraContext& ctx, const IndexQuad& s) {
  return o2(ctx, s[0], s[1]) * o2(ctx, s[2], s[3]) + o2(ctx, s[0], s[2]) * o2(ctx, s[3], s[1]) +
         o2(ctx, s[0], s[3]) * o2(ctx, s[1], s[2]);
}

RecursionFit higher_recursion_check(const AlgebraContext& ctx, std::span<const int> a) {
  check_strictly_increasing(ctx, a);
  const std::size_t k = a.size();
  if (k < 4) throw AlgebraError("the recursion needs k >= 4");
  WCElement target = o_symmetry(ctx, a);
  WCElement sum(ctx.n());
  for (std::size_t p = 0; p < k; ++p) {
    for (std::size_t q = p + 1; q < k; ++q) {
      std::vector<int> rest;
      for (std::size_t t = 0; t < k; ++t) {
        if (t != p && t != q) rest.push_back(a[t]);
      }
      WCElement inner = rest.size() == 2 ? o2(ctx, rest[0], rest[1]) : o_symmetry(ctx, rest);
      WCElement term = o2(ctx, a[p], a[q]) * inner;
      // 1-based p + q + 1 has the parity of 0-based p + q + 1
      if ((p + q + 1) % 2 == 1) term *= Rational(-1);
      sum += term;
    }
  }
  RecursionFit fit;
  if (sum.is_zero() || target.is_zero()) {
    fit.exists = sum.is_zero() && target.is_zero();
    fit.scalar = 0;
    fit.residual_terms = target.size();
    return fit;
  }
  const auto& [m, c] = target.terms().front();
  Rational denom = sum.coefficient(m);
  if (denom == 0) {
    fit.residual_terms = target.size();
    return fit;
  }
  fit.scalar = c / denom;
  WCElement residual = target - fit.scalar * sum;
  fit.residual_terms = residual.size();
  fit.exists = residual.is_zero();
  return fit;
}

WCElement comm_2_3(const AlgebraContext& ctx, int i, int j, int p, int q, int r) {
  if (i == j) throw AlgebraError("the 2-index set needs distinct entries");
  const int triple[3] = {p, q, r};
  check_distinct(triple, "the 3-index set");
  return commutator(o2(ctx, i, j), o_signed(ctx, triple));
}

WCElement comm_2_3_expected(const AlgebraContext& ctx, int i, int j, int p, int q, int r) {
  if (i == j) throw AlgebraError("the 2-index set needs distinct entries");
  const std::array<int, 3> triple = {p, q, r};
  check_distinct(triple, "the 3-index set");
  auto position = [&](int v) -> int {
    auto it = std::find(triple.begin(), triple.end(), v);
    return it == triple.end() ? -1 : static_cast<int>(it - triple.begin());
  };
  const int pi = position(i);
  const int pj = position(j);
  if ((pi >= 0) == (pj >= 0)) return WCElement(ctx.n());
  const int shared_pos = pj >= 0 ? pj : pi;
  const int other = pj >= 0 ? i : j;
  std::vector<int> seq = {other};
  for (int t = 0; t < 3; ++t) {
    if (t != shared_pos) seq.push_back(triple[static_cast<std::size_t>(t)]);
  }
  WCElement out = o_signed(ctx, seq);
  int sign = (shared_pos % 2 == 0) ? 1 : -1;
  if (pj < 0) sign = -sign;
  if (sign < 0) out *= Rational(-1);
  return out;
}

std::pair<IndexQuad, int> align_to(const IndexQuad& a, const IndexQuad& b) {
  IndexQuad out{};
  std::array<bool, 4> filled{};
  std::vector<int> rest;
  for (int v : b) {
    auto it = std::find(a.begin(), a.end(), v);
    if (it == a.end()) {
      rest.push_back(v);
    } else {
      auto slot = static_cast<std::size_t>(it - a.begin());
      out[slot] = v;
      filled[slot] = true;
    }
  }
  std::size_t k = 0;
  for (std::size_t t = 0; t < 4; ++t) {
    if (!filled[t]) out[t] = rest[k++];
  }
  // the reordering sign: relative to sorted order, inversions of b and out differ by it
  return {out, sorting_sign(b) * sorting_sign(out)};
}

WCElement tableau_relation(const AlgebraContext& ctx, const IndexQuad& a, const IndexQuad& b_in,
                           TableauMode mode) {
  check_distinct(a, "A");
  check_distinct(b_in, "B");
  for (int v : a) ctx.check_index(v);
  for (int v : b_in) ctx.check_index(v);
  IndexQuad b = b_in;
  int sign = 1;
  if (mode == TableauMode::aligned) std::tie(b, sign) = align_to(a, b_in);
  std::map<IndexQuad, WCElement> o4_cache;
  auto o4 = [&](const IndexQuad& s) -> const WCElement& {
    auto it = o4_cache.find(s);
    if (it == o4_cache.end()) it = o4_cache.emplace(s, Rational(2) * o4_of_sequence(ctx, s)).first;
    return it->second;
  };
  const auto pairs = common_pairs(a, b);
  TermAccumulator acc;
  auto add_product = [&](const WCElement& u, const WCElement& v) {
    const WCElement prod = u * v;
    for (const auto& [m, c] : prod.terms()) accumulate(acc, m, sign * c);
  };
  for (unsigned mask = 0; mask < 16; ++mask) {
    const auto [sa, sb] = swap_slots(a, b, mask);
    add_product(o4(sa), o4(sb));
    for (const auto& [x, y] : pairs) {
      const auto ra = residual_slots(a, x, y);
      const auto rb = residual_slots(b, x, y);
      add_product(o2(ctx, sa[ra[0]], sa[ra[1]]), o2(ctx, sb[rb[0]], sb[rb[1]]));
    }
  }
  if (a == b_in) accumulate(acc, Monomial{}, -12);
  return WCElement::from_accumulator(ctx.n(), std::move(acc));
}

WCElement tableau_intermediate(const AlgebraContext& ctx, const IndexQuad& a, const IndexQuad& b_in) {
  check_distinct(a, "A");
  check_distinct(b_in, "B");
  const IndexQuad b = align_to(a, b_in).first;
  const auto pairs = common_pairs(a, b);
  TermAccumulator acc;
  auto add_product = [&](const WCElement& u, const WCElement& v) {
    const WCElement prod = u * v;
    for (const auto& [m, c] : prod.terms()) accumulate(acc, m, c);
  };
  for (unsigned mask = 0; mask < 16; ++mask) {
    const auto [sa, sb] = swap_slots(a, b, mask);
    add_product(Rational(2) * o4_of_sequence(ctx, sa), clifford_word(ctx, sb));
    for (const auto& [x, y] : pairs) {
      const auto ra = residual_slots(a, x, y);
      const auto rb = residual_slots(b, x, y);
      const int tail[2] = {sb[rb[0]], sb[rb[1]]};
      add_product(o2(ctx, sa[ra[0]], sa[ra[1]]), clifford_word(ctx, tail));
    }
  }
  return WCElement::from_accumulator(ctx.n(), std::move(acc));
}

OPolynomial tableau_top_symbol(int n, const IndexQuad& a, const IndexQuad& b_in) {
  check_distinct(a, "A");
  check_distinct(b_in, "B");
  const IndexQuad b = align_to(a, b_in).first;
  OPolynomial out;
  for (unsigned mask = 0; mask < 16; ++mask) {
    const auto [sa, sb] = swap_slots(a, b, mask);
    out = add(out, multiply(x4_symbol(n, sa), x4_symbol(n, sb)), 4);
  }
  return out;
}

bool centraliser_check(const AlgebraContext& ctx, const WCElement& u) {
  if (parity(u) == Parity::inhomogeneous) throw AlgebraError("centraliser_check needs a parity-homogeneous element");
  const auto g = osp_generators(ctx);
  return graded_commutator(u, g.dirac).is_zero() && graded_commutator(u, g.coord).is_zero();
}

GramRank gram_rank_degree2(const AlgebraContext& ctx, int i, int j, int k, int l) {
  for (int v : {i, j, k, l}) ctx.check_index(v);
  std::vector<GrElement> products = {gr_o2(ctx, i, j) * gr_o2(ctx, k, l), gr_o2(ctx, i, k) * gr_o2(ctx, j, l),
                                     gr_o2(ctx, i, l) * gr_o2(ctx, j, k)};
  return gram_of(products);
}

GramRank gram_rank_degree3(const AlgebraContext& ctx, const std::array<int, 6>& s) {
  for (int v : s) ctx.check_index(v);
  std::vector<GrElement> products;
  // perfect matchings: slot 0 pairs with b, then the smallest free slot pairs with d
  for (int b = 1; b < 6; ++b) {
    std::vector<int> rest;
    for (int t = 1; t < 6; ++t) {
      if (t != b) rest.push_back(t);
    }
    for (int d = 1; d < 4; ++d) {
      std::vector<int> last;
      for (int t = 1; t < 4; ++t) {
        if (t != d) last.push_back(rest[static_cast<std::size_t>(t)]);
      }
      products.push_back(gr_o2(ctx, s[0], s[b]) * gr_o2(ctx, s[rest[0]], s[rest[d]]) *
                         gr_o2(ctx, s[last[0]], s[last[1]]));
    }
  }
  return gram_of(products);
}

std::size_t kernel_probe_degree(int n, int d, std::size_t cap) {
  if (d < 0) throw AlgebraError("degree must be nonnegative");
  AlgebraContext ctx(n);
  const std::size_t count = binomial_count(static_cast<std::size_t>(chord_count(n) + d - 1), static_cast<std::size_t>(d));
  if (count * pow3(d) > cap) {
    throw ResourceError("kernel probe (n=" + std::to_string(n) + ", d=" + std::to_string(d) + ") projects " +
                        std::to_string(count * pow3(d)) + " monomials, above the cap of " + std::to_string(cap));
  }
  MonomialColumns columns;
  SparseEchelon echelon;
  const auto diagrams = enumerate_tama_diagrams(n, d);
  for (const auto& D : diagrams) echelon.insert(columns.vector_of(gr_image(ctx, D).terms()));
  return diagrams.size() - echelon.rank();
}

std::size_t relation_span_degree4(int n) {
  std::vector<IndexQuad> subsets;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        for (int d = c + 1; d <= n; ++d) subsets.push_back({a, b, c, d});
  std::map<TamaDiagram, std::size_t> ids;
  SparseEchelon echelon;
  for (std::size_t s = 0; s < subsets.size(); ++s) {
    for (std::size_t t = s; t < subsets.size(); ++t) {
      SparseVector v;
      for (const auto& [D, c] : tableau_top_symbol(n, subsets[s], subsets[t])) {
        auto [it, inserted] = ids.try_emplace(D, ids.size());
        v.emplace(it->second, c);
      }
      echelon.insert(v);
    }
  }
  return echelon.rank();
}

bool in_pbw_span(const AlgebraContext& ctx, const WCElement& u, int max_degree, std::size_t cap) {
  const int chords = chord_count(ctx.n());
  std::size_t projected = 0;
  for (int m = 0; m <= max_degree; ++m) {
    projected += binomial_count(static_cast<std::size_t>(chords + m - 1), static_cast<std::size_t>(m)) * pow3(m);
  }
  if (projected > cap) throw ResourceError("PBW span check projects " + std::to_string(projected) + " monomials");
  std::vector<WCElement> gens;
  for (int c = 0; c < chords; ++c) {
    Chord ch = chord_at(ctx.n(), c);
    gens.push_back(o2(ctx, ch.i, ch.j));
  }
  MonomialColumns columns;
  SparseEchelon echelon;
  // breadth-first over nondecreasing generator sequences
  std::vector<std::pair<int, WCElement>> layer = {{0, constant(ctx, 1)}};
  echelon.insert(columns.vector_of(layer.front().second.terms()));
  for (int m = 1; m <= max_degree; ++m) {
    std::vector<std::pair<int, WCElement>> next;
    for (const auto& [last, elem] : layer) {
      for (int c = last; c < chords; ++c) {
        WCElement prod = elem * gens[static_cast<std::size_t>(c)];
        echelon.insert(columns.vector_of(prod.terms()));
        next.emplace_back(c, std::move(prod));
      }
    }
    layer = std::move(next);
  }
  bool unknown = false;
  SparseVector v = columns.lookup(u.terms(), unknown);
  return !unknown && echelon.contains(v);
}

}  // namespace tama
