#include "tama/ama.hpp"

#include <algorithm>
#include <bit>
#include <regex>
#include <set>

namespace tama {

namespace {

WCElement L_or_zero(const AlgebraContext& ctx, int i, int j) {
  if (i == j) return constant(ctx, 0);
  return L_of_chord(ctx, {i, j});
}

int delta(int a, int b) { return a == b ? 1 : 0; }

/// [L_ij, L_kl] = d_jk L_il + d_il L_jk - d_jl L_ik - d_ik L_jl
std::vector<std::pair<int, Chord>> chord_commutator(Chord a, Chord b) {
  std::vector<std::pair<int, Chord>> out;
  const int i = a.i, j = a.j, k = b.i, l = b.j;
  if (delta(j, k)) out.push_back({1, {i, l}});
  if (delta(i, l)) out.push_back({1, {j, k}});
  if (delta(j, l)) out.push_back({-1, {i, k}});
  if (delta(i, k)) out.push_back({-1, {j, l}});
  return out;
}

void add_scaled(DiagramExpansion& into, const DiagramExpansion& from, const Rational& c) {
  for (const auto& [d, v] : from) {
    auto [it, inserted] = into.try_emplace(d, c * v);
    if (!inserted) {
      it->second += c * v;
      if (it->second == 0) into.erase(it);
    }
  }
}

class Rewriter {
 public:
  explicit Rewriter(int n) : n_(n) {}

  DiagramExpansion expand(const ChordWord& word) {
    if (auto it = memo_.find(word); it != memo_.end()) return it->second;
    DiagramExpansion result = compute(word);
    memo_.emplace(word, result);
    return result;
  }

 private:
  DiagramExpansion compute(const ChordWord& word) {
    DiagramExpansion out;
    // orientation: L_ji = -L_ij, L_ii = 0
    ChordWord w = word;
    int sign = 1;
    for (auto& c : w) {
      if (c.i == c.j) return out;
      if (c.i > c.j) {
        c = c.reversed();
        sign = -sign;
      }
    }
    if (sign < 0) {
      add_scaled(out, expand(w), -1);
      return out;
    }
    // sort: AB = BA + [A, B]
    for (std::size_t s = 0; s + 1 < w.size(); ++s) {
      if (w[s + 1] < w[s]) {
        ChordWord swapped = w;
        std::swap(swapped[s], swapped[s + 1]);
        add_scaled(out, expand(swapped), 1);
        add_commutator_terms(out, w, s);
        return out;
      }
    }
    // smallest crossing pair
    for (std::size_t s = 0; s < w.size(); ++s) {
      for (std::size_t t = s + 1; t < w.size(); ++t) {
        const Chord a = w[s];
        const Chord b = w[t];
        if (a.i < b.i && b.i < a.j && a.j < b.j) {
          resolve_crossing(out, w, s, t);
          return out;
        }
      }
    }
    out.emplace(Diagram(n_, w), 1);
    return out;
  }

  /// Adds L of the word with positions (s, s+1) replaced by their commutator.
  void add_commutator_terms(DiagramExpansion& out, const ChordWord& w, std::size_t s) {
    for (const auto& [coef, c] : chord_commutator(w[s], w[s + 1])) {
      ChordWord shorter(w.begin(), w.begin() + static_cast<long>(s));
      shorter.push_back(c);
      shorter.insert(shorter.end(), w.begin() + static_cast<long>(s) + 2, w.end());
      add_scaled(out, expand(shorter), coef);
    }
  }

  void resolve_crossing(DiagramExpansion& out, ChordWord w, std::size_t s, std::size_t t) {
    // move chord t leftwards next to chord s, collecting commutator terms
    for (std::size_t r = t; r > s + 1; --r) {
      add_commutator_terms(out, w, r - 1);
      std::swap(w[r - 1], w[r]);
    }
    const int i = w[s].i, k = w[s].j, j = w[s + 1].i, l = w[s + 1].j;
    for (auto [first, second] : {std::pair{Chord{i, j}, Chord{k, l}}, std::pair{Chord{i, l}, Chord{j, k}}}) {
      ChordWord next = w;
      next[s] = first;
      next[s + 1] = second;
      add_scaled(out, expand(next), 1);
    }
  }

  int n_;
  std::map<ChordWord, DiagramExpansion> memo_;
};

void enumerate_rec(const std::vector<Chord>& pool, std::size_t start, int remaining, std::vector<Chord>& cur,
                   int n, std::vector<Diagram>& out) {
  if (remaining == 0) {
    out.emplace_back(n, cur);
    return;
  }
  for (std::size_t c = start; c < pool.size(); ++c) {
    cur.push_back(pool[c]);
    enumerate_rec(pool, c, remaining - 1, cur, n, out);
    cur.pop_back();
  }
}

}  // namespace

Diagram::Diagram(int n, std::vector<Chord> chords) : n_(n), chords_(std::move(chords)) {
  for (std::size_t s = 0; s < chords_.size(); ++s) {
    const auto& c = chords_[s];
    if (c.i < 1 || c.i > n || c.j < 1 || c.j > n) throw AlgebraError("chord index out of range");
    if (c.i == c.j) throw AlgebraError("degenerate chord (i,i)");
    if (s > 0 && chords_[s] < chords_[s - 1]) throw AlgebraError("diagram chords must be sorted");
  }
}

std::vector<int> Diagram::initial() const {
  std::vector<int> out;
  for (const auto& c : chords_) out.push_back(c.i);
  return out;
}

std::vector<int> Diagram::terminal() const {
  std::vector<int> out;
  for (const auto& c : chords_) out.push_back(c.j);
  return out;
}

bool diagram_less(const Diagram& a, const Diagram& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.chords() < b.chords();
}

std::string format_diagram(const Diagram& d) {
  std::string out = "D[n=" + std::to_string(d.n()) + "]:";
  if (d.chords().empty()) return out;
  out += ' ';
  for (const auto& c : d.chords()) out += "(" + std::to_string(c.i) + "," + std::to_string(c.j) + ")";
  return out;
}

Diagram parse_diagram(const std::string& text) {
  static const std::regex head(R"(^\s*D\[n=(\d+)\]:\s*(.*?)\s*$)");
  static const std::regex chord(R"(\(\s*(\d+)\s*,\s*(\d+)\s*\))");
  std::smatch m;
  if (!std::regex_match(text, m, head)) throw AlgebraError("malformed diagram text: '" + text + "'");
  int n = std::stoi(m[1].str());
  std::string body = m[2].str();
  std::vector<Chord> chords;
  std::size_t consumed = 0;
  for (auto it = std::sregex_iterator(body.begin(), body.end(), chord); it != std::sregex_iterator(); ++it) {
    if (static_cast<std::size_t>(it->position()) != consumed) {
      if (body.find_first_not_of(" \t", consumed) < static_cast<std::size_t>(it->position())) {
        throw AlgebraError("malformed diagram chords: '" + body + "'");
      }
    }
    chords.push_back({std::stoi((*it)[1].str()), std::stoi((*it)[2].str())});
    consumed = static_cast<std::size_t>(it->position() + it->length());
  }
  if (body.find_first_not_of(" \t", consumed) != std::string::npos) {
    throw AlgebraError("malformed diagram chords: '" + body + "'");
  }
  return Diagram(n, std::move(chords));
}

WCElement L_of_chord(const AlgebraContext& ctx, Chord c) {
  if (c.i == c.j) throw AlgebraError("L_ij needs i != j");
  return gen_x(ctx, c.i) * gen_y(ctx, c.j) - gen_x(ctx, c.j) * gen_y(ctx, c.i);
}

WCElement L_of_word(const AlgebraContext& ctx, const ChordWord& w) {
  WCElement out = constant(ctx, 1);
  for (const auto& c : w) out = out * L_of_chord(ctx, c);
  return out;
}

WCElement L_of_diagram(const AlgebraContext& ctx, const Diagram& d) { return L_of_word(ctx, d.chords()); }

Monomial monomial_of_diagram(const Diagram& d) {
  Monomial m;
  for (const auto& c : d.chords()) {
    ++m.alpha[c.i - 1];
    ++m.beta[c.j - 1];
  }
  return m;
}

bool has_crossing(const std::vector<Chord>& chords) {
  for (const auto& s : chords) {
    for (const auto& t : chords) {
      if (s.i < t.i && t.i < s.j && t.j > s.j) return true;
    }
  }
  return false;
}

bool is_noncrossing(const Diagram& d) {
  for (const auto& c : d.chords()) {
    if (!c.positive()) return false;
  }
  return !has_crossing(d.chords());
}

WCElement crossing_relation_element(const AlgebraContext& ctx, int i, int j, int k, int l) {
  WCElement quadratic = L_or_zero(ctx, i, j) * L_or_zero(ctx, k, l) + L_or_zero(ctx, i, k) * L_or_zero(ctx, l, j) +
                        L_or_zero(ctx, i, l) * L_or_zero(ctx, j, k);
  WCElement linear = constant(ctx, 0);
  if (i == j) linear += L_or_zero(ctx, k, l);
  if (i == k) linear += L_or_zero(ctx, l, j);
  if (i == l) linear += L_or_zero(ctx, j, k);
  return quadratic - linear;
}

WCElement crossing_relation_printed(const AlgebraContext& ctx, int i, int j, int k, int l) {
  WCElement quadratic = L_or_zero(ctx, i, j) * L_or_zero(ctx, k, l) + L_or_zero(ctx, i, k) * L_or_zero(ctx, l, j) +
                        L_or_zero(ctx, i, l) * L_or_zero(ctx, j, k);
  WCElement linear = constant(ctx, 0);
  if (k == l) linear += L_or_zero(ctx, i, j);
  if (l == j) linear += L_or_zero(ctx, i, k);
  if (j == k) linear += L_or_zero(ctx, i, l);
  return quadratic - linear;
}

DiagramExpansion uncross_expansion(int n, const ChordWord& word) {
  for (const auto& c : word) {
    if (c.i < 1 || c.i > n || c.j < 1 || c.j > n) throw AlgebraError("chord index out of range");
  }
  Rewriter rw(n);
  return rw.expand(word);
}

UncrossResult uncross_to_basis(const AlgebraContext& ctx, const ChordWord& word) {
  UncrossResult result;
  result.expansion = uncross_expansion(ctx.n(), word);
  bool degenerate = std::any_of(word.begin(), word.end(), [](const Chord& c) { return c.i == c.j; });
  WCElement target = degenerate ? constant(ctx, 0) : L_of_word(ctx, word);
  for (const auto& [d, c] : result.expansion) target -= c * L_of_diagram(ctx, d);
  result.remainder = std::move(target);
  return result;
}

std::vector<Diagram> enumerate_diagrams(int n, int p, bool forward_only) {
  std::vector<Chord> pool;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i != j && (!forward_only || i < j)) pool.push_back({i, j});
    }
  }
  std::vector<Diagram> out;
  std::vector<Chord> cur;
  enumerate_rec(pool, 0, p, cur, n, out);
  return out;
}

std::vector<Diagram> enumerate_noncrossing(int n, int p) {
  std::vector<Diagram> out;
  for (auto& d : enumerate_diagrams(n, p, true)) {
    if (is_noncrossing(d)) out.push_back(std::move(d));
  }
  return out;
}

bool check_injectivity(int n, int p) {
  std::set<Monomial, MonomialLess> keys;
  for (const auto& d : enumerate_noncrossing(n, p)) {
    if (!keys.insert(monomial_of_diagram(d)).second) return false;
  }
  return true;
}

bool check_triangularity(const AlgebraContext& ctx, const Diagram& d) {
  if (!is_noncrossing(d)) throw AlgebraError("triangularity applies to non-crossing diagrams");
  const std::size_t p = d.size();
  GrElement top = p == 0 ? gr_constant(ctx, 1) : leading_part(L_of_diagram(ctx, d));
  GrElement expected(ctx.n());
  for (std::uint32_t s = 0; s < (1u << p); ++s) {
    std::vector<Chord> chords = d.chords();
    for (std::size_t b = 0; b < p; ++b) {
      if (s >> b & 1u) chords[b] = chords[b].reversed();
    }
    std::sort(chords.begin(), chords.end());
    Diagram ds(d.n(), chords);
    if (s != 0 && !diagram_less(d, ds)) return false;
    expected += GrElement(ctx.n(), monomial_of_diagram(ds), (std::popcount(s) & 1) ? -1 : 1);
  }
  return top == expected && top.coefficient(monomial_of_diagram(d)) == 1;
}

}  // namespace tama
