#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "tama/algebra.hpp"
#include "tama/gr.hpp"

namespace tama {

/// Directed chord i -> j on the n-gon. Ordered lexicographically.
struct Chord {
  int i = 0;
  int j = 0;

  bool positive() const { return i < j; }
  Chord reversed() const { return {j, i}; }
  auto operator<=>(const Chord&) const = default;
};

/// Chords in arbitrary order; L of a word is the ordered product.
using ChordWord = std::vector<Chord>;

/// Lexicographically sorted chord sequence (c_1 <= c_2 <= ...).
class Diagram {
 public:
  Diagram() = default;
  /// Throws AlgebraError if the chords are unsorted, degenerate or out of range.
  Diagram(int n, std::vector<Chord> chords);

  int n() const { return n_; }
  const std::vector<Chord>& chords() const { return chords_; }
  std::size_t size() const { return chords_.size(); }
  std::vector<int> initial() const;
  std::vector<int> terminal() const;

  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  int n_ = 0;
  std::vector<Chord> chords_;
};

/// Diagram order: shorter first, then lexicographic on chords.
bool diagram_less(const Diagram& a, const Diagram& b);
struct DiagramLess {
  bool operator()(const Diagram& a, const Diagram& b) const { return diagram_less(a, b); }
};

using DiagramExpansion = std::map<Diagram, Rational, DiagramLess>;

/// `D[n=6]: (1,3)(1,4)(2,3)(3,5)`
std::string format_diagram(const Diagram& d);
Diagram parse_diagram(const std::string& text);

WCElement L_of_chord(const AlgebraContext& ctx, Chord c);
WCElement L_of_diagram(const AlgebraContext& ctx, const Diagram& d);
WCElement L_of_word(const AlgebraContext& ctx, const ChordWord& w);

/// m_D = x^{alpha(D)} y^{beta(D)} as a Weyl monomial.
Monomial monomial_of_diagram(const Diagram& d);

/// True when some pair satisfies i_s < i_t < j_s < j_t.
bool has_crossing(const std::vector<Chord>& chords);
/// Every chord forward and no crossing pair.
bool is_noncrossing(const Diagram& d);

/// X_ij X_kl + X_ik X_lj + X_il X_jk minus its first-order part
/// delta_ij X_kl + delta_ik X_lj + delta_il X_jk, evaluated with X -> L.
WCElement crossing_relation_element(const AlgebraContext& ctx, int i, int j, int k, int l);

/// The same left side minus X_ij delta_kl + X_ik delta_lj + X_il delta_jk,
/// the placement of the Kronecker deltas as usually printed.
WCElement crossing_relation_printed(const AlgebraContext& ctx, int i, int j, int k, int l);

/// Expansion of L_w over non-crossing diagrams of every length, plus the
/// exact remainder L_w - sum c_D L_D (zero when the rewriter is sound).
struct UncrossResult {
  DiagramExpansion expansion;
  WCElement remainder;
};

/// Rewrites a chord word onto the non-crossing basis: orientation first,
/// then sorting by commutators, then the smallest crossing pair is resolved
/// by L_ik L_jl = L_ij L_kl + L_il L_jk (i < j < k < l).
UncrossResult uncross_to_basis(const AlgebraContext& ctx, const ChordWord& word);

/// Expansion only (no remainder certificate).
DiagramExpansion uncross_expansion(int n, const ChordWord& word);

/// All sorted diagrams of length p over chords with i != j (forward only if
/// `forward_only`).
std::vector<Diagram> enumerate_diagrams(int n, int p, bool forward_only);
std::vector<Diagram> enumerate_noncrossing(int n, int p);

/// Pairwise-distinct associated monomials over the non-crossing diagrams.
bool check_injectivity(int n, int p);

/// The top-degree part of L_D equals sum over reversal sets S of
/// (-1)^{|S|} m_{D_S}, every D_S (S nonempty) is strictly larger than D,
/// and m_D carries coefficient 1.
bool check_triangularity(const AlgebraContext& ctx, const Diagram& d);

}  // namespace tama
