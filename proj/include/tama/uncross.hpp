#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tama/tama.hpp"
#include "tama/tama_diagram.hpp"

namespace tama {

/// Chord multiplicities n_ij with a black/white vertex colouring; encodes
/// prod L_ij^{n_ij} prod_k e_k^{gamma_k} in gr(WC).
struct AmaExtDiagram {
  TamaDiagram chords;
  std::uint16_t black = 0;  // bit k-1 set when vertex k is black

  friend bool operator==(const AmaExtDiagram&, const AmaExtDiagram&) = default;
  friend auto operator<=>(const AmaExtDiagram& a, const AmaExtDiagram& b) {
    if (auto c = a.chords <=> b.chords; c != 0) return c;
    return a.black <=> b.black;
  }
};

/// `AE[n=4]: 13^2 | black={2,4}`
std::string format_ama_ext(const AmaExtDiagram& d);
AmaExtDiagram parse_ama_ext(const std::string& text);

using AmaExtExpansion = std::map<AmaExtDiagram, Rational>;

/// No pair of present chords (i,k), (j,l) with i < j < k < l.
bool is_uncrossed(const TamaDiagram& d);
/// Number of crossing chord pairs, counted with multiplicity.
long crossing_number(const TamaDiagram& d);
/// Chords whose single removal (multiplicity minus one) leaves an uncrossed diagram.
std::vector<Chord> removable_chords(const TamaDiagram& d);
/// Uncrossed, or uncrossed after removing one chord.
bool is_uncrossable(const TamaDiagram& d);
/// m13 <= 1 or m24 <= 1.
bool uncrossable_condition_n4(const TamaDiagram& d);
/// At most three distinct diagonals present, and for every i (mod 5) with
/// m_{i,i+2} >= 2 the chords crossing it satisfy m_{i+1,i+3} + m_{i+1,i+4} <= 1.
bool uncrossable_condition_n5(const TamaDiagram& d);
/// Uncrossable diagrams of a given O-degree; n must be 4 or 5.
std::vector<TamaDiagram> enumerate_uncrossable(int n, int degree);

/// Writes prod L^{m} (commuting, in gr) over uncrossed chord multisets using
/// L_ik L_jl = L_ij L_kl + L_il L_jk for i < j < k < l.
std::map<TamaDiagram, Rational> uncross_commutative(const TamaDiagram& l_part);
/// Substitutes O_ij = L_ij + 1/2 e_i e_j, expands and uncrosses the L part.
AmaExtExpansion expand_to_ama_ext(const TamaDiagram& d);
AmaExtExpansion expand_to_ama_ext(const OPolynomial& p);
/// Image of an expansion in gr(WC).
GrElement gr_image(const AlgebraContext& ctx, const AmaExtExpansion& e);

/// Chords of d minus one copy of `removed`, with the endpoints of `removed`
/// black. Throws AlgebraError unless the remainder is uncrossed.
AmaExtDiagram witness_diagram(const TamaDiagram& d, Chord removed);

/// pattern -> replacement, read off the top symbol of one tableau relation.
struct RewriteRule {
  std::string family;  // double-cross, A or star
  int rotation = 0;
  IndexQuad a{};
  IndexQuad b{};
  TamaDiagram pattern;
  OPolynomial replacement;
  /// Top symbol of the generating relation; equals c * (pattern - replacement).
  OPolynomial certificate;
  Rational pattern_coefficient;
};

/// Rules for n = 4 (one double cross) and n = 5 (five rotations each of the
/// double-cross, A and star families). Each certificate is checked to vanish
/// in gr(WC) and to contain its pattern; throws AlgebraError otherwise.
std::vector<RewriteRule> derive_rules(int n);

/// A relation as printed, normalised so that its pattern has coefficient 1.
struct PrintedRelation {
  std::string family;
  OPolynomial relation;
};
std::vector<PrintedRelation> printed_relations();

/// sum over rules of prod_c binomial(m_c, pattern_c): occurrences of the
/// rule patterns counted with multiplicity.
Integer pattern_measure(const TamaDiagram& d, const std::vector<RewriteRule>& rules);

struct RewriteResult {
  OPolynomial result;
  std::size_t steps = 0;
  /// Every rewrite step produced monomials of strictly smaller measure.
  bool measure_decreasing = true;
};

/// Rewrites onto uncrossable monomials (n = 4 or 5). Rule order: family
/// order of derive_rules, lowest rotation first; smallest monomial first.
/// Throws AlgebraError when no rule applies or `max_steps` is exceeded.
RewriteResult rewrite_to_uncrossable(const OPolynomial& u, int n, std::size_t max_steps = 1'000'000);
RewriteResult rewrite_to_uncrossable(const OPolynomial& u, const std::vector<RewriteRule>& rules,
                                     std::size_t max_steps = 1'000'000);

struct BasisReport {
  int n = 0;
  int degree = 0;
  std::size_t monomials = 0;
  std::size_t uncrossable = 0;
  /// Monomials whose rewrite has uncrossable support and an equal expansion.
  std::size_t spanning_ok = 0;
  /// Uncrossable diagrams with a witness found in no other diagram's support.
  std::size_t witness_unique = 0;
  /// Uncrossable diagrams with a witness absent from every other diagram with at most as many crossings.
  std::size_t witness_triangular = 0;
  /// Rank of the gr images of the uncrossable diagrams.
  std::size_t independent_rank = 0;
  bool classification_agrees = true;
  bool measure_decreasing = true;

  bool spanning() const { return spanning_ok == monomials; }
  bool witnesses_unique() const { return witness_unique == uncrossable; }
  bool independence() const { return witness_triangular == uncrossable && independent_rank == uncrossable; }
  bool passed() const { return spanning() && independence() && classification_agrees && measure_decreasing; }
};

/// Spanning and independence checks for one O-degree slice (n = 4 or 5).
BasisReport independence_and_spanning_report(int n, int degree);

}  // namespace tama
