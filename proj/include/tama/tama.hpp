#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tama/algebra.hpp"
#include "tama/gr.hpp"
#include "tama/tama_diagram.hpp"

namespace tama {

/// Generators of the harmonic osp(1|2): the Dirac operator and its dual.
struct OspGenerators {
  WCElement dirac;  // sum_j y_j e_j
  WCElement coord;  // sum_j x_j e_j
};

OspGenerators osp_generators(const AlgebraContext& ctx);

/// a - 1/2 ad_{dirac}(ad_{coord}(a)) with graded commutators.
/// Throws AlgebraError for inhomogeneous parity.
WCElement ad_p(const AlgebraContext& ctx, const WCElement& a);
/// The plain commutator [P, a] with P = 1 - 1/2 dirac * coord.
WCElement ad_p_literal(const AlgebraContext& ctx, const WCElement& a);

/// O_ij = L_ij + 1/2 e_i e_j, extended by O_ii = 0 and O_ji = -O_ij.
WCElement o2(const AlgebraContext& ctx, int i, int j);
/// -1/2 ad_p(e_A) for a strictly increasing A with 2 <= |A| <= n.
WCElement o_symmetry(const AlgebraContext& ctx, std::span<const int> a);
/// (k-1)/2 e_A - sum_{p<q} L_{a_p a_q} e_{a_p} e_{a_q} e_A.
WCElement o_symmetry_closed_form(const AlgebraContext& ctx, std::span<const int> a);
/// O_A for distinct entries in any order: the sign of the sorting
/// permutation times o_symmetry of the sorted sequence.
WCElement o_signed(const AlgebraContext& ctx, std::span<const int> a);
/// O_ij O_kl + O_ik O_lj + O_il O_jk; repeated entries allowed.
/// For distinct entries the 4-index symmetry is twice this element.
WCElement o4_of_sequence(const AlgebraContext& ctx, const std::array<int, 4>& s);

struct RecursionFit {
  bool exists = false;
  Rational scalar;
  /// Terms of O_A - scalar * R (0 when the fit is exact).
  std::size_t residual_terms = 0;
};

/// Fits O_A = scalar * sum_{p<q} (-1)^{p+q+1} O_{a_p a_q} O_{A minus a_p, a_q}.
RecursionFit higher_recursion_check(const AlgebraContext& ctx, std::span<const int> a);

/// [O_ij, O_pqr] for distinct i, j and distinct p, q, r (any order).
WCElement comm_2_3(const AlgebraContext& ctx, int i, int j, int p, int q, int r);
/// The value predicted for [O_ij, O_pqr]: zero when the index sets meet in
/// an even number of points, otherwise [O_ij, O_jqr] = O_iqr after moving the
/// shared index to the front.
WCElement comm_2_3_expected(const AlgebraContext& ctx, int i, int j, int p, int q, int r);

using IndexQuad = std::array<int, 4>;

/// B reordered so that entries shared with A sit in the same slots as in A;
/// the remaining entries keep their relative order. Returns the reordered
/// sequence and the sign of the reordering.
std::pair<IndexQuad, int> align_to(const IndexQuad& a, const IndexQuad& b);

enum class TableauMode {
  /// B is aligned to A first, so the row swaps never repeat an index.
  aligned,
  /// The row swaps act on (A, B) as given; a 4-slot sequence with repeated
  /// entries is evaluated by 2 * o4_of_sequence.
  literal,
};

/// sum over the 16 row swaps of O_A O_B plus the intersection terms
/// O_{A minus (a,b)} O_{B minus (a,b)}, minus 12 delta_{A,B}.
/// Throws AlgebraError on repeated entries in A or B.
WCElement tableau_relation(const AlgebraContext& ctx, const IndexQuad& a, const IndexQuad& b,
                           TableauMode mode = TableauMode::aligned);
/// sum over the row swaps of O_A e_B plus the matching sum of
/// O_{A minus (a,b)} e_{B minus (a,b)}; a constant before -1/2 ad_p is applied.
WCElement tableau_intermediate(const AlgebraContext& ctx, const IndexQuad& a, const IndexQuad& b);
/// Top-degree symbol of the relation: sum over the row swaps of X_A X_B with
/// X_A = 2 (X_{a1a2} X_{a3a4} + X_{a1a3} X_{a4a2} + X_{a1a4} X_{a2a3}), as a
/// commutative polynomial (B aligned to A).
OPolynomial tableau_top_symbol(int n, const IndexQuad& a, const IndexQuad& b);

/// Graded commutators of u with the Dirac operator and its dual both vanish.
bool centraliser_check(const AlgebraContext& ctx, const WCElement& u);

struct GramRank {
  std::size_t size = 0;
  std::size_t rank = 0;
  bool full_rank() const { return size == rank; }
};

/// beta-Gram matrix (in gr) of a basis of the span of O_ij O_kl, O_ik O_jl,
/// O_il O_jk.
GramRank gram_rank_degree2(const AlgebraContext& ctx, int i, int j, int k, int l);
/// Same for the 15 triple products indexed by perfect matchings of 6 slots.
GramRank gram_rank_degree3(const AlgebraContext& ctx, const std::array<int, 6>& s);

inline constexpr std::size_t kDefaultMonomialCap = 2'000'000;

/// Dimension of the kernel of the map from commutative O-monomials of degree
/// d to gr(WC). Throws ResourceError when the projected size exceeds `cap`.
std::size_t kernel_probe_degree(int n, int d, std::size_t cap = kDefaultMonomialCap);
/// Rank of the top symbols of all tableau relations with ascending A <= B.
std::size_t relation_span_degree4(int n);

/// Whether u lies in the span of ordered products of 2-index symmetries
/// O_{c_1} ... O_{c_m} with c_1 <= ... <= c_m and m <= max_degree.
bool in_pbw_span(const AlgebraContext& ctx, const WCElement& u, int max_degree,
                 std::size_t cap = kDefaultMonomialCap);

}  // namespace tama
