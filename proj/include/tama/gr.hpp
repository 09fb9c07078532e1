#pragma once

#include "tama/algebra.hpp"

namespace tama {

// Associated graded gr(WC) = S(V + V*) (x) Lambda(V): symmetric factors
// commute with everything, exterior factors anticommute and square to zero.

GrElement gr_constant(const AlgebraContext& ctx, const Rational& c);
GrElement gr_x(const AlgebraContext& ctx, int i);
GrElement gr_y(const AlgebraContext& ctx, int i);
GrElement gr_e(const AlgebraContext& ctx, int i);

/// Supercommutative product.
GrElement gr_multiply(const GrElement& u, const GrElement& v);
inline GrElement operator*(const GrElement& u, const GrElement& v) { return gr_multiply(u, v); }

GrElement gr_power(const GrElement& u, unsigned k);

/// Image of u in gr at its top filtration degree. Throws AlgebraError for u = 0.
GrElement leading_part(const WCElement& u);

/// Homogeneous component of degree d (possibly zero).
GrElement homogeneous_part(const GrElement& u, int d);

/// L_ij = x_i y_j - x_j y_i in S. Throws AlgebraError for i = j.
GrElement gr_L(const AlgebraContext& ctx, int i, int j);
/// O_ij = L_ij + 1/2 e_i e_j.
GrElement gr_O(const AlgebraContext& ctx, int i, int j);

}  // namespace tama
