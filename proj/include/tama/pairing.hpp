#pragma once

#include <span>

#include "tama/algebra.hpp"

namespace tama {

/// kappa(x^a y^b, x^m y^n) = (-1)^{|a|} [a = n][b = m] a! b! on the
/// symmetric-algebra monomials; zero for mismatched monomials.
Rational kostant_monomial(const Monomial& u, const Monomial& v);

/// beta = kappa (x) delta on a pair of symmetric (x) exterior monomials.
Rational beta_monomial(const Monomial& u, const Monomial& v);

/// Kostant pairing on W, induced from the symmetric algebra through Q_w.
/// Throws AlgebraError if a Clifford factor is present.
Rational kostant_pairing(const WCElement& u, const WCElement& v);

/// Permanent of (omega(u_i, v_j)); 0 when lengths differ. Factors are x/y.
Rational kostant_bruteforce(std::span<const Factor> u, std::span<const Factor> v);

/// Determinant pairing on C; the e^gamma basis is orthonormal.
/// Throws AlgebraError if a Weyl factor is present.
Rational det_pairing(const WCElement& u, const WCElement& v);

/// beta = kappa (x) delta on WC.
Rational beta_pairing(const WCElement& u, const WCElement& v);

/// beta on gr(WC), where monomials already are symmetric (x) exterior ones.
Rational beta_pairing(const GrElement& u, const GrElement& v);

}  // namespace tama
