#pragma once

#include <span>
#include <vector>

#include "tama/element.hpp"

namespace tama {

/// Dimension data for (V, sigma) and (V + V*, omega) with
/// sigma(y_i, y_j) = omega(y_i, x_j) = delta_ij. Read-only and shareable.
class AlgebraContext {
 public:
  explicit AlgebraContext(int n);
  int n() const { return n_; }
  /// Throws AlgebraError unless 1 <= i <= n.
  void check_index(int i) const;

 private:
  int n_;
};

enum class Parity { even, odd, inhomogeneous };

/// Generator of the tensor algebra over the basis {x_i, y_i} of V + V* or
/// the Clifford generators e_i.
struct Factor {
  enum class Kind { x, y, e };
  Kind kind;
  int index;
  friend bool operator==(const Factor&, const Factor&) = default;
};

WCElement constant(const AlgebraContext& ctx, const Rational& c);
WCElement gen_x(const AlgebraContext& ctx, int i);
WCElement gen_y(const AlgebraContext& ctx, int i);
WCElement gen_e(const AlgebraContext& ctx, int i);
WCElement factor_element(const AlgebraContext& ctx, Factor f);

/// Product in WC, normal ordered. Throws AlgebraError on context mismatch.
WCElement multiply(const WCElement& u, const WCElement& v);
inline WCElement operator*(const WCElement& u, const WCElement& v) { return multiply(u, v); }

/// u^k with u^0 = 1.
WCElement power(const WCElement& u, unsigned k);

/// Ordered product of the factors of a word.
WCElement word_product(const AlgebraContext& ctx, std::span<const Factor> word);

Parity parity(const WCElement& u);

/// u v - (-1)^{p(u) p(v)} v u. Throws AlgebraError for inhomogeneous input.
WCElement graded_commutator(const WCElement& u, const WCElement& v);

/// Ordinary commutator u v - v u.
WCElement commutator(const WCElement& u, const WCElement& v);

/// The signed canonical monomial equal to e_{a_1} ... e_{a_k}. Repeated
/// indices are reduced (e_i e_i = 1).
WCElement clifford_word(const AlgebraContext& ctx, std::span<const int> indices);

/// Weyl quantization: the average over all orderings of the word.
/// Factors must be x or y.
WCElement quantize_w(const AlgebraContext& ctx, std::span<const Factor> word);

/// Clifford quantization of y_{a_1} ^ ... ^ y_{a_m} (mapped to e_{a_i}).
WCElement quantize_c(const AlgebraContext& ctx, std::span<const int> indices);

/// Inverse of Q_w (x) Q_c: the symbol of u in S(V + V*) (x) Lambda(V),
/// across all degrees (not just the top one).
GrElement symbol_of(const WCElement& u);

}  // namespace tama
