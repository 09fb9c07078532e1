#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "tama/algebra.hpp"
#include "tama/error.hpp"
#include "tama/gr.hpp"
#include "tama/tama_diagram.hpp"

namespace tama {

/// Syntax error carrying the 0-based character offset of the problem.
class ParseError : public AlgebraError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : AlgebraError(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

struct Expression;
using ExprPtr = std::shared_ptr<const Expression>;

/// Abstract syntax of algebra expressions. `position` is the source offset
/// and does not take part in equality.
struct Expression {
  enum class Kind { number, x, y, e, L, O, dirac, coord, neg, add, sub, mul, pow };

  Kind kind = Kind::number;
  Rational value;
  std::vector<int> indices;
  unsigned exponent = 0;
  std::vector<ExprPtr> children;
  std::size_t position = 0;

  static ExprPtr number(const Rational& v);
  static ExprPtr atom(Kind kind, std::vector<int> indices);
  static ExprPtr unary(ExprPtr operand);
  static ExprPtr binary(Kind kind, ExprPtr lhs, ExprPtr rhs);
  static ExprPtr power(ExprPtr base, unsigned exponent);
};

bool operator==(const Expression& a, const Expression& b);

/// Grammar, loosest first: sums (+, -), products (*), unary minus, powers
/// (^ with a nonnegative integer exponent), atoms. Atoms: x(i) or x1, y(i),
/// e(i), L(i,j), O(i,...,k), Dirac, Coord, and rational literals p or p/q.
ExprPtr parse_expression(const std::string& text);

/// Canonical text; parse_expression(render(e)) reproduces e.
std::string render(const Expression& e);

/// Evaluation in WC. O(A) is the k-index symmetry with the sign of the
/// sorting permutation; indices are checked against the context.
WCElement evaluate_wc(const Expression& e, const AlgebraContext& ctx);
/// Evaluation in gr(WC): atoms map to their symbols.
GrElement evaluate_gr(const Expression& e, const AlgebraContext& ctx);
/// Evaluation as a commutative polynomial in the O(i,j) (other atoms are rejected).
OPolynomial evaluate_opolynomial(const Expression& e, int n);

}  // namespace tama

#include <random>

namespace tama {

/// Random expression over indices 1..n with nesting depth at most `depth`.
ExprPtr random_expression(std::mt19937_64& rng, int n, int depth);

}  // namespace tama
