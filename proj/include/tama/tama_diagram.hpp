#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "tama/ama.hpp"
#include "tama/gr.hpp"

namespace tama {

/// Number of unordered chords {i<j} on n vertices.
inline int chord_count(int n) { return n * (n - 1) / 2; }
/// Position of the chord {i<j} in lexicographic order (0-based).
int chord_index(int n, int i, int j);
/// Inverse of chord_index.
Chord chord_at(int n, int index);

/// Chord multiplicities m_ij (i < j) on the n-gon; encodes the commutative
/// monomial prod O_ij^{m_ij}.
class TamaDiagram {
 public:
  TamaDiagram() = default;
  explicit TamaDiagram(int n);
  TamaDiagram(int n, std::initializer_list<std::pair<Chord, int>> chords);

  int n() const { return n_; }
  /// Multiplicity of the unordered chord {i, j}; 0 for i = j.
  int multiplicity(int i, int j) const;
  void set(int i, int j, int m);
  void add(int i, int j, int delta);
  int degree() const;
  const std::vector<int>& counts() const { return counts_; }
  /// Chords with nonzero multiplicity, in lexicographic order.
  std::vector<std::pair<Chord, int>> chords() const;
  /// Componentwise sum (monomial product).
  TamaDiagram operator*(const TamaDiagram& other) const;
  /// True when every multiplicity of `other` is at most the one here.
  bool divisible_by(const TamaDiagram& other) const;
  /// Componentwise difference; requires divisible_by(other).
  TamaDiagram quotient(const TamaDiagram& other) const;

  friend bool operator==(const TamaDiagram&, const TamaDiagram&) = default;
  /// Degree first, then multiplicities in chord order (larger first).
  friend std::strong_ordering operator<=>(const TamaDiagram& a, const TamaDiagram& b);

 private:
  int n_ = 0;
  std::vector<int> counts_;
};

/// `T[n=4]: 13^2 24^1`; the empty diagram renders as `T[n=4]: 1`.
std::string format_tama_diagram(const TamaDiagram& d);
TamaDiagram parse_tama_diagram(const std::string& text);

/// Commutative polynomial in the symbols X_ij = O_ij (i < j).
using OPolynomial = std::map<TamaDiagram, Rational>;

void add_term(OPolynomial& p, const TamaDiagram& d, const Rational& c);
OPolynomial add(const OPolynomial& a, const OPolynomial& b, const Rational& scale = 1);
OPolynomial multiply(const OPolynomial& a, const OPolynomial& b);
/// X_ij with X_ii = 0 and X_ji = -X_ij.
OPolynomial x_symbol(int n, int i, int j);
/// Largest O-degree among the terms; -1 for zero.
int degree(const OPolynomial& p);
std::string format_opolynomial(const OPolynomial& p);

/// Image in gr(WC) under X_ij -> O_ij = L_ij + 1/2 e_i e_j.
GrElement gr_image(const AlgebraContext& ctx, const OPolynomial& p);
GrElement gr_image(const AlgebraContext& ctx, const TamaDiagram& d);

/// All diagrams of O-degree d on n vertices.
std::vector<TamaDiagram> enumerate_tama_diagrams(int n, int d);

}  // namespace tama
