#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tama/error.hpp"
#include "tama/rational.hpp"

namespace tama {

/// Largest supported dimension n of V.
inline constexpr int kMaxDim = 12;

/// Canonical monomial x^alpha y^beta e^gamma. Shared by the Weyl-Clifford
/// algebra (normal-ordered basis) and its associated graded
/// S(V + V*) (x) Lambda(V) (supercommutative basis).
///
/// Index i (1-based) lives in slot i-1; bit i-1 of `gamma` marks e_i.
struct Monomial {
  std::array<std::uint8_t, kMaxDim> alpha{};
  std::array<std::uint8_t, kMaxDim> beta{};
  std::uint16_t gamma = 0;

  int x_degree() const;
  int y_degree() const;
  int clifford_degree() const;
  /// Filtration degree |alpha| + |beta| + |gamma|.
  int degree() const { return x_degree() + y_degree() + clifford_degree(); }
  /// 0 for even, 1 for odd Clifford part.
  int parity() const { return clifford_degree() & 1; }
  bool is_one() const { return degree() == 0; }

  /// Largest index used by the monomial (0 for the unit).
  int max_index() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded-lexicographic order on (total degree, alpha, beta, gamma).
bool monomial_less(const Monomial& a, const Monomial& b);

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return monomial_less(a, b); }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Text form `x1^2 y3 e1 e2`; the unit renders as `1`.
std::string format_monomial(const Monomial& m);

using TermAccumulator = std::unordered_map<Monomial, Rational, MonomialHash>;

/// Adds `c` to the accumulator entry for `m`, erasing it when it cancels.
void accumulate(TermAccumulator& acc, const Monomial& m, const Rational& c);

/// Finite rational combination of canonical monomials, stored sorted with no
/// zero coefficients. `Tag` separates the filtered algebra from its graded
/// counterpart; products are supplied by the respective modules.
template <class Tag>
class Combination {
 public:
  using Term = std::pair<Monomial, Rational>;

  Combination() = default;
  explicit Combination(int dim) : dim_(dim) {}

  /// Single term `c * m`.
  Combination(int dim, const Monomial& m, const Rational& c) : dim_(dim) {
    if (c != 0) terms_.emplace_back(m, c);
  }

  static Combination from_accumulator(int dim, TermAccumulator&& acc) {
    Combination out(dim);
    out.terms_.reserve(acc.size());
    for (auto& [m, c] : acc) {
      if (c != 0) out.terms_.emplace_back(m, std::move(c));
    }
    std::sort(out.terms_.begin(), out.terms_.end(),
              [](const Term& a, const Term& b) { return monomial_less(a.first, b.first); });
    return out;
  }

  static Combination from_terms(int dim, std::vector<Term> terms) {
    TermAccumulator acc;
    for (auto& [m, c] : terms) accumulate(acc, m, c);
    return from_accumulator(dim, std::move(acc));
  }

  int dim() const { return dim_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return monomial_less(t.first, key); });
    if (it != terms_.end() && it->first == m) return it->second;
    return 0;
  }

  /// Maximal filtration degree of a term; -1 for zero.
  int degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.first.degree());
    return d;
  }

  Combination& operator+=(const Combination& other) {
    merge(other, 1);
    return *this;
  }
  Combination& operator-=(const Combination& other) {
    merge(other, -1);
    return *this;
  }
  Combination& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
    } else {
      for (auto& t : terms_) t.second *= c;
    }
    return *this;
  }

  friend Combination operator+(Combination a, const Combination& b) { return a += b; }
  friend Combination operator-(Combination a, const Combination& b) { return a -= b; }
  friend Combination operator-(Combination a) { return a *= Rational(-1); }
  friend Combination operator*(const Rational& c, Combination a) { return a *= c; }
  friend Combination operator*(Combination a, const Rational& c) { return a *= c; }

  friend bool operator==(const Combination& a, const Combination& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (!(a.terms_[i].first == b.terms_[i].first) || a.terms_[i].second != b.terms_[i].second) return false;
    }
    return true;
  }

 private:
  void adopt_dim(const Combination& other) {
    if (dim_ == other.dim_) return;
    if (dim_ == 0 && terms_.empty()) {
      dim_ = other.dim_;
      return;
    }
    if (other.dim_ == 0 && other.terms_.empty()) return;
    throw AlgebraError("context mismatch: n=" + std::to_string(dim_) + " vs n=" + std::to_string(other.dim_));
  }

  void merge(const Combination& other, int sign) {
    adopt_dim(other);
    std::vector<Term> out;
    out.reserve(terms_.size() + other.terms_.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < terms_.size() || j < other.terms_.size()) {
      if (j == other.terms_.size() ||
          (i < terms_.size() && monomial_less(terms_[i].first, other.terms_[j].first))) {
        out.push_back(std::move(terms_[i++]));
      } else if (i == terms_.size() || monomial_less(other.terms_[j].first, terms_[i].first)) {
        out.emplace_back(other.terms_[j].first, sign > 0 ? other.terms_[j].second : Rational(-other.terms_[j].second));
        ++j;
      } else {
        Rational c = sign > 0 ? Rational(terms_[i].second + other.terms_[j].second)
                              : Rational(terms_[i].second - other.terms_[j].second);
        if (c != 0) out.emplace_back(terms_[i].first, std::move(c));
        ++i;
        ++j;
      }
    }
    terms_ = std::move(out);
  }

  int dim_ = 0;
  std::vector<Term> terms_;
};

struct WCTag {};
struct GrTag {};

/// Element of the Weyl-Clifford algebra WC = W (x) C in normal-ordered form.
using WCElement = Combination<WCTag>;
/// Element of gr(WC) = S(V + V*) (x) Lambda(V).
using GrElement = Combination<GrTag>;

/// Canonical text form: terms in graded-lex order, `p/q * monomial`,
/// joined by ` + ` / ` - `; the zero element renders as `0`.
std::string format_terms(const std::vector<std::pair<Monomial, Rational>>& terms);

inline std::string format(const WCElement& u) { return format_terms(u.terms()); }
inline std::string format(const GrElement& u) { return "gr: " + format_terms(u.terms()); }

}  // namespace tama
