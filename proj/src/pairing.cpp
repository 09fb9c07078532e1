#include "tama/pairing.hpp"

#include <bit>
#include <vector>

namespace tama {

namespace {

Integer multi_factorial(const std::array<std::uint8_t, kMaxDim>& a) {
  Integer r = 1;
  for (auto v : a) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), v);
    r *= f;
  }
  return r;
}

/// The unique monomial w with beta(m, w) != 0: alpha and beta swapped.
Monomial partner(const Monomial& m) {
  Monomial p = m;
  std::swap(p.alpha, p.beta);
  return p;
}

template <class Tag>
Rational bilinear(const Combination<Tag>& u, const Combination<Tag>& v) {
  Rational sum = 0;
  for (const auto& [m, c] : u.terms()) {
    Rational other = v.coefficient(partner(m));
    if (other != 0) sum += c * other * beta_monomial(m, partner(m));
  }
  return sum;
}

int omega(const Factor& u, const Factor& v) {
  if (u.index != v.index) return 0;
  if (u.kind == Factor::Kind::y && v.kind == Factor::Kind::x) return 1;
  if (u.kind == Factor::Kind::x && v.kind == Factor::Kind::y) return -1;
  return 0;
}

}  // namespace

Rational kostant_monomial(const Monomial& u, const Monomial& v) {
  if (u.alpha != v.beta || u.beta != v.alpha) return 0;
  Integer value = multi_factorial(u.alpha) * multi_factorial(u.beta);
  return (u.x_degree() & 1) ? Rational(-value) : Rational(value);
}

Rational beta_monomial(const Monomial& u, const Monomial& v) {
  if (u.gamma != v.gamma) return 0;
  return kostant_monomial(u, v);
}

Rational kostant_pairing(const WCElement& u, const WCElement& v) {
  for (const auto* w : {&u, &v}) {
    for (const auto& t : w->terms()) {
      if (t.first.gamma) throw AlgebraError("kostant pairing takes Weyl-only elements");
    }
  }
  return bilinear(symbol_of(u), symbol_of(v));
}

Rational kostant_bruteforce(std::span<const Factor> u, std::span<const Factor> v) {
  if (u.size() != v.size()) return 0;
  const std::size_t p = u.size();
  if (p == 0) return 1;
  for (const auto* w : {&u, &v}) {
    for (const auto& f : *w) {
      if (f.kind == Factor::Kind::e) throw AlgebraError("kostant pairing takes x/y factors only");
    }
  }
  // Ryser: perm(A) = (-1)^p sum_{S} (-1)^{|S|} prod_i sum_{j in S} a_ij
  Integer total = 0;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << p); ++s) {
    Integer prod = 1;
    for (std::size_t i = 0; i < p && prod != 0; ++i) {
      long row = 0;
      for (std::size_t j = 0; j < p; ++j) {
        if (s >> j & 1u) row += omega(u[i], v[j]);
      }
      prod *= row;
    }
    int bits = std::popcount(s);
    if ((bits & 1) == (static_cast<int>(p) & 1)) {
      total += prod;
    } else {
      total -= prod;
    }
  }
  return Rational(total);
}

Rational det_pairing(const WCElement& u, const WCElement& v) {
  for (const auto* w : {&u, &v}) {
    for (const auto& t : w->terms()) {
      if (t.first.x_degree() || t.first.y_degree()) {
        throw AlgebraError("determinant pairing takes Clifford-only elements");
      }
    }
  }
  Rational sum = 0;
  for (const auto& [m, c] : u.terms()) sum += c * v.coefficient(m);
  return sum;
}

Rational beta_pairing(const WCElement& u, const WCElement& v) {
  if (u.dim() != v.dim()) throw AlgebraError("context mismatch in beta pairing");
  return bilinear(symbol_of(u), symbol_of(v));
}

Rational beta_pairing(const GrElement& u, const GrElement& v) {
  if (u.dim() != v.dim()) throw AlgebraError("context mismatch in beta pairing");
  return bilinear(u, v);
}

}  // namespace tama
