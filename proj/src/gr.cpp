#include "tama/gr.hpp"

#include <bit>

namespace tama {

namespace {

int exterior_sign(std::uint16_t g, std::uint16_t h) {
  int count = 0;
  unsigned rest = h;
  while (rest) {
    int j = std::countr_zero(rest);
    rest &= rest - 1;
    count += std::popcount(static_cast<unsigned>(g) >> (j + 1));
  }
  return (count & 1) ? -1 : 1;
}

GrElement single(const AlgebraContext& ctx, const Monomial& m) { return GrElement(ctx.n(), m, 1); }

}  // namespace

GrElement gr_constant(const AlgebraContext& ctx, const Rational& c) { return GrElement(ctx.n(), Monomial{}, c); }

GrElement gr_x(const AlgebraContext& ctx, int i) {
  ctx.check_index(i);
  Monomial m;
  m.alpha[i - 1] = 1;
  return single(ctx, m);
}

GrElement gr_y(const AlgebraContext& ctx, int i) {
  ctx.check_index(i);
  Monomial m;
  m.beta[i - 1] = 1;
  return single(ctx, m);
}

GrElement gr_e(const AlgebraContext& ctx, int i) {
  ctx.check_index(i);
  Monomial m;
  m.gamma = static_cast<std::uint16_t>(1u << (i - 1));
  return single(ctx, m);
}

GrElement gr_multiply(const GrElement& u, const GrElement& v) {
  if (u.dim() != v.dim()) throw AlgebraError("context mismatch in gr product");
  TermAccumulator acc;
  for (const auto& [a, ca] : u.terms()) {
    for (const auto& [b, cb] : v.terms()) {
      if (a.gamma & b.gamma) continue;
      Monomial m;
      for (int i = 0; i < kMaxDim; ++i) {
        int x = a.alpha[i] + b.alpha[i];
        int y = a.beta[i] + b.beta[i];
        if (x > 255 || y > 255) throw AlgebraError("exponent overflow in gr product");
        m.alpha[i] = static_cast<std::uint8_t>(x);
        m.beta[i] = static_cast<std::uint8_t>(y);
      }
      m.gamma = a.gamma | b.gamma;
      Rational c = ca * cb;
      if (exterior_sign(a.gamma, b.gamma) < 0) c = -c;
      accumulate(acc, m, c);
    }
  }
  return GrElement::from_accumulator(u.dim(), std::move(acc));
}

GrElement gr_power(const GrElement& u, unsigned k) {
  GrElement result(u.dim(), Monomial{}, 1);
  for (unsigned i = 0; i < k; ++i) result = result * u;
  return result;
}

GrElement leading_part(const WCElement& u) {
  if (u.is_zero()) throw AlgebraError("leading part of the zero element");
  int top = u.degree();
  std::vector<GrElement::Term> kept;
  for (const auto& t : u.terms()) {
    if (t.first.degree() == top) kept.push_back(t);
  }
  return GrElement::from_terms(u.dim(), std::move(kept));
}

GrElement homogeneous_part(const GrElement& u, int d) {
  std::vector<GrElement::Term> kept;
  for (const auto& t : u.terms()) {
    if (t.first.degree() == d) kept.push_back(t);
  }
  return GrElement::from_terms(u.dim(), std::move(kept));
}

GrElement gr_L(const AlgebraContext& ctx, int i, int j) {
  if (i == j) throw AlgebraError("L_ij needs i != j");
  return gr_x(ctx, i) * gr_y(ctx, j) - gr_x(ctx, j) * gr_y(ctx, i);
}

GrElement gr_O(const AlgebraContext& ctx, int i, int j) {
  return gr_L(ctx, i, j) + Rational(1, 2) * (gr_e(ctx, i) * gr_e(ctx, j));
}

}  // namespace tama
