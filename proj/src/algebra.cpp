#include "tama/algebra.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace tama {

namespace {

constexpr int kMaxExponent = 255;

Integer binomial(int n, int k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer factorial(int n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

/// Sign of e^g e^h: one transposition per pair (i in g, j in h) with i > j.
int clifford_sign(std::uint16_t g, std::uint16_t h) {
  int count = 0;
  unsigned rest = h;
  while (rest) {
    int j = std::countr_zero(rest);
    rest &= rest - 1;
    count += std::popcount(static_cast<unsigned>(g) >> (j + 1));
  }
  return (count & 1) ? -1 : 1;
}

/// Normal-ordering weights y^b x^c = sum_k C(b,k) C(c,k) k! x^{c-k} y^{b-k}.
const std::vector<std::vector<std::vector<std::int64_t>>>& contraction_table() {
  static const auto table = [] {
    constexpr int kTable = 24;
    std::vector<std::vector<std::vector<std::int64_t>>> t(
        kTable, std::vector<std::vector<std::int64_t>>(kTable));
    for (int b = 0; b < kTable; ++b) {
      for (int c = 0; c < kTable; ++c) {
        for (int k = 0; k <= std::min(b, c); ++k) {
          Integer w = binomial(b, k) * binomial(c, k) * factorial(k);
          t[b][c].push_back(w.fits_slong_p() ? w.get_si() : -1);
        }
      }
    }
    return t;
  }();
  return table;
}

Integer contraction_weight(int b, int c, int k) {
  const auto& t = contraction_table();
  if (b < static_cast<int>(t.size()) && c < static_cast<int>(t.size())) {
    std::int64_t w = t[b][c][k];
    if (w >= 0) return Integer(static_cast<long>(w));
  }
  return binomial(b, k) * binomial(c, k) * factorial(k);
}

struct ProductState {
  Monomial base;
  std::vector<int> active;  // indices contracted between a.beta and b.alpha
  const Monomial* left;
  const Monomial* right;
  TermAccumulator* acc;
  Rational scale;
};

void expand_contractions(ProductState& st, std::size_t pos, const Integer& weight) {
  if (pos == st.active.size()) {
    accumulate(*st.acc, st.base, st.scale * weight);
    return;
  }
  int i = st.active[pos];
  int b = st.left->beta[i];
  int c = st.right->alpha[i];
  for (int k = 0; k <= std::min(b, c); ++k) {
    Integer w = weight * contraction_weight(b, c, k);
    st.base.alpha[i] = static_cast<std::uint8_t>(st.left->alpha[i] + c - k);
    st.base.beta[i] = static_cast<std::uint8_t>(b - k + st.right->beta[i]);
    expand_contractions(st, pos + 1, w);
  }
}

void multiply_into(const Monomial& a, const Monomial& b, const Rational& coeff, TermAccumulator& acc) {
  ProductState st;
  st.left = &a;
  st.right = &b;
  st.acc = &acc;
  st.scale = clifford_sign(a.gamma, b.gamma) < 0 ? Rational(-coeff) : coeff;
  for (int i = 0; i < kMaxDim; ++i) {
    int x = a.alpha[i] + b.alpha[i];
    int y = a.beta[i] + b.beta[i];
    if (x > kMaxExponent || y > kMaxExponent) throw AlgebraError("exponent overflow in product");
    st.base.alpha[i] = static_cast<std::uint8_t>(x);
    st.base.beta[i] = static_cast<std::uint8_t>(y);
    if (a.beta[i] && b.alpha[i]) st.active.push_back(i);
  }
  st.base.gamma = a.gamma ^ b.gamma;
  expand_contractions(st, 0, Integer(1));
}

int common_dim(const WCElement& u, const WCElement& v) {
  if (u.dim() != v.dim()) {
    throw AlgebraError("context mismatch: n=" + std::to_string(u.dim()) + " vs n=" + std::to_string(v.dim()));
  }
  return u.dim();
}

Monomial unit_monomial() { return Monomial{}; }

}  // namespace

AlgebraContext::AlgebraContext(int n) : n_(n) {
  if (n < 1 || n > kMaxDim) {
    throw AlgebraError("dimension n=" + std::to_string(n) + " outside 1.." + std::to_string(kMaxDim));
  }
}

void AlgebraContext::check_index(int i) const {
  if (i < 1 || i > n_) {
    throw AlgebraError("index " + std::to_string(i) + " outside 1.." + std::to_string(n_));
  }
}

WCElement constant(const AlgebraContext& ctx, const Rational& c) {
  return WCElement(ctx.n(), unit_monomial(), c);
}

WCElement gen_x(const AlgebraContext& ctx, int i) {
  ctx.check_index(i);
  Monomial m;
  m.alpha[i - 1] = 1;
  return WCElement(ctx.n(), m, 1);
}

WCElement gen_y(const AlgebraContext& ctx, int i) {
  ctx.check_index(i);
  Monomial m;
  m.beta[i - 1] = 1;
  return WCElement(ctx.n(), m, 1);
}

WCElement gen_e(const AlgebraContext& ctx, int i) {
  ctx.check_index(i);
  Monomial m;
  m.gamma = static_cast<std::uint16_t>(1u << (i - 1));
  return WCElement(ctx.n(), m, 1);
}

WCElement factor_element(const AlgebraContext& ctx, Factor f) {
  switch (f.kind) {
    case Factor::Kind::x:
      return gen_x(ctx, f.index);
    case Factor::Kind::y:
      return gen_y(ctx, f.index);
    case Factor::Kind::e:
      return gen_e(ctx, f.index);
  }
  throw AlgebraError("unknown factor kind");
}

WCElement multiply(const WCElement& u, const WCElement& v) {
  int dim = common_dim(u, v);
  TermAccumulator acc;
  for (const auto& [ma, ca] : u.terms()) {
    for (const auto& [mb, cb] : v.terms()) {
      multiply_into(ma, mb, ca * cb, acc);
    }
  }
  return WCElement::from_accumulator(dim, std::move(acc));
}

WCElement power(const WCElement& u, unsigned k) {
  WCElement result(u.dim(), unit_monomial(), 1);
  for (unsigned i = 0; i < k; ++i) result = result * u;
  return result;
}

WCElement word_product(const AlgebraContext& ctx, std::span<const Factor> word) {
  WCElement result = constant(ctx, 1);
  for (const auto& f : word) result = result * factor_element(ctx, f);
  return result;
}

Parity parity(const WCElement& u) {
  bool even = false;
  bool odd = false;
  for (const auto& t : u.terms()) (t.first.parity() ? odd : even) = true;
  if (even && odd) return Parity::inhomogeneous;
  return odd ? Parity::odd : Parity::even;
}

WCElement graded_commutator(const WCElement& u, const WCElement& v) {
  Parity pu = parity(u);
  Parity pv = parity(v);
  if (pu == Parity::inhomogeneous || pv == Parity::inhomogeneous) {
    throw AlgebraError("graded commutator needs parity-homogeneous arguments");
  }
  WCElement uv = u * v;
  WCElement vu = v * u;
  if (pu == Parity::odd && pv == Parity::odd) return uv + vu;
  return uv - vu;
}

WCElement commutator(const WCElement& u, const WCElement& v) { return u * v - v * u; }

WCElement clifford_word(const AlgebraContext& ctx, std::span<const int> indices) {
  Monomial m;
  int sign = 1;
  for (int a : indices) {
    ctx.check_index(a);
    auto bit = static_cast<std::uint16_t>(1u << (a - 1));
    sign *= clifford_sign(m.gamma, bit);
    m.gamma ^= bit;
  }
  return WCElement(ctx.n(), m, sign);
}

WCElement quantize_w(const AlgebraContext& ctx, std::span<const Factor> word) {
  std::vector<Factor> factors(word.begin(), word.end());
  for (const auto& f : factors) {
    if (f.kind == Factor::Kind::e) throw AlgebraError("quantize_w takes x/y factors only");
    ctx.check_index(f.index);
  }
  // Each distinct arrangement occurs equally often among the m! orderings.
  std::vector<int> order(factors.size());
  std::iota(order.begin(), order.end(), 0);
  auto key = [&factors](int i) {
    return std::pair{static_cast<int>(factors[i].kind), factors[i].index};
  };
  std::sort(order.begin(), order.end(), [&](int a, int b) { return key(a) < key(b); });
  std::vector<std::pair<int, int>> keys;
  for (int i : order) keys.push_back(key(i));
  WCElement sum = constant(ctx, 0);
  long count = 0;
  do {
    std::vector<Factor> arranged;
    for (const auto& [kind, index] : keys) arranged.push_back({static_cast<Factor::Kind>(kind), index});
    sum += word_product(ctx, arranged);
    ++count;
  } while (std::next_permutation(keys.begin(), keys.end()));
  return sum * make_rational(1, count);
}

WCElement quantize_c(const AlgebraContext& ctx, std::span<const int> indices) {
  std::vector<int> perm(indices.size());
  std::iota(perm.begin(), perm.end(), 0);
  WCElement sum = constant(ctx, 0);
  long count = 0;
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < perm.size(); ++a) {
      for (std::size_t b = a + 1; b < perm.size(); ++b) inversions += perm[a] > perm[b];
    }
    std::vector<int> word;
    for (int p : perm) word.push_back(indices[p]);
    WCElement term = clifford_word(ctx, word);
    sum += (inversions & 1) ? -term : term;
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum * make_rational(1, count);
}

GrElement symbol_of(const WCElement& u) {
  // Per index: x^a y^b = sum_k (-1/2)^k k! C(a,k) C(b,k) Q_w(x^{a-k} y^{b-k}).
  TermAccumulator acc;
  for (const auto& [m, c] : u.terms()) {
    std::vector<std::pair<Monomial, Rational>> partial{{m, c}};
    for (int i = 0; i < kMaxDim; ++i) {
      int a = m.alpha[i];
      int b = m.beta[i];
      if (a == 0 || b == 0) continue;
      std::vector<std::pair<Monomial, Rational>> next;
      for (const auto& [pm, pc] : partial) {
        for (int k = 0; k <= std::min(a, b); ++k) {
          Monomial q = pm;
          q.alpha[i] = static_cast<std::uint8_t>(a - k);
          q.beta[i] = static_cast<std::uint8_t>(b - k);
          Rational w = make_rational(binomial(a, k) * binomial(b, k) * factorial(k), Integer(1) << k);
          if (k & 1) w = -w;
          next.emplace_back(q, pc * w);
        }
      }
      partial = std::move(next);
    }
    for (const auto& [pm, pc] : partial) accumulate(acc, pm, pc);
  }
  return GrElement::from_accumulator(u.dim(), std::move(acc));
}

}  // namespace tama
