#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "tama/ama.hpp"
#include "tama/tama.hpp"

using namespace testing;

TEST_CASE("exterior products") {
  AlgebraContext ctx(4);
  CHECK((gr_e(ctx, 1) * gr_e(ctx, 1)).is_zero());
  CHECK(gr_e(ctx, 2) * gr_e(ctx, 1) == -(gr_e(ctx, 1) * gr_e(ctx, 2)));
  const GrElement e12 = gr_e(ctx, 1) * gr_e(ctx, 2);
  const GrElement e34 = gr_e(ctx, 3) * gr_e(ctx, 4);
  CHECK(e12 * e34 == e34 * e12);
  CHECK(e12 * e34 == gr_e(ctx, 1) * gr_e(ctx, 2) * gr_e(ctx, 3) * gr_e(ctx, 4));
  CHECK(gr_y(ctx, 1) * gr_x(ctx, 1) == gr_x(ctx, 1) * gr_y(ctx, 1));
}

TEST_CASE("leading parts") {
  AlgebraContext ctx(5);
  CHECK(leading_part(o2(ctx, 1, 2)) == gr_L(ctx, 1, 2) + Rational(1, 2) * (gr_e(ctx, 1) * gr_e(ctx, 2)));
  CHECK(leading_part(gen_x(ctx, 1) * gen_y(ctx, 1) + constant(ctx, 1)) == gr_x(ctx, 1) * gr_y(ctx, 1));
  const GrElement l13l25 = leading_part(L_of_chord(ctx, {1, 3}) * L_of_chord(ctx, {2, 5}));
  CHECK(l13l25 == gr_L(ctx, 1, 3) * gr_L(ctx, 2, 5));
  CHECK(l13l25.degree() == 4);
  CHECK_THROWS_AS(leading_part(WCElement(5)), AlgebraError);
  CHECK(format(gr_x(ctx, 1)) == "gr: 1/1 * x1");
}

TEST_CASE("L and O symbols") {
  AlgebraContext ctx(5);
  CHECK(gr_L(ctx, 2, 1) == -gr_L(ctx, 1, 2));
  CHECK_THROWS_AS(gr_L(ctx, 1, 1), AlgebraError);
  const GrElement o12 = gr_O(ctx, 1, 2);
  CHECK(o12 * o12 == gr_power(gr_L(ctx, 1, 2), 2) + gr_L(ctx, 1, 2) * gr_e(ctx, 1) * gr_e(ctx, 2));
}

TEST_CASE("Plucker relations") {
  AlgebraContext ctx(5);
  for (const auto& s : distinct_sequences(5, 4)) {
    REQUIRE(oracle::plucker(ctx, s[0], s[1], s[2], s[3]).is_zero());
  }
}

TEST_CASE("leading part is multiplicative on O products") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 80; ++t) {
    const int n = 2 + t % 4;
    AlgebraContext ctx(n);
    std::uniform_int_distribution<int> idx(1, n);
    WCElement u = constant(ctx, 1);
    WCElement v = constant(ctx, 1);
    for (int k = 0; k < 2; ++k) {
      int i = idx(rng), j = idx(rng);
      if (i == j) j = i % n + 1;
      u = u * o2(ctx, i, j);
      int p = idx(rng), q = idx(rng);
      if (p == q) q = p % n + 1;
      v = v * o2(ctx, p, q);
    }
    const WCElement uv = u * v;
    if (uv.is_zero() || uv.degree() != u.degree() + v.degree()) continue;
    REQUIRE(leading_part(uv) == leading_part(u) * leading_part(v));
  }
}

TEST_CASE("supercommutativity") {
  std::mt19937_64 rng(9);
  AlgebraContext ctx(4);
  for (int t = 0; t < 100; ++t) {
    const GrElement u = symbol_of(word_product(ctx, oracle::random_word(rng, 4, 4)));
    const GrElement v = symbol_of(word_product(ctx, oracle::random_word(rng, 4, 4)));
    // top-degree parts of single words are parity homogeneous
    const GrElement a = homogeneous_part(u, u.degree());
    const GrElement b = homogeneous_part(v, v.degree());
    if (a.is_zero() || b.is_zero()) continue;
    const int pa = a.terms().front().first.parity();
    const int pb = b.terms().front().first.parity();
    REQUIRE(a * b == Rational(pa && pb ? -1 : 1) * (b * a));
  }
}
