#include "doctest.h"
#include "helpers.hpp"
#include "tama/ama.hpp"
#include "tama/tama.hpp"

using namespace testing;

namespace {

WCElement O(const AlgebraContext& ctx, std::vector<int> a) { return o_signed(ctx, a); }
WCElement L(const AlgebraContext& ctx, int i, int j) { return L_of_chord(ctx, {i, j}); }
WCElement e(const AlgebraContext& ctx, std::vector<int> a) { return clifford_word(ctx, a); }

}  // namespace

TEST_CASE("projector examples") {
  AlgebraContext ctx(4);
  for (int i = 1; i <= 4; ++i) CHECK(ad_p(ctx, gen_e(ctx, i)).is_zero());
  CHECK(Rational(-1, 2) * ad_p(ctx, e(ctx, {1, 2})) == L(ctx, 1, 2) + Rational(1, 2) * e(ctx, {1, 2}));
  CHECK(ad_p(ctx, o2(ctx, 1, 2)) == o2(ctx, 1, 2));
}

TEST_CASE("literal commutator reading of the projector") {
  AlgebraContext ctx(3);
  CHECK(ad_p_literal(ctx, o2(ctx, 1, 2)).is_zero());
  CHECK_FALSE(ad_p_literal(ctx, gen_e(ctx, 1)).is_zero());
}

TEST_CASE("k-index symmetries") {
  AlgebraContext ctx(4);
  CHECK(o_symmetry(ctx, std::vector{1, 2}) == L(ctx, 1, 2) + Rational(1, 2) * e(ctx, {1, 2}));
  CHECK(o_symmetry(ctx, std::vector{1, 2, 3}) ==
        e(ctx, {1, 2, 3}) + L(ctx, 1, 2) * gen_e(ctx, 3) - L(ctx, 1, 3) * gen_e(ctx, 2) + L(ctx, 2, 3) * gen_e(ctx, 1));
  CHECK(O(ctx, {2, 1, 3}) == -O(ctx, {1, 2, 3}));
  CHECK_THROWS_AS(o_symmetry(ctx, std::vector{2, 1}), AlgebraError);
  CHECK_THROWS_AS(o_symmetry(ctx, std::vector{1, 5}), AlgebraError);
}

TEST_CASE("closed form agrees with the projector construction") {
  for (int n = 2; n <= 6; ++n) {
    AlgebraContext ctx(n);
    for (unsigned m = 0; m < (1u << n); ++m) {
      std::vector<int> a;
      for (int i = 0; i < n; ++i)
        if (m >> i & 1u) a.push_back(i + 1);
      if (a.size() < 2) continue;
      REQUIRE(o_symmetry(ctx, a) == o_symmetry_closed_form(ctx, a));
    }
  }
}

TEST_CASE("four-slot quadratic expression") {
  AlgebraContext ctx(4);
  const WCElement q = o4_of_sequence(ctx, {1, 2, 3, 4});
  CHECK(q == o2(ctx, 1, 2) * o2(ctx, 3, 4) - o2(ctx, 1, 3) * o2(ctx, 2, 4) + o2(ctx, 1, 4) * o2(ctx, 2, 3));
  // the four-index symmetry is twice the quadratic expression
  CHECK(o_symmetry(ctx, std::vector{1, 2, 3, 4}) == Rational(2) * q);
  CHECK(o4_of_sequence(ctx, {2, 1, 3, 4}) == -q);
  const WCElement rep = o4_of_sequence(ctx, {1, 1, 3, 4});
  CHECK(rep == -(o2(ctx, 1, 3) * o2(ctx, 1, 4)) + o2(ctx, 1, 4) * o2(ctx, 1, 3));
  CHECK_FALSE(rep.is_zero());
}

TEST_CASE("four-slot expression is antisymmetric in distinct entries") {
  for (int n : {4, 6}) {
    AlgebraContext ctx(n);
    for (const auto& base : std::vector<std::vector<int>>{{1, 2, 3, 4}, {2, 3, 5, 6}}) {
      if (base.back() > n) continue;
      const WCElement ref = o4_of_sequence(ctx, {base[0], base[1], base[2], base[3]});
      std::vector<int> slots{0, 1, 2, 3};
      do {
        int inversions = 0;
        for (int s = 0; s < 4; ++s)
          for (int t = s + 1; t < 4; ++t) inversions += slots[s] > slots[t];
        const WCElement permuted = o4_of_sequence(ctx, {base[slots[0]], base[slots[1]], base[slots[2]], base[slots[3]]});
        REQUIRE(permuted == Rational(inversions % 2 ? -1 : 1) * ref);
      } while (std::next_permutation(slots.begin(), slots.end()));
    }
  }
}

TEST_CASE("higher index recursion") {
  const std::vector<std::pair<int, Rational>> expected{{4, 1}, {5, Rational(2, 5)}, {6, Rational(2, 9)}};
  for (const auto& [k, scalar] : expected) {
    AlgebraContext ctx(k);
    std::vector<int> a(k);
    for (int i = 0; i < k; ++i) a[i] = i + 1;
    const RecursionFit fit = higher_recursion_check(ctx, a);
    CHECK(fit.exists);
    CHECK(fit.scalar == scalar);
    CHECK(fit.scalar == make_rational(4, k * (k - 3)));
  }
}

TEST_CASE("two-three commutation") {
  AlgebraContext ctx(5);
  CHECK(comm_2_3(ctx, 1, 2, 3, 4, 5).is_zero());
  CHECK(comm_2_3(ctx, 1, 2, 1, 2, 5).is_zero());
  const WCElement c = comm_2_3(ctx, 1, 2, 2, 3, 4);
  CHECK_FALSE(c.is_zero());
  CHECK((c == O(ctx, {1, 3, 4}) || c == -O(ctx, {1, 3, 4})));
  CHECK(c == comm_2_3_expected(ctx, 1, 2, 2, 3, 4));
  // the bare product O12 O234 is not O134
  CHECK_FALSE(o2(ctx, 1, 2) * O(ctx, {2, 3, 4}) == O(ctx, {1, 3, 4}));
}

TEST_CASE("two-three commutation for every configuration, n = 5") {
  AlgebraContext ctx(5);
  for (const auto& ij : distinct_sequences(5, 2)) {
    for (const auto& pqr : distinct_sequences(5, 3)) {
      REQUIRE(comm_2_3(ctx, ij[0], ij[1], pqr[0], pqr[1], pqr[2]) ==
              comm_2_3_expected(ctx, ij[0], ij[1], pqr[0], pqr[1], pqr[2]));
    }
  }
}

TEST_CASE("tableau relation examples") {
  AlgebraContext c4(4);
  CHECK(tableau_relation(c4, {1, 2, 3, 4}, {1, 2, 3, 4}).is_zero());
  const WCElement o1234 = O(c4, {1, 2, 3, 4});
  WCElement rhs = constant(c4, Rational(3, 4));
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) rhs -= power(o2(c4, i, j), 2);
  CHECK(o1234 * o1234 == rhs);

  AlgebraContext c5(5);
  CHECK(tableau_relation(c5, {1, 2, 3, 4}, {1, 2, 3, 5}).is_zero());
  const WCElement oa = O(c5, {1, 2, 3, 4});
  const WCElement ob = O(c5, {1, 2, 3, 5});
  WCElement sum(5);
  for (int a = 1; a <= 3; ++a) sum += o2(c5, a, 4) * o2(c5, a, 5) + o2(c5, a, 5) * o2(c5, a, 4);
  CHECK(oa * ob + ob * oa == -sum);

  AlgebraContext c8(8);
  CHECK(tableau_relation(c8, {1, 2, 3, 4}, {5, 6, 7, 8}).is_zero());
  CHECK_THROWS_AS(tableau_relation(c4, {1, 1, 3, 4}, {1, 2, 3, 4}), AlgebraError);
}

TEST_CASE("tableau relations vanish for all ascending pairs, n = 4 and 5") {
  for (int n : {4, 5}) {
    AlgebraContext ctx(n);
    std::vector<IndexQuad> quads;
    for (const auto& s : distinct_sequences(n, 4))
      if (std::is_sorted(s.begin(), s.end())) quads.push_back({s[0], s[1], s[2], s[3]});
    for (const auto& a : quads)
      for (const auto& b : quads) REQUIRE(tableau_relation(ctx, a, b).is_zero());
  }
}

TEST_CASE("unaligned reading fails for misaligned shared entries") {
  AlgebraContext ctx(5);
  CHECK_FALSE(tableau_relation(ctx, {1, 2, 3, 4}, {1, 2, 4, 5}, TableauMode::literal).is_zero());
  CHECK(tableau_relation(ctx, {1, 2, 3, 4}, {1, 2, 3, 5}, TableauMode::literal).is_zero());
  const auto [aligned, sign] = align_to({1, 2, 3, 4}, {1, 2, 4, 5});
  CHECK(aligned == IndexQuad{1, 2, 5, 4});
  CHECK(sign == -1);
}

TEST_CASE("intermediate constant") {
  AlgebraContext ctx(5);
  CHECK(tableau_intermediate(ctx, {1, 2, 3, 4}, {1, 2, 3, 4}) == constant(ctx, -24));
  CHECK(tableau_intermediate(ctx, {1, 2, 3, 4}, {1, 2, 3, 5}).is_zero());
}

TEST_CASE("centraliser membership") {
  AlgebraContext ctx(4);
  CHECK(centraliser_check(ctx, o2(ctx, 1, 2)));
  CHECK(centraliser_check(ctx, O(ctx, {1, 2, 3})));
  CHECK_FALSE(centraliser_check(ctx, gen_e(ctx, 1)));
  for (int n = 2; n <= 6; ++n) {
    AlgebraContext c(n);
    for (unsigned m = 0; m < (1u << n); ++m) {
      std::vector<int> a;
      for (int i = 0; i < n; ++i)
        if (m >> i & 1u) a.push_back(i + 1);
      if (a.size() >= 2) REQUIRE(centraliser_check(c, o_symmetry(c, a)));
    }
  }
}

TEST_CASE("projector is idempotent and a module map") {
  AlgebraContext ctx(4);
  std::vector<WCElement> inputs;
  for (const auto& a : std::vector<std::vector<int>>{{1}, {1, 2}, {1, 2, 3}, {2, 4}, {1, 2, 3, 4}}) {
    inputs.push_back(e(ctx, a));
    inputs.push_back(L(ctx, 1, 3) * e(ctx, a));
    inputs.push_back(L(ctx, 2, 4) * e(ctx, a));
  }
  for (const auto& u : inputs) {
    const WCElement p = ad_p(ctx, u);
    REQUIRE(ad_p(ctx, p) == p);
  }
  const std::vector<WCElement> centralising{o2(ctx, 1, 2), o2(ctx, 2, 4), O(ctx, {1, 2, 3}), O(ctx, {2, 3, 4})};
  for (const auto& a : centralising) {
    for (const auto& b : std::vector<std::vector<int>>{{1}, {3}, {1, 2}, {1, 3}, {2, 3, 4}, {1, 2, 3, 4}}) {
      REQUIRE(ad_p(ctx, a * e(ctx, b)) == a * ad_p(ctx, e(ctx, b)));
    }
  }
}

TEST_CASE("products of three-index symmetries lie in the span of two-index products") {
  AlgebraContext ctx(5);
  CHECK(in_pbw_span(ctx, O(ctx, {1, 2, 3}) * O(ctx, {3, 4, 5}), 3));
  CHECK(in_pbw_span(ctx, O(ctx, {1, 2, 3}) * O(ctx, {1, 4, 5}), 3));
  CHECK(in_pbw_span(ctx, O(ctx, {1, 2, 3}) * O(ctx, {2, 3, 4}), 3));
  CHECK_FALSE(in_pbw_span(ctx, O(ctx, {1, 2, 3}), 2));
}

TEST_CASE("Gram ranks") {
  AlgebraContext c4(4);
  GramRank g = gram_rank_degree2(c4, 1, 2, 3, 4);
  CHECK(g.size == 3);
  CHECK(g.rank == 3);
  g = gram_rank_degree2(c4, 1, 2, 1, 2);
  CHECK(g.size == 1);
  CHECK(g.rank == 1);
  g = gram_rank_degree2(c4, 1, 2, 3, 3);
  CHECK(g.size == 1);
  CHECK(g.rank == 1);
  AlgebraContext c6(6);
  g = gram_rank_degree3(c6, {1, 2, 3, 4, 5, 6});
  CHECK(g.size == 15);
  CHECK(g.rank == 15);
  g = gram_rank_degree3(c6, {1, 1, 2, 2, 3, 3});
  CHECK(g.size < 15);
  CHECK(g.full_rank());
  AlgebraContext c5(5);
  g = gram_rank_degree3(c5, {1, 2, 3, 4, 5, 5});
  CHECK(g.size < 15);
  CHECK(g.full_rank());
}

TEST_CASE("kernel probes") {
  CHECK(kernel_probe_degree(4, 2) == 0);
  CHECK(kernel_probe_degree(4, 3) == 0);
  CHECK(kernel_probe_degree(4, 4) == relation_span_degree4(4));
  CHECK(relation_span_degree4(4) == 1);
  CHECK_THROWS_AS(kernel_probe_degree(6, 4, 1000), ResourceError);
}
