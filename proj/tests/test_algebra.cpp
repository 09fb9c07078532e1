#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "tama/linalg.hpp"
#include "tama/pairing.hpp"
#include "tama/tama.hpp"

using namespace testing;

TEST_CASE("normal ordering of generators") {
  AlgebraContext ctx(3);
  CHECK(format(gen_y(ctx, 1) * gen_x(ctx, 1)) == "1/1 + 1/1 * x1 y1");
  CHECK(gen_e(ctx, 1) * gen_e(ctx, 1) == constant(ctx, 1));
  CHECK(gen_e(ctx, 2) * gen_e(ctx, 1) == -(gen_e(ctx, 1) * gen_e(ctx, 2)));
  CHECK(gen_y(ctx, 2) * gen_x(ctx, 1) == gen_x(ctx, 1) * gen_y(ctx, 2));
  CHECK(gen_e(ctx, 1) * gen_x(ctx, 2) == gen_x(ctx, 2) * gen_e(ctx, 1));
  CHECK(format(WCElement(3)) == "0");
}

TEST_CASE("index validation") {
  AlgebraContext ctx(3);
  CHECK_THROWS_AS(gen_x(ctx, 0), AlgebraError);
  CHECK_THROWS_AS(gen_e(ctx, 4), AlgebraError);
  CHECK_THROWS_AS(AlgebraContext(kMaxDim + 1), AlgebraError);
  CHECK_THROWS_AS(gen_x(ctx, 1) + gen_x(AlgebraContext(4), 1), AlgebraError);
}

TEST_CASE("graded commutators") {
  AlgebraContext ctx(3);
  CHECK(graded_commutator(gen_y(ctx, 1), gen_x(ctx, 1)) == constant(ctx, 1));
  CHECK(graded_commutator(gen_e(ctx, 1), gen_e(ctx, 2)).is_zero());
  CHECK(graded_commutator(gen_e(ctx, 1), gen_e(ctx, 1)) == constant(ctx, 2));
  const auto osp = osp_generators(ctx);
  for (int i = 1; i <= 3; ++i) CHECK(graded_commutator(osp.dirac, gen_x(ctx, i)) == gen_e(ctx, i));
  CHECK_THROWS_AS(graded_commutator(gen_e(ctx, 1) + constant(ctx, 1), gen_e(ctx, 2)), AlgebraError);
}

TEST_CASE("products agree with the single-swap rewriter") {
  std::mt19937_64 rng(20240611);
  for (int t = 0; t < 400; ++t) {
    const int n = 1 + t % 4;
    AlgebraContext ctx(n);
    const auto w = oracle::random_word(rng, n, 6);
    REQUIRE(word_product(ctx, w) == oracle::bubble_sort_product(n, w));
  }
}

TEST_CASE("associativity on random monomials") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 150; ++t) {
    const int n = 1 + t % 4;
    AlgebraContext ctx(n);
    const WCElement u = word_product(ctx, oracle::random_word(rng, n, 4));
    const WCElement v = word_product(ctx, oracle::random_word(rng, n, 4));
    const WCElement w = word_product(ctx, oracle::random_word(rng, n, 4)) + constant(ctx, Rational(1, 3));
    REQUIRE((u * v) * w == u * (v * w));
  }
}

TEST_CASE("Kostant pairing examples") {
  AlgebraContext ctx(2);
  CHECK(kostant_pairing(gen_x(ctx, 1) * gen_y(ctx, 2), gen_x(ctx, 2) * gen_y(ctx, 1)) == -1);
  CHECK(kostant_pairing(power(gen_x(ctx, 1), 2), power(gen_y(ctx, 1), 2)) == 2);
  CHECK(kostant_pairing(gen_x(ctx, 1), gen_x(ctx, 1)) == 0);
  CHECK(kostant_bruteforce(std::vector{X(1), X(1)}, std::vector{Y(1), Y(1)}) == 2);
  CHECK(kostant_bruteforce(std::vector{Y(1)}, std::vector{X(1)}) == 1);
  CHECK(kostant_bruteforce(std::vector{X(1)}, std::vector{Y(2)}) == 0);
  CHECK_THROWS_AS(kostant_pairing(gen_e(ctx, 1), gen_e(ctx, 1)), AlgebraError);
}

TEST_CASE("Ryser permanent agrees with the naive permanent") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    const auto u = oracle::random_word(rng, 3, 5, false);
    auto v = oracle::random_word(rng, 3, 5, false);
    v.resize(u.size(), X(1));
    REQUIRE(kostant_bruteforce(u, v) == oracle::naive_permanent(u, v));
  }
}

TEST_CASE("Kostant orthogonality on the monomial basis") {
  // symbols x^a y^b with exponents up to 2 in n = 2
  std::vector<Monomial> basis;
  for (int a1 = 0; a1 <= 2; ++a1)
    for (int a2 = 0; a2 <= 2; ++a2)
      for (int b1 = 0; b1 <= 2; ++b1)
        for (int b2 = 0; b2 <= 2; ++b2) {
          Monomial m;
          m.alpha[0] = a1;
          m.alpha[1] = a2;
          m.beta[0] = b1;
          m.beta[1] = b2;
          basis.push_back(m);
        }
  for (const auto& u : basis) {
    for (const auto& v : basis) {
      const bool dual = u.alpha == v.beta && u.beta == v.alpha;
      REQUIRE((kostant_monomial(u, v) != 0) == dual);
    }
  }
}

TEST_CASE("closed form through Q_w equals the permanent for all short words") {
  AlgebraContext ctx(3);
  std::vector<std::vector<Factor>> words{{}};
  for (int len = 1; len <= 3; ++len) {
    std::vector<std::vector<Factor>> next;
    for (const auto& w : words) {
      if (static_cast<int>(w.size()) != len - 1) continue;
      for (int i = 1; i <= 3; ++i) {
        for (Factor f : {X(i), Y(i)}) {
          auto v = w;
          v.push_back(f);
          next.push_back(v);
        }
      }
    }
    words.insert(words.end(), next.begin(), next.end());
  }
  std::vector<WCElement> q;
  for (const auto& w : words) q.push_back(quantize_w(ctx, w));
  for (std::size_t a = 0; a < words.size(); ++a) {
    for (std::size_t b = 0; b < words.size(); ++b) {
      REQUIRE(kostant_pairing(q[a], q[b]) == kostant_bruteforce(words[a], words[b]));
    }
  }
}

TEST_CASE("determinant and beta pairings") {
  AlgebraContext ctx(2);
  const WCElement e12 = gen_e(ctx, 1) * gen_e(ctx, 2);
  CHECK(det_pairing(e12, e12) == 1);
  CHECK(det_pairing(gen_e(ctx, 1), gen_e(ctx, 2)) == 0);
  CHECK(det_pairing(e12, -e12) == -1);
  CHECK(beta_pairing(gen_x(ctx, 1) * gen_y(ctx, 2) * gen_e(ctx, 1), gen_x(ctx, 2) * gen_y(ctx, 1) * gen_e(ctx, 1)) == -1);
  CHECK(beta_pairing(gen_e(ctx, 1), gen_e(ctx, 1)) == 1);
  CHECK(beta_pairing(gen_x(ctx, 1), gen_e(ctx, 1)) == 0);
}

TEST_CASE("beta is nondegenerate up to degree 3") {
  AlgebraContext ctx(2);
  std::vector<GrElement> basis;
  for (int a1 = 0; a1 <= 3; ++a1)
    for (int a2 = 0; a2 + a1 <= 3; ++a2)
      for (int b1 = 0; b1 + a2 + a1 <= 3; ++b1)
        for (int b2 = 0; b2 + b1 + a2 + a1 <= 3; ++b2)
          for (unsigned g = 0; g < 4; ++g) {
            Monomial m;
            m.alpha[0] = a1;
            m.alpha[1] = a2;
            m.beta[0] = b1;
            m.beta[1] = b2;
            m.gamma = static_cast<std::uint16_t>(g);
            if (m.degree() <= 3) basis.push_back(GrElement(2, m, 1));
          }
  RationalMatrix gram(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) gram(i, j) = beta_pairing(basis[i], basis[j]);
  CHECK(bareiss_rank(gram) == basis.size());
}

TEST_CASE("quantization maps") {
  AlgebraContext ctx(2);
  CHECK(quantize_w(ctx, std::vector{Y(1), X(1)}) == gen_x(ctx, 1) * gen_y(ctx, 1) + constant(ctx, Rational(1, 2)));
  CHECK(quantize_w(ctx, std::vector{X(1), X(1)}) == power(gen_x(ctx, 1), 2));
  CHECK(quantize_w(ctx, std::vector{X(1), Y(2)}) == gen_x(ctx, 1) * gen_y(ctx, 2));
  CHECK(quantize_c(ctx, std::vector{1, 2}) == gen_e(ctx, 1) * gen_e(ctx, 2));
  CHECK(quantize_c(ctx, std::vector{1, 1}).is_zero());
  CHECK(quantize_c(ctx, std::vector{2, 1}) == -(gen_e(ctx, 1) * gen_e(ctx, 2)));
  std::mt19937_64 rng(3);
  for (int t = 0; t < 60; ++t) {
    const auto w = oracle::random_word(rng, 2, 5, false);
    REQUIRE(quantize_w(ctx, w) == oracle::literal_quantization(2, w));
  }
}

TEST_CASE("symbol map inverts quantization") {
  AlgebraContext ctx(2);
  const auto w = std::vector{Y(1), X(1), Y(1)};
  GrElement expected = gr_y(ctx, 1) * gr_x(ctx, 1) * gr_y(ctx, 1);
  CHECK(symbol_of(quantize_w(ctx, w)) == expected);
}

TEST_CASE("Clifford words") {
  AlgebraContext ctx(5);
  auto e = [&](std::vector<int> a) { return clifford_word(ctx, a); };
  CHECK(e({1, 2, 3}) == gen_e(ctx, 1) * gen_e(ctx, 2) * gen_e(ctx, 3));
  CHECK(e({2, 1}) == -e({1, 2}));
  CHECK(e({1, 2}) * e({1, 2, 3, 4}) == -e({3, 4}));
  CHECK(e({1, 1}) == constant(ctx, 1));
}

TEST_CASE("Clifford sign identities for all distinct sequences") {
  AlgebraContext ctx(5);
  for (int k = 2; k <= 5; ++k) {
    const int tri = (k * (k - 1) / 2) % 2 ? -1 : 1;
    for (const auto& a : distinct_sequences(5, k)) {
      for (int p = 0; p < k; ++p) {
        for (int q = p + 1; q < k; ++q) {
          std::vector<int> rest;
          for (int t = 0; t < k; ++t)
            if (t != p && t != q) rest.push_back(a[t]);
          const int sign = (p + q) % 2 ? -1 : 1;  // (-1)^{p+q} with 1-based p, q
          const WCElement e_a = clifford_word(ctx, a);
          const WCElement e_rest = clifford_word(ctx, rest);
          const WCElement e_p = gen_e(ctx, a[p]);
          const WCElement e_q = gen_e(ctx, a[q]);
          REQUIRE(e_q * e_p * e_rest == Rational(sign) * e_a);
          REQUIRE(e_rest * e_a == Rational(tri * sign) * (e_p * e_q));
          REQUIRE(e_p * e_q * e_a == Rational(sign) * e_rest);
        }
      }
    }
  }
}

TEST_CASE("parity") {
  AlgebraContext ctx(2);
  CHECK(parity(gen_e(ctx, 1)) == Parity::odd);
  CHECK(parity(gen_x(ctx, 1)) == Parity::even);
  CHECK(parity(gen_e(ctx, 1) + constant(ctx, 1)) == Parity::inhomogeneous);
}
