#pragma once

// Independent reference implementations used only by the tests.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "tama/algebra.hpp"
#include "tama/gr.hpp"

namespace oracle {

using tama::Factor;
using tama::Rational;
using Word = std::vector<Factor>;

inline int rank(Factor::Kind k) { return k == Factor::Kind::x ? 0 : k == Factor::Kind::y ? 1 : 2; }

/// Normal ordering by single adjacent swaps: x's before y's before e's,
/// indices ascending within each kind.
inline tama::WCElement bubble_sort_product(int n, const Word& word) {
  std::map<std::vector<std::pair<int, int>>, Rational> done;
  std::vector<std::pair<Word, Rational>> work{{word, 1}};
  auto key = [](const Word& w) {
    std::vector<std::pair<int, int>> k;
    for (const auto& f : w) k.emplace_back(rank(f.kind), f.index);
    return k;
  };
  while (!work.empty()) {
    auto [w, c] = std::move(work.back());
    work.pop_back();
    std::size_t p = 0;
    for (; p + 1 < w.size(); ++p) {
      const Factor& a = w[p];
      const Factor& b = w[p + 1];
      const bool same = a.kind == b.kind;
      if (rank(a.kind) > rank(b.kind) || (same && a.index > b.index) ||
          (same && a.kind == Factor::Kind::e && a.index == b.index)) {
        break;
      }
    }
    if (p + 1 >= w.size()) {
      done[key(w)] += c;
      continue;
    }
    const Factor a = w[p];
    const Factor b = w[p + 1];
    Word swapped = w;
    std::swap(swapped[p], swapped[p + 1]);
    Word removed = w;
    removed.erase(removed.begin() + static_cast<long>(p), removed.begin() + static_cast<long>(p) + 2);
    if (a.kind == Factor::Kind::e && b.kind == Factor::Kind::e) {
      if (a.index == b.index) {
        work.emplace_back(removed, c);
      } else {
        work.emplace_back(swapped, -c);
      }
    } else if (a.kind == Factor::Kind::y && b.kind == Factor::Kind::x) {
      work.emplace_back(swapped, c);
      if (a.index == b.index) work.emplace_back(removed, c);
    } else {
      work.emplace_back(swapped, c);
    }
  }
  std::vector<std::pair<tama::Monomial, Rational>> terms;
  for (const auto& [k, c] : done) {
    tama::Monomial m;
    for (const auto& [r, i] : k) {
      if (r == 0) ++m.alpha[i - 1];
      if (r == 1) ++m.beta[i - 1];
      if (r == 2) m.gamma |= static_cast<std::uint16_t>(1u << (i - 1));
    }
    terms.emplace_back(m, c);
  }
  return tama::WCElement::from_terms(n, std::move(terms));
}

inline int omega(const Factor& u, const Factor& v) {
  if (u.index != v.index) return 0;
  if (u.kind == Factor::Kind::y && v.kind == Factor::Kind::x) return 1;
  if (u.kind == Factor::Kind::x && v.kind == Factor::Kind::y) return -1;
  return 0;
}

/// Permanent of (omega(u_i, v_j)) summed over all permutations.
inline Rational naive_permanent(const Word& u, const Word& v) {
  if (u.size() != v.size()) return 0;
  std::vector<int> perm(u.size());
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    Rational prod = 1;
    for (std::size_t i = 0; i < u.size(); ++i) prod *= omega(u[i], v[perm[i]]);
    total += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Average of the bubble-sort products over all m! orderings of the word.
inline tama::WCElement literal_quantization(int n, const Word& word) {
  std::vector<int> perm(word.size());
  std::iota(perm.begin(), perm.end(), 0);
  tama::WCElement sum(n);
  long count = 0;
  do {
    Word w;
    for (int i : perm) w.push_back(word[i]);
    sum += bubble_sort_product(n, w);
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum * Rational(1, count);
}

/// L_ij L_kl + L_ik L_lj + L_il L_jk in gr(WC).
inline tama::GrElement plucker(const tama::AlgebraContext& ctx, int i, int j, int k, int l) {
  return tama::gr_L(ctx, i, j) * tama::gr_L(ctx, k, l) + tama::gr_L(ctx, i, k) * tama::gr_L(ctx, l, j) +
         tama::gr_L(ctx, i, l) * tama::gr_L(ctx, j, k);
}

inline Word random_word(std::mt19937_64& rng, int n, int max_length, bool clifford = true) {
  std::uniform_int_distribution<int> len(0, max_length);
  std::uniform_int_distribution<int> kind(0, clifford ? 2 : 1);
  std::uniform_int_distribution<int> idx(1, n);
  Word w(len(rng));
  for (auto& f : w) f = {static_cast<Factor::Kind>(kind(rng)), idx(rng)};
  return w;
}

}  // namespace oracle
