#pragma once

#include <string>
#include <vector>

#include "tama/algebra.hpp"
#include "tama/gr.hpp"

namespace testing {

using namespace tama;

inline Factor X(int i) { return {Factor::Kind::x, i}; }
inline Factor Y(int i) { return {Factor::Kind::y, i}; }
inline Factor E(int i) { return {Factor::Kind::e, i}; }

inline WCElement word(const AlgebraContext& ctx, std::vector<Factor> w) { return word_product(ctx, w); }

inline std::vector<std::vector<int>> permutations_of(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  std::vector<std::vector<int>> out;
  do out.push_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

/// Distinct sequences of length k over 1..n (all orders).
inline std::vector<std::vector<int>> distinct_sequences(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::vector<bool> used(n + 1, false);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      cur.push_back(v);
      self(self);
      cur.pop_back();
      used[v] = false;
    }
  };
  rec(rec);
  return out;
}

}  // namespace testing
