#include "tama/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace tama {

namespace {

std::vector<std::vector<Integer>> integer_rows(const RationalMatrix& m) {
  std::vector<std::vector<Integer>> rows(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer lcm = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = m(r, c).get_num() * (lcm / m(r, c).get_den());
  }
  return rows;
}

/// Fraction-free echelon reduction in place; returns (rank, sign of row swaps).
std::pair<std::size_t, int> bareiss_eliminate(std::vector<std::vector<Integer>>& a, std::size_t cols) {
  std::size_t rank = 0;
  int sign = 1;
  Integer prev = 1;
  const std::size_t rows = a.size();
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != rank) {
      std::swap(a[p], a[rank]);
      sign = -sign;
    }
    const Integer& pivot = a[rank][c];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer t = pivot * a[i][j] - a[i][c] * a[rank][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = pivot;
    ++rank;
  }
  return {rank, sign};
}

}  // namespace

std::size_t bareiss_rank(const RationalMatrix& m) {
  auto rows = integer_rows(m);
  return bareiss_eliminate(rows, m.cols()).first;
}

Rational bareiss_determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  Integer scale = 1;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer lcm = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(r, c).get_den_mpz_t());
    scale *= lcm;
  }
  auto rows = integer_rows(m);
  auto [rank, sign] = bareiss_eliminate(rows, m.cols());
  if (rank < m.rows()) return 0;
  Rational det = make_rational(rows.back().back() * sign, scale);
  det.canonicalize();
  return det;
}

SparseEchelon::Row SparseEchelon::to_integer_row(const SparseVector& v) {
  Integer lcm = 1;
  for (const auto& [c, q] : v) {
    if (q != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
  }
  Row row;
  for (const auto& [c, q] : v) {
    if (q != 0) row.emplace(c, q.get_num() * (lcm / q.get_den()));
  }
  return row;
}

SparseEchelon::Row SparseEchelon::reduce(Row row) const {
  auto lead = row.begin();
  while (lead != row.end()) {
    auto pit = pivots_.find(lead->first);
    if (pit == pivots_.end()) {
      ++lead;
      continue;
    }
    const Row& prow = pit->second;
    const Integer p = prow.begin()->second;
    const Integer f = lead->second;
    const std::size_t col = lead->first;
    // row <- p * row - f * prow, eliminating column `col`
    Row next;
    auto a = row.begin();
    auto b = prow.begin();
    while (a != row.end() || b != prow.end()) {
      if (b == prow.end() || (a != row.end() && a->first < b->first)) {
        next.emplace_hint(next.end(), a->first, p * a->second);
        ++a;
      } else if (a == row.end() || b->first < a->first) {
        next.emplace_hint(next.end(), b->first, -f * b->second);
        ++b;
      } else {
        Integer v = p * a->second - f * b->second;
        if (v != 0) next.emplace_hint(next.end(), a->first, std::move(v));
        ++a;
        ++b;
      }
    }
    Integer g = 0;
    for (const auto& [c, v] : next) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g > 1) {
      for (auto& [c, v] : next) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    }
    row = std::move(next);
    lead = row.upper_bound(col);
  }
  return row;
}

bool SparseEchelon::insert(const SparseVector& v) {
  Row row = reduce(to_integer_row(v));
  if (row.empty()) return false;
  // after reduction the leading column carries no pivot yet
  std::size_t col = row.begin()->first;
  pivots_.emplace(col, std::move(row));
  return true;
}

bool SparseEchelon::contains(const SparseVector& v) const { return reduce(to_integer_row(v)).empty(); }

}  // namespace tama
