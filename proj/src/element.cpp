#include "tama/element.hpp"

#include <bit>
#include <cstring>

namespace tama {

int Monomial::x_degree() const {
  int d = 0;
  for (auto a : alpha) d += a;
  return d;
}

int Monomial::y_degree() const {
  int d = 0;
  for (auto b : beta) d += b;
  return d;
}

int Monomial::clifford_degree() const { return std::popcount(gamma); }

int Monomial::max_index() const {
  int m = 0;
  for (int i = 0; i < kMaxDim; ++i) {
    if (alpha[i] || beta[i] || (gamma >> i & 1u)) m = i + 1;
  }
  return m;
}

bool monomial_less(const Monomial& a, const Monomial& b) {
  int da = a.degree();
  int db = b.degree();
  if (da != db) return da < db;
  if (a.alpha != b.alpha) return a.alpha < b.alpha;
  if (a.beta != b.beta) return a.beta < b.beta;
  // gamma compared as the bit sequence (gamma_1, gamma_2, ...)
  unsigned diff = a.gamma ^ b.gamma;
  if (diff == 0) return false;
  unsigned low = static_cast<unsigned>(std::countr_zero(diff));
  return (b.gamma >> low & 1u) != 0;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::uint64_t words[4] = {0, 0, 0, 0};
  static_assert(2 * kMaxDim + 2 <= sizeof(words));
  auto* bytes = reinterpret_cast<unsigned char*>(words);
  std::memcpy(bytes, m.alpha.data(), kMaxDim);
  std::memcpy(bytes + kMaxDim, m.beta.data(), kMaxDim);
  std::memcpy(bytes + 2 * kMaxDim, &m.gamma, sizeof(m.gamma));
  std::uint64_t h = 0x9E3779B97F4A7C15ull;
  for (auto w : words) {
    h ^= w + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
    h *= 0xFF51AFD7ED558CCDull;
  }
  return static_cast<std::size_t>(h ^ (h >> 33));
}

std::string format_monomial(const Monomial& m) {
  std::string out;
  auto append = [&out](char sym, int index, int exponent) {
    if (!out.empty()) out += ' ';
    out += sym;
    out += std::to_string(index);
    if (exponent > 1) out += "^" + std::to_string(exponent);
  };
  for (int i = 0; i < kMaxDim; ++i) {
    if (m.alpha[i]) append('x', i + 1, m.alpha[i]);
  }
  for (int i = 0; i < kMaxDim; ++i) {
    if (m.beta[i]) append('y', i + 1, m.beta[i]);
  }
  for (int i = 0; i < kMaxDim; ++i) {
    if (m.gamma >> i & 1u) append('e', i + 1, 1);
  }
  return out.empty() ? "1" : out;
}

void accumulate(TermAccumulator& acc, const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = acc.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) acc.erase(it);
  }
}

std::string format_terms(const std::vector<std::pair<Monomial, Rational>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    out += format_rational(mag);
    if (!m.is_one()) out += " * " + format_monomial(m);
  }
  return out;
}

}  // namespace tama
