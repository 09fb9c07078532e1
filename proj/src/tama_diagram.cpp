#include "tama/tama_diagram.hpp"

#include <regex>

namespace tama {

int chord_index(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > n || i == j) throw AlgebraError("invalid chord {" + std::to_string(i) + "," + std::to_string(j) + "}");
  // chords (1,2)..(1,n), (2,3).. precede row i
  return (i - 1) * n - (i - 1) * i / 2 + (j - i - 1);
}

Chord chord_at(int n, int index) {
  for (int i = 1; i < n; ++i) {
    int row = n - i;
    if (index < row) return {i, i + 1 + index};
    index -= row;
  }
  throw AlgebraError("chord index out of range");
}

TamaDiagram::TamaDiagram(int n) : n_(n), counts_(static_cast<std::size_t>(chord_count(n)), 0) {
  if (n < 2 || n > kMaxDim) throw AlgebraError("diagram needs 2 <= n <= " + std::to_string(kMaxDim));
}

TamaDiagram::TamaDiagram(int n, std::initializer_list<std::pair<Chord, int>> chords) : TamaDiagram(n) {
  for (const auto& [c, m] : chords) add(c.i, c.j, m);
}

int TamaDiagram::multiplicity(int i, int j) const {
  if (i == j) return 0;
  return counts_[static_cast<std::size_t>(chord_index(n_, i, j))];
}

void TamaDiagram::set(int i, int j, int m) {
  if (m < 0) throw AlgebraError("negative multiplicity");
  counts_[static_cast<std::size_t>(chord_index(n_, i, j))] = m;
}

void TamaDiagram::add(int i, int j, int delta) { set(i, j, multiplicity(i, j) + delta); }

int TamaDiagram::degree() const {
  int d = 0;
  for (int m : counts_) d += m;
  return d;
}

std::vector<std::pair<Chord, int>> TamaDiagram::chords() const {
  std::vector<std::pair<Chord, int>> out;
  for (std::size_t k = 0; k < counts_.size(); ++k) {
    if (counts_[k] > 0) out.emplace_back(chord_at(n_, static_cast<int>(k)), counts_[k]);
  }
  return out;
}

TamaDiagram TamaDiagram::operator*(const TamaDiagram& other) const {
  if (n_ != other.n_) throw AlgebraError("diagram size mismatch");
  TamaDiagram out = *this;
  for (std::size_t k = 0; k < counts_.size(); ++k) out.counts_[k] += other.counts_[k];
  return out;
}

bool TamaDiagram::divisible_by(const TamaDiagram& other) const {
  if (n_ != other.n_) return false;
  for (std::size_t k = 0; k < counts_.size(); ++k) {
    if (other.counts_[k] > counts_[k]) return false;
  }
  return true;
}

TamaDiagram TamaDiagram::quotient(const TamaDiagram& other) const {
  if (!divisible_by(other)) throw AlgebraError("diagram is not divisible");
  TamaDiagram out = *this;
  for (std::size_t k = 0; k < counts_.size(); ++k) out.counts_[k] -= other.counts_[k];
  return out;
}

std::strong_ordering operator<=>(const TamaDiagram& a, const TamaDiagram& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t k = 0; k < a.counts_.size(); ++k) {
    if (auto c = b.counts_[k] <=> a.counts_[k]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string format_tama_diagram(const TamaDiagram& d) {
  std::string out = "T[n=" + std::to_string(d.n()) + "]:";
  auto chords = d.chords();
  if (chords.empty()) return out + " 1";
  for (const auto& [c, m] : chords) {
    out += ' ';
    if (d.n() <= 9) {
      out += std::to_string(c.i) + std::to_string(c.j);
    } else {
      out += "(" + std::to_string(c.i) + "," + std::to_string(c.j) + ")";
    }
    out += "^" + std::to_string(m);
  }
  return out;
}

TamaDiagram parse_tama_diagram(const std::string& text) {
  static const std::regex head(R"(^\s*T\[n=(\d+)\]:\s*(.*?)\s*$)");
  static const std::regex item(R"((?:(\d)(\d)|\((\d+),(\d+)\))\^(\d+))");
  std::smatch m;
  if (!std::regex_match(text, m, head)) throw AlgebraError("malformed TAMA diagram: '" + text + "'");
  TamaDiagram d(std::stoi(m[1].str()));
  std::string body = m[2].str();
  if (body == "1") return d;
  std::size_t pos = 0;
  while (pos < body.size()) {
    if (body[pos] == ' ') {
      ++pos;
      continue;
    }
    std::smatch t;
    std::string rest = body.substr(pos);
    if (!std::regex_search(rest, t, item, std::regex_constants::match_continuous)) {
      throw AlgebraError("malformed TAMA diagram chord: '" + rest + "'");
    }
    int i = t[1].matched ? std::stoi(t[1].str()) : std::stoi(t[3].str());
    int j = t[2].matched ? std::stoi(t[2].str()) : std::stoi(t[4].str());
    d.add(i, j, std::stoi(t[5].str()));
    pos += static_cast<std::size_t>(t.length());
  }
  return d;
}

void add_term(OPolynomial& p, const TamaDiagram& d, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = p.try_emplace(d, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

OPolynomial add(const OPolynomial& a, const OPolynomial& b, const Rational& scale) {
  OPolynomial out = a;
  for (const auto& [d, c] : b) add_term(out, d, scale * c);
  return out;
}

OPolynomial multiply(const OPolynomial& a, const OPolynomial& b) {
  OPolynomial out;
  for (const auto& [da, ca] : a) {
    for (const auto& [db, cb] : b) add_term(out, da * db, ca * cb);
  }
  return out;
}

OPolynomial x_symbol(int n, int i, int j) {
  OPolynomial out;
  if (i == j) return out;
  TamaDiagram d(n);
  d.add(i, j, 1);
  out.emplace(d, i < j ? 1 : -1);
  return out;
}

int degree(const OPolynomial& p) {
  int d = -1;
  for (const auto& [t, c] : p) d = std::max(d, t.degree());
  return d;
}

std::string format_opolynomial(const OPolynomial& p) {
  if (p.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [d, c] : p) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    first = false;
    out += format_rational(a) + " * ";
    std::string mono;
    for (const auto& [ch, m] : d.chords()) {
      if (!mono.empty()) mono += ' ';
      mono += "O" + std::to_string(ch.i) + std::to_string(ch.j);
      if (m > 1) mono += "^" + std::to_string(m);
    }
    out += mono.empty() ? "1" : mono;
  }
  return out;
}

GrElement gr_image(const AlgebraContext& ctx, const TamaDiagram& d) {
  GrElement out = gr_constant(ctx, 1);
  for (const auto& [c, m] : d.chords()) out = out * gr_power(gr_O(ctx, c.i, c.j), static_cast<unsigned>(m));
  return out;
}

GrElement gr_image(const AlgebraContext& ctx, const OPolynomial& p) {
  TermAccumulator acc;
  for (const auto& [d, c] : p) {
    const GrElement image = gr_image(ctx, d);
    for (const auto& [m, v] : image.terms()) accumulate(acc, m, c * v);
  }
  return GrElement::from_accumulator(ctx.n(), std::move(acc));
}

namespace {

void enumerate_rec(TamaDiagram& cur, int chord, int remaining, std::vector<TamaDiagram>& out) {
  const int total = static_cast<int>(cur.counts().size());
  if (chord == total - 1) {
    Chord c = chord_at(cur.n(), chord);
    cur.set(c.i, c.j, remaining);
    out.push_back(cur);
    cur.set(c.i, c.j, 0);
    return;
  }
  Chord c = chord_at(cur.n(), chord);
  for (int m = remaining; m >= 0; --m) {
    cur.set(c.i, c.j, m);
    enumerate_rec(cur, chord + 1, remaining - m, out);
  }
  cur.set(c.i, c.j, 0);
}

}  // namespace

std::vector<TamaDiagram> enumerate_tama_diagrams(int n, int d) {
  std::vector<TamaDiagram> out;
  TamaDiagram cur(n);
  enumerate_rec(cur, 0, d, out);
  return out;
}

}  // namespace tama
