#include "tama/emit.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <vector>

namespace tama {

namespace {

struct Edge {
  int from;
  int to;
  bool directed;
  int label;  // 0 for none
};

struct Layout {
  int n = 0;
  std::vector<Edge> edges;
  std::uint16_t black = 0;
  bool coloured = false;
};

Layout layout_of(const AnyDiagram& any) {
  Layout l;
  if (const auto* d = std::get_if<Diagram>(&any)) {
    l.n = d->n();
    for (const Chord& c : d->chords()) l.edges.push_back({c.i, c.j, true, 0});
  } else if (const auto* t = std::get_if<TamaDiagram>(&any)) {
    l.n = t->n();
    for (const auto& [c, m] : t->chords()) l.edges.push_back({c.i, c.j, false, m});
  } else {
    const auto& a = std::get<AmaExtDiagram>(any);
    l.n = a.chords.n();
    l.black = a.black;
    l.coloured = true;
    for (const auto& [c, m] : a.chords.chords()) l.edges.push_back({c.i, c.j, false, m});
  }
  return l;
}

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", std::abs(v) < 5e-5 ? 0.0 : v);
  return buf;
}

std::pair<double, double> vertex_position(int k, int n) {
  const double angle = std::numbers::pi / 2 - 2 * std::numbers::pi * (k - 1) / n;
  return {1.5 * std::cos(angle), 1.5 * std::sin(angle)};
}

std::string emit_dot(const Layout& l) {
  std::ostringstream out;
  out << "graph diagram {\n  layout=neato;\n  node [shape=circle, width=0.3, fixedsize=true];\n";
  for (int k = 1; k <= l.n; ++k) {
    auto [x, y] = vertex_position(k, l.n);
    out << "  v" << k << " [label=\"" << k << "\", pos=\"" << fixed(x) << "," << fixed(y) << "!\"";
    if (l.coloured) out << ((l.black >> (k - 1) & 1u) ? ", style=filled, fillcolor=black, fontcolor=white" : ", style=solid");
    out << "];\n";
  }
  for (const Edge& e : l.edges) {
    out << "  v" << e.from << " -- v" << e.to << " [";
    out << (e.directed ? "dir=forward" : "dir=none");
    if (e.label > 1) out << ", label=\"" << e.label << "\"";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string emit_tikz(const Layout& l) {
  std::ostringstream out;
  out << "\\documentclass[tikz]{standalone}\n\\begin{document}\n\\begin{tikzpicture}\n";
  for (int k = 1; k <= l.n; ++k) {
    auto [x, y] = vertex_position(k, l.n);
    std::string style = "draw, circle, inner sep=1.5pt";
    if (l.coloured) style += (l.black >> (k - 1) & 1u) ? ", fill=black" : ", fill=white";
    out << "  \\node[" << style << "] (v" << k << ") at (" << fixed(x) << "," << fixed(y) << ") {};\n";
    out << "  \\node at (" << fixed(x * 1.25) << "," << fixed(y * 1.25) << ") {$" << k << "$};\n";
  }
  for (const Edge& e : l.edges) {
    out << "  \\draw[blue, thick" << (e.directed ? ", ->" : "") << "] (v" << e.from << ") -- (v" << e.to << ")";
    if (e.label > 1) out << " node[midway, fill=white, inner sep=1pt] {$" << e.label << "$}";
    out << ";\n";
  }
  out << "\\end{tikzpicture}\n\\end{document}\n";
  return out.str();
}

}  // namespace

AnyDiagram parse_any_diagram(const std::string& text) {
  std::size_t start = text.find_first_not_of(" \t");
  if (start == std::string::npos) throw AlgebraError("empty diagram text");
  if (text.compare(start, 2, "AE") == 0) return parse_ama_ext(text);
  if (text[start] == 'T') return parse_tama_diagram(text);
  if (text[start] == 'D') return parse_diagram(text);
  throw AlgebraError("diagram text must start with D[, T[ or AE[");
}

std::string emit_diagram(const AnyDiagram& d, FigureFormat format) {
  const Layout l = layout_of(d);
  return format == FigureFormat::dot ? emit_dot(l) : emit_tikz(l);
}

}  // namespace tama
