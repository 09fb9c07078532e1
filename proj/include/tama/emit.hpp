#pragma once

#include <string>
#include <variant>

#include "tama/ama.hpp"
#include "tama/uncross.hpp"

namespace tama {

enum class FigureFormat { dot, tikz };

/// Any of the three diagram kinds.
using AnyDiagram = std::variant<Diagram, TamaDiagram, AmaExtDiagram>;

/// Parses `D[...]`, `T[...]` or `AE[...]` text.
AnyDiagram parse_any_diagram(const std::string& text);

/// Vertices on a regular n-gon, vertex 1 at the top, numbered clockwise.
/// Directed chords get arrows, multiplicities become labels, black vertices
/// are filled. TikZ output is a standalone document.
std::string emit_diagram(const AnyDiagram& d, FigureFormat format);

}  // namespace tama
