#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tama/uncross.hpp"

namespace tama {

/// Computed vs published coefficients in the expansion of O13^2 O24.
struct FigureSixTerm {
  AmaExtDiagram diagram;
  Rational computed;
  Rational printed;
};
std::vector<FigureSixTerm> figure_six_comparison();

/// All ascending k-subsets of {1..n}.
std::vector<std::vector<int>> ascending_subsets(int n, int k);

}  // namespace tama
