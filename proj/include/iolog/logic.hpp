#pragma once

#include <vector>

#include "iolog/syntax.hpp"

namespace iolog {

// Semantic consequence over one algebra: for every assignment of the
// occurring atoms, the meet of the premise values lies below the conclusion
// value. With no premises the conclusion must evaluate to the lattice top
// under every assignment.
bool entails(const FiniteAlgebra& alg, const Binding& b,
             const std::vector<FormulaPtr>& premises, const Formula& conclusion);

// A nonempty element set is inconsistent when its meet is the lattice bottom.
bool inconsistent(const FiniteAlgebra& alg, ElementSet s);  // EmptySet on empty input

// {top} when the binding carries a top constant, empty otherwise.
ElementSet theorems(const FiniteAlgebra& alg, const Binding& b);

}  // namespace iolog
