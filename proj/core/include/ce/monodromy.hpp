#pragma once

#include <utility>
#include <vector>

#include "ce/laurent.hpp"

namespace ce {

enum class Turn { Left, Right };

// Trace of the k-th power of the 2x2 transport matrix attached to a closed
// curve: per visited edge a right turn contributes
// [[X^{1/2}, X^{1/2}], [0, X^{-1/2}]] and a left turn
// [[X^{1/2}, 0], [X^{-1/2}, X^{-1/2}]]. Exponents are returned on a doubled
// lattice (variable i of the result is X_i^{1/2}), so entry 2e means X_i^e.
LaurentPoly monodromy_trace(int nedges, const std::vector<std::pair<int, Turn>>& word,
                            int power);

} // namespace ce
