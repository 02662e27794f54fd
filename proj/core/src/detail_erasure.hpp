#pragma once

#include <vector>

#include "morsekit/complex.hpp"
#include "morsekit/gradient.hpp"

namespace morsekit::detail {

// Runs the greedy (edge, triangle) erasure to its fixpoint on the alive
// mask, smallest (edge, triangle) pair first. The mask must describe a
// downward-closed subset of K. Steps are appended when given.
void run_erasure(const SimplicialComplex& K, std::vector<char>& alive,
                 std::vector<GradientPair>* steps);

}  // namespace morsekit::detail
