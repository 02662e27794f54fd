#pragma once

#include "morsekit/complex.hpp"
#include "morsekit/gradient.hpp"

namespace morsekit {

/**
 * Maximal greedy (edge, triangle) collapse sequence: repeatedly removes the
 * lexicographically smallest (free edge, unique triangle coface) pair until
 * no triangle has a free edge. Greedy reaches the same 2-simplex set as any
 * other order, because triangles removable by some erasure form a single
 * confluent family. Requires dim K <= 2.
 */
CollapseTrace erase(const SimplicialComplex& K);

/// True when the maximal erasure leaves no 2-simplices behind.
bool is_erasable(const SimplicialComplex& K);

/**
 * True when some (edge, triangle) collapse sequence makes the edge free or
 * removes it; decided by whether the maximal erasure removes the edge or
 * every one of its 2-dimensional cofaces. The edge must belong to K and
 * dim K must be at most 2.
 */
bool eventually_free(const SimplicialComplex& K, const Simplex& edge);

}  // namespace morsekit
