#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "morsekit/complex.hpp"
#include "morsekit/simplex.hpp"

namespace morsekit {

/// A matched facet/coface pair; the dimension gap is exactly one.
struct GradientPair {
  Simplex face;
  Simplex coface;

  friend bool operator==(const GradientPair&, const GradientPair&) = default;
  friend std::strong_ordering operator<=>(const GradientPair& a, const GradientPair& b) {
    if (auto c = a.face <=> b.face; c != 0) return c;
    return a.coface <=> b.coface;
  }
};

/// Outcome of checking a pair set for the Morse matching conditions.
/// When invalid, either a doubly matched simplex or an explicit directed
/// cycle in the modified Hasse diagram is reported.
struct ValidationResult {
  bool valid = false;
  std::string reason;
  std::optional<Simplex> doubly_matched;
  std::vector<Simplex> cycle;
};

/// Critical simplex counts per dimension.
struct CriticalProfile {
  std::vector<int> m_d;
  int m = 0;
};

/// An ordered elementary-collapse sequence and the complex it leaves behind.
struct CollapseTrace {
  std::vector<GradientPair> steps;
  SimplicialComplex residue;
};

/// Result of replaying a gradient as a collapse sequence. When every pair
/// was consumed the trace certifies a collapse onto the residue.
struct GradientCollapse {
  CollapseTrace trace;
  std::vector<GradientPair> leftover;
  bool certified = false;
};

/// A monotonic integer function whose level sets are singletons or single
/// gradient pairs.
struct MorseFunction {
  std::map<Simplex, long long> values;

  long long at(const Simplex& s) const { return values.at(s); }
};

/**
 * Checks the two Morse matching conditions: each simplex in at most one
 * pair, and no directed cycle once matched arcs are reversed in the Hasse
 * diagram. Cycles cannot cross more than two consecutive dimension layers,
 * so the search runs per (d, d+1) layer.
 *
 * Throws std::invalid_argument for pairs that are not facet/coface pairs of
 * K at all; those are malformed inputs rather than failed matchings.
 */
ValidationResult validate(const SimplicialComplex& K, const std::vector<GradientPair>& pairs);

/// Counts unmatched simplices per dimension. Requires a valid gradient.
CriticalProfile critical_profile(const SimplicialComplex& K,
                                 const std::vector<GradientPair>& pairs);

/**
 * Greedily performs elementary collapses whose pair belongs to the gradient,
 * smallest (face, coface) first, until none applies. If the leftover pair
 * list is empty, the trace certifies that K collapses onto the residue.
 */
GradientCollapse collapse_by_gradient(const SimplicialComplex& K,
                                      const std::vector<GradientPair>& pairs);

/**
 * Integer Morse function induced by the gradient: contract each pair to a
 * unit, topologically order the resulting acyclic quotient of the Hasse
 * diagram, and assign descending ranks. Pairs share a value; any other pair
 * of comparable simplices is strictly ordered.
 */
MorseFunction morse_function(const SimplicialComplex& K, const std::vector<GradientPair>& pairs);

/**
 * Rewires the vertex/edge pairs of a valid gradient so that exactly one
 * vertex (p) stays critical: all pairs with face dimension >= 1 are kept,
 * and a depth-first spanning tree of the 1-skeleton minus the upward-matched
 * edges supplies new (vertex, edge) pairs. The result has m - 2(m0 - 1)
 * critical simplices, where m and m0 are the input totals.
 */
std::vector<GradientPair> unique_critical_vertex(const SimplicialComplex& K,
                                                 const std::vector<GradientPair>& pairs,
                                                 const std::string& p);

}  // namespace morsekit
