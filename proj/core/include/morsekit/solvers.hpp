#pragma once

#include <functional>
#include <random>
#include <set>

#include "morsekit/complex.hpp"
#include "morsekit/digraph.hpp"
#include "morsekit/gradient.hpp"

namespace morsekit {

/// Budgets for the exact searches. Exceeding a budget never yields a wrong
/// answer: results carry an explicit exactness flag instead.
struct SolverConfig {
  long long node_budget = 10'000'000;
  double time_budget_s = 0;  // 0 disables the time check
  bool deterministic = true;
};

struct MatchingResult {
  std::vector<GradientPair> pairs;
  CriticalProfile profile;
  bool optimal = false;
  long long nodes = 0;
};

/// An erasability certificate: deleting the listed 2-simplices and replaying
/// the trace leaves a complex without 2-simplices.
struct ErCertificate {
  std::vector<Simplex> removed;
  CollapseTrace trace;
};

struct ErResult {
  int value = 0;
  ErCertificate certificate;
  bool exact = false;
};

struct CollapsibilityResult {
  bool collapsible = false;
  CollapseTrace trace;  // reaches a single vertex when collapsible
  long long residues = 0;
  bool exact = false;
};

struct FasResult {
  int value = 0;
  std::set<Edge> edges;
};

struct MasResult {
  int value = 0;
  DirectedGraph subgraph;
};

enum class CollapsibilityAnswer { Collapsible, NotCollapsible };

/**
 * Deterministic collapse-order gradient: repeatedly performs the smallest
 * available elementary collapse and, when stuck, removes the smallest
 * maximal simplex of highest dimension as a critical cell. Always valid;
 * optimal exactly when it matches the Betti lower bound.
 */
std::vector<GradientPair> greedy_gradient(const SimplicialComplex& K);

/// Maximal plain greedy collapse (no gradient): smallest free pair first,
/// until no free face remains.
CollapseTrace greedy_collapse(const SimplicialComplex& K);

/**
 * Random collapse-order gradient: like greedy_gradient with random choices,
 * then each pair independently dropped with the given probability. Any
 * subset of a valid matching stays valid, so the result always validates.
 */
std::vector<GradientPair> random_gradient(const SimplicialComplex& K, std::mt19937& rng,
                                          double drop_probability = 0.0);

/**
 * Branch-and-bound minimization of the total critical count over all valid
 * gradients. Branches on the smallest unmatched simplex of highest
 * dimension; prunes with the Betti-sum lower bound and exits early when the
 * bound is met. Deterministic for a fixed config.
 */
MatchingResult optimal_matching(const SimplicialComplex& K, const SolverConfig& config = {});

/**
 * Minimum number of 2-simplices whose deletion leaves an erasable complex,
 * found by iterative deepening over deletion sets; candidate deletions are
 * the (all internal) 2-simplices of intermediate erasure fixpoints, and
 * fixpoints are memoized. Requires dim K <= 2.
 */
ErResult er_exact(const SimplicialComplex& K, const SolverConfig& config = {});

/**
 * Exhaustive elementary-collapse search with memoized residues: true iff
 * some collapse sequence reaches a single vertex.
 */
CollapsibilityResult is_collapsible_exact(const SimplicialComplex& K,
                                          const SolverConfig& config = {});

/// Exact minimum feedback arc set (loops always belong to it), via dynamic
/// programming over vertex subsets. Throws when the graph is too large.
FasResult min_fas_exact(const DirectedGraph& G);

/// Exact maximum acyclic subgraph; complementary to min_fas_exact.
MasResult max_acyclic_exact(const DirectedGraph& G);

/**
 * Orders the vertices lexicographically and keeps the larger of the forward
 * and backward edge sets. The result is acyclic; on loop-free graphs it
 * retains at least half of the edges, rounded up.
 */
DirectedGraph mas_half_approx(const DirectedGraph& G);

/**
 * Decides collapsibility of a connected complex by amplifying it (wedge of
 * n^(c-1) copies) and counting the critical simplices returned by the given
 * minimization procedure: fewer than n^(c-1) means collapsible. A complex
 * that fails to collapse forces more than n^(c-1) criticals on the wedge,
 * so the not-collapsible answer is reliable for any valid gradient; the
 * collapsible answer is exact when the procedure is exact. The one-simplex
 * complex is answered directly.
 */
CollapsibilityAnswer algorithm_B(
    const SimplicialComplex& K, int c,
    const std::function<std::vector<GradientPair>(const SimplicialComplex&)>& minmm_solver);

}  // namespace morsekit
