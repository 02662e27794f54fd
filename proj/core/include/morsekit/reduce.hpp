#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "morsekit/buildk.hpp"
#include "morsekit/complex.hpp"
#include "morsekit/digraph.hpp"
#include "morsekit/gradient.hpp"

namespace morsekit {

/// Optimum-inflation constant of the L-reduction audit.
inline constexpr int kMu = 78;

/// Result of stripping a directed graph down to an oriented one: the
/// remainder plus what was removed (k = pairs.size()).
struct OmasReduction {
  DirectedGraph oriented;
  std::vector<Edge> loops;
  std::vector<std::pair<Edge, Edge>> pairs;  // antiparallel, (u->v, v->u) with u < v
};

/// Removes all loops and both members of every antiparallel pair. The edge
/// count drops by #loops + 2k.
OmasReduction mas_to_omas_f(const DirectedGraph& G);

/**
 * Lifts an acyclic subgraph A of the oriented remainder back to G: keeps A
 * and adds, per removed antiparallel pair, the one edge consistent with the
 * lexicographic topological completion of A over all vertices. The result
 * is acyclic with exactly |A| + k edges.
 */
DirectedGraph mas_to_omas_g(const DirectedGraph& G, const DirectedGraph& A);

/// Wedge of n^(c-1) relabelled copies of K at its basepoint; the result has
/// (n-1)*n^(c-1) + 1 simplices. Requires K connected and nonempty; guarded
/// against oversized results.
PointedComplex amplify(const PointedComplex& K, int c);

/// A gradient on a built complex projected back to the graph: fas collects
/// the edges whose gadget copy holds a critical 2-simplex, subgraph is
/// (V, E \ fas) and is acyclic whenever the gradient is valid.
struct SolutionMap {
  std::set<Edge> fas;
  DirectedGraph subgraph;
};

SolutionMap solution_map_a(const DirectedGraph& G, const BuiltComplex& built,
                           const std::vector<GradientPair>& V);

/**
 * The gradient witnessing the optimum on a built complex: every gadget
 * keeps its 13 triangle pairs except that (omega_f, gamma_f) is dropped for
 * each f in F, leaving gamma_f critical; the vertex pairs are then rebuilt
 * so only the basepoint p stays critical in dimension 0. For F a minimum
 * feedback arc set the total critical count is 2|F| + beta_sum.
 */
std::vector<GradientPair> witness_gradient(const DirectedGraph& G, const BuiltComplex& built,
                                           const std::set<Edge>& F, const std::string& p);

/// One instance's worth of reduction bookkeeping; the two slack fields are
/// nonnegative exactly when the audited inequalities hold.
struct AuditReport {
  long long n_vertices = 0;
  long long n_edges = 0;
  long long minfas = 0;
  long long opt_3omas = 0;
  long long n_simplices = 0;
  std::vector<int> betti;
  long long betti_sum = 0;
  long long opt_maxmm = 0;  // n_simplices - 2*minfas - betti_sum
  long long m_maxmm = 0;    // regular (matched) count of the audited gradient
  long long m2 = 0;         // its critical 2-simplices
  long long m_3omas = 0;    // edge count of the mapped solution
  long long mu_slack = 0;     // 78*opt_3omas - opt_maxmm
  long long nu_slack_x2 = 0;  // (opt_maxmm - m_maxmm) - 2*(opt_3omas - m_3omas)
};

/// Audits one gradient on K(G) against exact oracles (min_fas_exact and the
/// optimum formula).
AuditReport l_reduction_audit(const DirectedGraph& G, const BuiltComplex& built,
                              const std::vector<GradientPair>& V);

/// Key=value view of a report, keys in sorted order.
std::map<std::string, long long> audit_kv(const AuditReport& r);

}  // namespace morsekit
