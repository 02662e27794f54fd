#pragma once

#include <map>
#include <string>
#include <vector>

#include "morsekit/complex.hpp"
#include "morsekit/digraph.hpp"

namespace morsekit {

/// A total order on the edge set, first edge smallest.
using EdgeOrder = std::vector<Edge>;

/// Lexicographic order on (source, target).
EdgeOrder lex_order(const DirectedGraph& G);

/// Namespace prefix for the gadget copy of u->v: "u>v".
std::string edge_token(const Edge& e);

/// Post-quotient names of one gadget copy's distinguished cells.
struct GadgetNames {
  Simplex omega, eta, phi, psi, gamma;
  std::string q, r, s, t, u, v, w;

  friend bool operator==(const GadgetNames&, const GadgetNames&) = default;
};

/// Where each gadget copy's cells ended up after the identifications.
struct GadgetAtlas {
  std::map<Edge, GadgetNames> names;
  /// Every 2-simplex of the built complex lies in exactly one gadget copy.
  std::map<Simplex, Edge> owner;

  const GadgetNames& of(const Edge& e) const;
  const Edge& owner_of(const Simplex& triangle) const;
};

struct BuiltComplex {
  SimplicialComplex complex;
  GadgetAtlas atlas;
};

/// Throws std::invalid_argument unless G has no loops, no antiparallel
/// pairs, total degree <= 3 everywhere, and is weakly connected.
void check_oriented_deg3(const DirectedGraph& G);

/**
 * One gadget copy per edge of H, glued by the local degree rules:
 *   (a) vertex untouched by H: nothing;
 *   (b) H-sources: all s_e of the outgoing H-edges become one vertex;
 *   (c) H-sinks: all t_e of the incoming H-edges become one vertex;
 *   (d) G-indegree 1, G-outdegree 2 (in-edge j, out-edges k < l in the
 *       order): phi_j ~ omega_k via u_k~v_j, s_k~t_j; psi_j ~ omega_l via
 *       u_l~w_j, s_l~t_j -- each only when both edges lie in H;
 *   (e) G-outdegree 1 (out-edge j, in-edges k and possibly l): omega_j ~
 *       phi_k via u_j~v_k, s_j~t_k, and omega_j ~ phi_l via u_j~v_l,
 *       s_j~t_l -- again only for edges of H.
 * Identified vertices take the lexicographically smallest member as their
 * canonical name.
 *
 * Requires H to be a subgraph of G, G to satisfy check_oriented_deg3, and
 * vertex tokens free of the reserved characters '>' and '/'.
 */
BuiltComplex build_k(const DirectedGraph& G, const DirectedGraph& H, const EdgeOrder& order);

/// build_k(G, G, order).
BuiltComplex build_k_full(const DirectedGraph& G, const EdgeOrder& order);

/**
 * The relaxed variant: only vertex identifications. At every vertex with
 * both kinds of edges, s_j ~ t_i for every incoming i and outgoing j; pure
 * sources merge their s's, pure sinks their t's. No edges are identified,
 * and the result collapses to the undirected graph underlying G.
 */
SimplicialComplex build_k_tilde(const DirectedGraph& G);

}  // namespace morsekit
