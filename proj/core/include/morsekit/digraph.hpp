#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace morsekit {

using Edge = std::pair<std::string, std::string>;

/**
 * A simple directed graph on string-token vertices. Loops and antiparallel
 * edge pairs are allowed; parallel duplicates of one edge are not. Vertex
 * and edge iteration order is lexicographic, which all deterministic
 * algorithms below rely on.
 */
class DirectedGraph {
 public:
  void add_vertex(const std::string& v) { verts_.insert(v); }
  /// Inserts u -> v (adding endpoints); returns false if already present.
  bool add_edge(const std::string& u, const std::string& v);

  const std::set<std::string>& vertices() const { return verts_; }
  const std::set<Edge>& edges() const { return edges_; }
  int num_vertices() const { return static_cast<int>(verts_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  bool has_vertex(const std::string& v) const { return verts_.count(v) > 0; }
  bool has_edge(const std::string& u, const std::string& v) const {
    return edges_.count({u, v}) > 0;
  }

  int in_degree(const std::string& v) const;
  int out_degree(const std::string& v) const;
  std::vector<Edge> in_edges(const std::string& v) const;
  std::vector<Edge> out_edges(const std::string& v) const;

  std::vector<Edge> loops() const;
  /// Antiparallel pairs {(u,v),(v,u)}, reported once with u < v.
  std::vector<std::pair<Edge, Edge>> antiparallel_pairs() const;

  /// No loops and no antiparallel pairs.
  bool is_oriented() const { return loops().empty() && antiparallel_pairs().empty(); }
  /// Max total degree (in + out) over the vertices; -1 when empty.
  int max_total_degree() const;

  bool weakly_connected() const;
  bool is_acyclic() const;

  /// Topological order, smallest available token first. Throws when cyclic.
  std::vector<std::string> topological_order() const;

  /// Same vertex set, edge set restricted to the given edges.
  DirectedGraph edge_subgraph(const std::set<Edge>& keep) const;

  /// Every edge of other is an edge of this graph.
  bool contains_edges_of(const DirectedGraph& other) const;

  friend bool operator==(const DirectedGraph&, const DirectedGraph&) = default;

 private:
  std::set<std::string> verts_;
  std::set<Edge> edges_;
};

}  // namespace morsekit
