#include "morsekit/digraph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

namespace morsekit {

bool DirectedGraph::add_edge(const std::string& u, const std::string& v) {
  verts_.insert(u);
  verts_.insert(v);
  return edges_.insert({u, v}).second;
}

int DirectedGraph::in_degree(const std::string& v) const {
  int d = 0;
  for (const auto& e : edges_)
    if (e.second == v) ++d;
  return d;
}

int DirectedGraph::out_degree(const std::string& v) const {
  int d = 0;
  for (const auto& e : edges_)
    if (e.first == v) ++d;
  return d;
}

std::vector<Edge> DirectedGraph::in_edges(const std::string& v) const {
  std::vector<Edge> out;
  for (const auto& e : edges_)
    if (e.second == v) out.push_back(e);
  return out;
}

std::vector<Edge> DirectedGraph::out_edges(const std::string& v) const {
  std::vector<Edge> out;
  for (const auto& e : edges_)
    if (e.first == v) out.push_back(e);
  return out;
}

std::vector<Edge> DirectedGraph::loops() const {
  std::vector<Edge> out;
  for (const auto& e : edges_)
    if (e.first == e.second) out.push_back(e);
  return out;
}

std::vector<std::pair<Edge, Edge>> DirectedGraph::antiparallel_pairs() const {
  std::vector<std::pair<Edge, Edge>> out;
  for (const auto& e : edges_) {
    if (e.first < e.second && edges_.count({e.second, e.first}))
      out.push_back({e, {e.second, e.first}});
  }
  return out;
}

int DirectedGraph::max_total_degree() const {
  if (verts_.empty()) return -1;
  std::map<std::string, int> deg;
  for (const auto& v : verts_) deg[v] = 0;
  for (const auto& e : edges_) {
    ++deg[e.first];
    ++deg[e.second];
  }
  int best = 0;
  for (const auto& [v, d] : deg) best = std::max(best, d);
  return best;
}

bool DirectedGraph::weakly_connected() const {
  if (verts_.empty()) return true;
  std::map<std::string, std::vector<std::string>> adj;
  for (const auto& e : edges_) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  std::set<std::string> seen{*verts_.begin()};
  std::vector<std::string> stack{*verts_.begin()};
  while (!stack.empty()) {
    auto u = stack.back();
    stack.pop_back();
    for (const auto& w : adj[u]) {
      if (seen.insert(w).second) stack.push_back(w);
    }
  }
  return seen.size() == verts_.size();
}

bool DirectedGraph::is_acyclic() const {
  std::map<std::string, int> indeg;
  for (const auto& v : verts_) indeg[v] = 0;
  for (const auto& e : edges_) ++indeg[e.second];
  std::vector<std::string> ready;
  for (const auto& [v, d] : indeg)
    if (d == 0) ready.push_back(v);
  std::size_t done = 0;
  while (!ready.empty()) {
    auto u = ready.back();
    ready.pop_back();
    ++done;
    for (const auto& e : edges_) {
      if (e.first == u && --indeg[e.second] == 0) ready.push_back(e.second);
    }
  }
  return done == verts_.size();
}

std::vector<std::string> DirectedGraph::topological_order() const {
  std::map<std::string, int> indeg;
  std::map<std::string, std::vector<std::string>> adj;
  for (const auto& v : verts_) indeg[v] = 0;
  for (const auto& e : edges_) {
    ++indeg[e.second];
    adj[e.first].push_back(e.second);
  }
  std::priority_queue<std::string, std::vector<std::string>, std::greater<>> ready;
  for (const auto& [v, d] : indeg)
    if (d == 0) ready.push(v);
  std::vector<std::string> order;
  while (!ready.empty()) {
    auto u = ready.top();
    ready.pop();
    order.push_back(u);
    for (const auto& w : adj[u])
      if (--indeg[w] == 0) ready.push(w);
  }
  if (order.size() != verts_.size()) throw std::invalid_argument("graph is cyclic");
  return order;
}

DirectedGraph DirectedGraph::edge_subgraph(const std::set<Edge>& keep) const {
  DirectedGraph out;
  for (const auto& v : verts_) out.add_vertex(v);
  for (const auto& e : keep) {
    if (!edges_.count(e))
      throw std::invalid_argument("edge " + e.first + "->" + e.second + " not in the graph");
    out.add_edge(e.first, e.second);
  }
  return out;
}

bool DirectedGraph::contains_edges_of(const DirectedGraph& other) const {
  return std::includes(edges_.begin(), edges_.end(), other.edges().begin(), other.edges().end());
}

}  // namespace morsekit
