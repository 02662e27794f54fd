#include "morsekit/buildk.hpp"

#include <algorithm>
#include <stdexcept>

#include "morsekit/gadget.hpp"

namespace morsekit {

namespace {

// Union-find keyed by token; roots are the lexicographic minima of their
// classes, so find() doubles as the canonical-name map.
struct TokenUnionFind {
  std::map<std::string, std::string> parent;

  void add(const std::string& x) { parent.emplace(x, x); }

  std::string find(std::string x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(const std::string& a, const std::string& b) {
    std::string ra = find(a), rb = find(b);
    if (ra == rb) return;
    if (rb < ra) std::swap(ra, rb);
    parent[rb] = ra;
  }
};

std::string tok(const Edge& e, const char* letter) { return edge_token(e) + "/" + letter; }

void check_tokens(const DirectedGraph& G) {
  for (const auto& v : G.vertices()) {
    if (v.empty() || v.find('>') != std::string::npos || v.find('/') != std::string::npos)
      throw std::invalid_argument("vertex token '" + v +
                                  "' is empty or contains a reserved character ('>' or '/')");
  }
}

std::map<Edge, int> order_ranks(const DirectedGraph& G, const EdgeOrder& order) {
  std::map<Edge, int> rank;
  for (std::size_t i = 0; i < order.size(); ++i)
    if (!rank.emplace(order[i], static_cast<int>(i)).second)
      throw std::invalid_argument("edge order repeats " + edge_token(order[i]));
  if (rank.size() != G.edges().size())
    throw std::invalid_argument("edge order must enumerate every edge exactly once");
  for (const auto& e : G.edges())
    if (!rank.count(e)) throw std::invalid_argument("edge order is missing " + edge_token(e));
  return rank;
}

}  // namespace

EdgeOrder lex_order(const DirectedGraph& G) {
  return EdgeOrder(G.edges().begin(), G.edges().end());
}

std::string edge_token(const Edge& e) { return e.first + ">" + e.second; }

const GadgetNames& GadgetAtlas::of(const Edge& e) const {
  auto it = names.find(e);
  if (it == names.end())
    throw std::invalid_argument("edge " + edge_token(e) + " has no gadget copy");
  return it->second;
}

const Edge& GadgetAtlas::owner_of(const Simplex& triangle) const {
  auto it = owner.find(triangle);
  if (it == owner.end())
    throw std::invalid_argument("simplex " + triangle.str() +
                                " is not a 2-simplex of the built complex");
  return it->second;
}

void check_oriented_deg3(const DirectedGraph& G) {
  if (!G.loops().empty()) throw std::invalid_argument("graph has a loop");
  if (!G.antiparallel_pairs().empty())
    throw std::invalid_argument("graph has an antiparallel edge pair");
  if (G.max_total_degree() > 3)
    throw std::invalid_argument("graph has a vertex of total degree greater than 3");
  if (!G.weakly_connected()) throw std::invalid_argument("graph is not weakly connected");
}

BuiltComplex build_k(const DirectedGraph& G, const DirectedGraph& H, const EdgeOrder& order) {
  check_oriented_deg3(G);
  check_tokens(G);
  if (!G.contains_edges_of(H)) throw std::invalid_argument("H is not a subgraph of G");
  auto rank = order_ranks(G, order);

  TokenUnionFind uf;
  static const char* kLetters[] = {"q", "r", "s", "t", "u", "v", "w"};
  for (const auto& e : H.edges())
    for (const char* letter : kLetters) uf.add(tok(e, letter));

  auto in_h = [&](const Edge& e) { return H.edges().count(e) > 0; };
  auto by_rank = [&](Edge& k, Edge& l) {
    if (rank[l] < rank[k]) std::swap(k, l);
  };

  for (const auto& vert : G.vertices()) {
    auto in_H = H.in_edges(vert);
    auto out_H = H.out_edges(vert);
    if (in_H.empty() && out_H.empty()) continue;
    if (in_H.empty()) {
      for (const auto& e : out_H) uf.unite(tok(out_H.front(), "s"), tok(e, "s"));
      continue;
    }
    if (out_H.empty()) {
      for (const auto& e : in_H) uf.unite(tok(in_H.front(), "t"), tok(e, "t"));
      continue;
    }
    auto in_G = G.in_edges(vert);
    auto out_G = G.out_edges(vert);
    if (in_G.size() == 1 && out_G.size() == 2) {
      Edge j = in_G.front();
      Edge k = out_G[0], l = out_G[1];
      by_rank(k, l);
      if (in_h(j) && in_h(k)) {  // phi_j ~ omega_k
        uf.unite(tok(k, "u"), tok(j, "v"));
        uf.unite(tok(k, "s"), tok(j, "t"));
      }
      if (in_h(j) && in_h(l)) {  // psi_j ~ omega_l
        uf.unite(tok(l, "u"), tok(j, "w"));
        uf.unite(tok(l, "s"), tok(j, "t"));
      }
    } else if (out_G.size() == 1 && (in_G.size() == 1 || in_G.size() == 2)) {
      Edge j = out_G.front();
      Edge k = in_G[0];
      if (in_G.size() == 2) {
        Edge l = in_G[1];
        by_rank(k, l);
        if (in_h(j) && in_h(l)) {  // omega_j ~ phi_l
          uf.unite(tok(j, "u"), tok(l, "v"));
          uf.unite(tok(j, "s"), tok(l, "t"));
        }
      }
      if (in_h(j) && in_h(k)) {  // omega_j ~ phi_k
        uf.unite(tok(j, "u"), tok(k, "v"));
        uf.unite(tok(j, "s"), tok(k, "t"));
      }
    } else {
      throw std::logic_error("degree pattern impossible in an oriented degree-3 graph");
    }
  }

  auto canon = [&](const Edge& e, const char* letter) { return uf.find(tok(e, letter)); };

  std::vector<std::vector<std::string>> faces;
  for (const auto& e : H.edges())
    for (const auto& t : gadget_triangles())
      faces.push_back({canon(e, t[0]), canon(e, t[1]), canon(e, t[2])});

  BuiltComplex out;
  out.complex = SimplicialComplex::from_maximal(faces);
  for (const auto& e : H.edges()) {
    std::string cq = canon(e, "q"), cr = canon(e, "r"), cs = canon(e, "s"), ct = canon(e, "t"),
                cu = canon(e, "u"), cv = canon(e, "v"), cw = canon(e, "w");
    GadgetNames n{Simplex({cs, cu}), Simplex({cs, ct}),     Simplex({ct, cv}),
                  Simplex({ct, cw}), Simplex({cs, ct, cu}), cq,
                  cr,                cs,                    ct,
                  cu,                cv,                    cw};
    out.atlas.names.emplace(e, std::move(n));
    for (const auto& t : gadget_triangles()) {
      Simplex tri({canon(e, t[0]), canon(e, t[1]), canon(e, t[2])});
      if (!out.atlas.owner.emplace(std::move(tri), e).second)
        throw std::logic_error("a 2-simplex ended up in two gadget copies");
    }
  }
  return out;
}

BuiltComplex build_k_full(const DirectedGraph& G, const EdgeOrder& order) {
  return build_k(G, G, order);
}

SimplicialComplex build_k_tilde(const DirectedGraph& G) {
  check_oriented_deg3(G);
  check_tokens(G);

  TokenUnionFind uf;
  static const char* kLetters[] = {"q", "r", "s", "t", "u", "v", "w"};
  for (const auto& e : G.edges())
    for (const char* letter : kLetters) uf.add(tok(e, letter));

  for (const auto& vert : G.vertices()) {
    auto in_G = G.in_edges(vert);
    auto out_G = G.out_edges(vert);
    if (in_G.empty() && out_G.empty()) continue;
    if (in_G.empty()) {
      for (const auto& e : out_G) uf.unite(tok(out_G.front(), "s"), tok(e, "s"));
    } else if (out_G.empty()) {
      for (const auto& e : in_G) uf.unite(tok(in_G.front(), "t"), tok(e, "t"));
    } else {
      for (const auto& j : out_G)
        for (const auto& i : in_G) uf.unite(tok(j, "s"), tok(i, "t"));
    }
  }

  std::vector<std::vector<std::string>> faces;
  for (const auto& e : G.edges())
    for (const auto& t : gadget_triangles())
      faces.push_back({uf.find(tok(e, t[0])), uf.find(tok(e, t[1])), uf.find(tok(e, t[2]))});
  return SimplicialComplex::from_maximal(faces);
}

}  // namespace morsekit
