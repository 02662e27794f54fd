#include "morsekit/reduce.hpp"

#include <algorithm>
#include <stdexcept>

#include "morsekit/gadget.hpp"
#include "morsekit/solvers.hpp"

namespace morsekit {

OmasReduction mas_to_omas_f(const DirectedGraph& G) {
  OmasReduction out;
  for (const auto& v : G.vertices()) out.oriented.add_vertex(v);
  out.loops = G.loops();
  out.pairs = G.antiparallel_pairs();
  std::set<Edge> drop(out.loops.begin(), out.loops.end());
  for (const auto& [ab, ba] : out.pairs) {
    drop.insert(ab);
    drop.insert(ba);
  }
  for (const auto& e : G.edges())
    if (!drop.count(e)) out.oriented.add_edge(e.first, e.second);
  return out;
}

DirectedGraph mas_to_omas_g(const DirectedGraph& G, const DirectedGraph& A) {
  auto f = mas_to_omas_f(G);
  if (!f.oriented.contains_edges_of(A))
    throw std::invalid_argument("A is not a subgraph of the oriented remainder");
  if (!A.is_acyclic()) throw std::invalid_argument("A has a directed cycle");

  DirectedGraph out;
  for (const auto& v : G.vertices()) out.add_vertex(v);
  for (const auto& e : A.edges()) out.add_edge(e.first, e.second);

  auto topo = out.topological_order();
  std::map<std::string, int> pos;
  for (std::size_t i = 0; i < topo.size(); ++i) pos[topo[i]] = static_cast<int>(i);
  for (const auto& [ab, ba] : f.pairs) {
    if (pos[ab.first] < pos[ab.second])
      out.add_edge(ab.first, ab.second);
    else
      out.add_edge(ba.first, ba.second);
  }
  return out;
}

PointedComplex amplify(const PointedComplex& K, int c) {
  if (c < 1) throw std::invalid_argument("amplification exponent must be positive");
  if (K.complex.empty()) throw std::invalid_argument("complex must be nonempty");
  if (!K.complex.connected()) throw std::invalid_argument("complex must be connected");
  if (!K.complex.contains(Simplex({K.basepoint})))
    throw std::invalid_argument("basepoint is not a vertex of the complex");
  if (c == 1) return K;

  const long long n = K.complex.size();
  const long long kMaxSize = 1'000'000;
  long long copies = 1;
  for (int i = 1; i < c; ++i) {
    copies *= n;
    if (copies > kMaxSize || (n - 1) * copies + 1 > kMaxSize)
      throw std::invalid_argument("amplified complex would exceed the size guard");
  }
  if (copies == 1) return K;
  std::vector<PointedComplex> parts(static_cast<std::size_t>(copies), K);
  return wedge_sum(parts);
}

SolutionMap solution_map_a(const DirectedGraph& G, const BuiltComplex& built,
                           const std::vector<GradientPair>& V) {
  auto check = validate(built.complex, V);
  if (!check.valid) throw std::invalid_argument("invalid gradient: " + check.reason);

  std::set<Simplex> matched;
  for (const auto& p : V) {
    matched.insert(p.face);
    matched.insert(p.coface);
  }

  SolutionMap out;
  for (int idx : built.complex.dim_indices(2)) {
    const Simplex& tri = built.complex.simplex(idx);
    if (!matched.count(tri)) out.fas.insert(built.atlas.owner_of(tri));
  }
  for (const auto& v : G.vertices()) out.subgraph.add_vertex(v);
  for (const auto& e : G.edges())
    if (!out.fas.count(e)) out.subgraph.add_edge(e.first, e.second);
  if (!out.subgraph.is_acyclic())
    throw std::logic_error("mapped solution is cyclic despite a valid gradient");
  return out;
}

namespace {

const std::string& letter_name(const GadgetNames& n, const std::string& letter) {
  switch (letter[0]) {
    case 'q': return n.q;
    case 'r': return n.r;
    case 's': return n.s;
    case 't': return n.t;
    case 'u': return n.u;
    case 'v': return n.v;
    default: return n.w;
  }
}

}  // namespace

std::vector<GradientPair> witness_gradient(const DirectedGraph& G, const BuiltComplex& built,
                                           const std::set<Edge>& F, const std::string& p) {
  if (built.complex.empty()) throw std::invalid_argument("built complex is empty");
  for (const auto& e : F)
    if (!G.edges().count(e))
      throw std::invalid_argument("edge " + edge_token(e) + " is not an edge of the graph");
  std::set<Edge> keep;
  for (const auto& e : G.edges())
    if (!F.count(e)) keep.insert(e);
  if (!G.edge_subgraph(keep).is_acyclic())
    throw std::invalid_argument("F is not a feedback arc set");

  static const auto kGadget = modified_dunce_hat();
  static const auto kPairs = dunce_gradient(kGadget);

  std::vector<GradientPair> pairs;
  for (const auto& [e, n] : built.atlas.names) {
    const bool skip_omega = F.count(e) > 0;
    for (const auto& raw : kPairs) {
      if (raw.face.dim() != 1) continue;
      if (skip_omega && raw.face == kGadget.omega) continue;
      std::vector<std::string> face, coface;
      for (const auto& letter : raw.face.vertices()) face.push_back(letter_name(n, letter));
      for (const auto& letter : raw.coface.vertices()) coface.push_back(letter_name(n, letter));
      pairs.push_back({Simplex(face), Simplex(coface)});
    }
  }
  return unique_critical_vertex(built.complex, pairs, p);
}

AuditReport l_reduction_audit(const DirectedGraph& G, const BuiltComplex& built,
                              const std::vector<GradientPair>& V) {
  AuditReport r;
  r.n_vertices = G.num_vertices();
  r.n_edges = G.num_edges();
  r.minfas = min_fas_exact(G).value;
  r.opt_3omas = r.n_edges - r.minfas;
  r.n_simplices = built.complex.size();
  r.betti = built.complex.betti_gf2();
  for (int b : r.betti) r.betti_sum += b;
  r.opt_maxmm = r.n_simplices - 2 * r.minfas - r.betti_sum;

  auto profile = critical_profile(built.complex, V);
  r.m_maxmm = r.n_simplices - profile.m;
  r.m2 = profile.m_d.size() > 2 ? profile.m_d[2] : 0;
  r.m_3omas = solution_map_a(G, built, V).subgraph.num_edges();

  r.mu_slack = kMu * r.opt_3omas - r.opt_maxmm;
  r.nu_slack_x2 = (r.opt_maxmm - r.m_maxmm) - 2 * (r.opt_3omas - r.m_3omas);
  return r;
}

std::map<std::string, long long> audit_kv(const AuditReport& r) {
  std::map<std::string, long long> kv;
  kv["n_vertices"] = r.n_vertices;
  kv["n_edges"] = r.n_edges;
  kv["minfas"] = r.minfas;
  kv["opt_3omas"] = r.opt_3omas;
  kv["n_simplices"] = r.n_simplices;
  for (std::size_t d = 0; d < 3; ++d)
    kv["betti" + std::to_string(d)] = d < r.betti.size() ? r.betti[d] : 0;
  kv["betti_sum"] = r.betti_sum;
  kv["opt_maxmm"] = r.opt_maxmm;
  kv["m_maxmm"] = r.m_maxmm;
  kv["m2"] = r.m2;
  kv["m_3omas"] = r.m_3omas;
  kv["mu"] = kMu;
  kv["mu_slack"] = r.mu_slack;
  kv["nu_slack_x2"] = r.nu_slack_x2;
  return kv;
}

}  // namespace morsekit
