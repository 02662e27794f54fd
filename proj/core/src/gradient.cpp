#include "morsekit/gradient.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace morsekit {

namespace {

// partner[i] = index matched with i, or -1. Throws on malformed pairs,
// reports doubly matched simplices through the result.
std::optional<ValidationResult> build_matching(const SimplicialComplex& K,
                                               const std::vector<GradientPair>& pairs,
                                               std::vector<int>& partner,
                                               std::vector<char>& is_face_side) {
  partner.assign(K.size(), -1);
  is_face_side.assign(K.size(), 0);
  for (const auto& pr : pairs) {
    auto fi = K.index_of(pr.face);
    auto ci = K.index_of(pr.coface);
    if (!fi || !ci)
      throw std::invalid_argument("gradient pair mentions a simplex outside the complex: " +
                                  (fi ? pr.coface.str() : pr.face.str()));
    if (pr.coface.dim() != pr.face.dim() + 1 || !pr.coface.contains(pr.face))
      throw std::invalid_argument("gradient pair is not a facet/coface pair: " + pr.face.str() +
                                  " -> " + pr.coface.str());
    for (int idx : {*fi, *ci}) {
      if (partner[idx] != -1) {
        ValidationResult r;
        r.valid = false;
        r.doubly_matched = K.simplex(idx);
        r.reason = "simplex matched twice: " + K.simplex(idx).str();
        return r;
      }
    }
    partner[*fi] = *ci;
    partner[*ci] = *fi;
    is_face_side[*fi] = 1;
  }
  return std::nullopt;
}

// Searches one (d, d+1) layer of the modified Hasse diagram for a directed
// cycle; arcs run coface -> facet except matched pairs, which are reversed.
std::optional<std::vector<int>> layer_cycle(const SimplicialComplex& K, int d,
                                            const std::vector<int>& partner,
                                            const std::vector<char>& is_face_side) {
  std::vector<int> nodes = K.dim_indices(d);
  const auto& upper = K.dim_indices(d + 1);
  nodes.insert(nodes.end(), upper.begin(), upper.end());

  auto arcs_from = [&](int u) {
    std::vector<int> out;
    if (K.simplex(u).dim() == d) {
      if (is_face_side[u] && partner[u] != -1) out.push_back(partner[u]);
    } else {
      for (int f : K.facets_of(u)) {
        if (partner[u] == f) continue;
        out.push_back(f);
      }
    }
    return out;
  };

  std::vector<int> state(K.size(), 0);  // 0 unseen, 1 on stack, 2 done
  for (int start : nodes) {
    if (state[start]) continue;
    std::vector<std::pair<int, std::size_t>> stack;
    std::vector<int> path;
    stack.emplace_back(start, 0);
    state[start] = 1;
    path.push_back(start);
    while (!stack.empty()) {
      auto& [u, next] = stack.back();
      auto outs = arcs_from(u);
      if (next < outs.size()) {
        int v = outs[next++];
        if (state[v] == 1) {
          auto it = std::find(path.begin(), path.end(), v);
          return std::vector<int>(it, path.end());
        }
        if (state[v] == 0) {
          state[v] = 1;
          stack.emplace_back(v, 0);
          path.push_back(v);
        }
      } else {
        state[u] = 2;
        stack.pop_back();
        path.pop_back();
      }
    }
  }
  return std::nullopt;
}

}  // namespace

ValidationResult validate(const SimplicialComplex& K, const std::vector<GradientPair>& pairs) {
  std::vector<int> partner;
  std::vector<char> is_face_side;
  if (auto bad = build_matching(K, pairs, partner, is_face_side)) return *bad;

  for (int d = 0; d < K.dim(); ++d) {
    if (auto cyc = layer_cycle(K, d, partner, is_face_side)) {
      ValidationResult r;
      r.valid = false;
      for (int idx : *cyc) r.cycle.push_back(K.simplex(idx));
      r.reason = "directed cycle in the modified Hasse diagram:";
      for (const auto& s : r.cycle) r.reason += " " + s.str();
      return r;
    }
  }
  ValidationResult r;
  r.valid = true;
  return r;
}

CriticalProfile critical_profile(const SimplicialComplex& K,
                                 const std::vector<GradientPair>& pairs) {
  auto v = validate(K, pairs);
  if (!v.valid) throw std::invalid_argument("invalid gradient: " + v.reason);
  std::vector<char> matched(K.size(), 0);
  for (const auto& pr : pairs) {
    matched[*K.index_of(pr.face)] = 1;
    matched[*K.index_of(pr.coface)] = 1;
  }
  CriticalProfile p;
  p.m_d.assign(std::max(K.dim() + 1, 0), 0);
  for (int i = 0; i < K.size(); ++i) {
    if (!matched[i]) {
      ++p.m_d[K.simplex(i).dim()];
      ++p.m;
    }
  }
  return p;
}

GradientCollapse collapse_by_gradient(const SimplicialComplex& K,
                                      const std::vector<GradientPair>& pairs) {
  auto v = validate(K, pairs);
  if (!v.valid) throw std::invalid_argument("invalid gradient: " + v.reason);

  std::vector<int> partner(K.size(), -1);
  std::vector<char> is_face_side(K.size(), 0);
  build_matching(K, pairs, partner, is_face_side);

  std::vector<char> alive(K.size(), 1);
  std::vector<int> cofcount(K.size(), 0);
  for (int i = 0; i < K.size(); ++i) cofcount[i] = static_cast<int>(K.cofaces_of(i).size());

  auto is_candidate = [&](int f) {
    return alive[f] && is_face_side[f] && cofcount[f] == 1 && alive[partner[f]];
  };

  std::set<std::pair<int, int>> ready;
  for (int i = 0; i < K.size(); ++i)
    if (is_candidate(i)) ready.emplace(i, partner[i]);

  GradientCollapse out;
  while (!ready.empty()) {
    auto [f, c] = *ready.begin();
    ready.erase(ready.begin());
    if (!alive[f] || !alive[c]) continue;
    out.trace.steps.push_back({K.simplex(f), K.simplex(c)});
    for (int gone : {f, c}) {
      alive[gone] = 0;
      for (int sub : K.faces_of(gone)) {
        if (!alive[sub]) continue;
        --cofcount[sub];
        if (is_candidate(sub)) ready.emplace(sub, partner[sub]);
      }
    }
  }

  for (const auto& pr : pairs) {
    if (alive[*K.index_of(pr.face)]) out.leftover.push_back(pr);
  }
  std::sort(out.leftover.begin(), out.leftover.end());
  out.certified = out.leftover.empty();
  out.trace.residue = K.restrict_to(alive);
  return out;
}

MorseFunction morse_function(const SimplicialComplex& K, const std::vector<GradientPair>& pairs) {
  auto v = validate(K, pairs);
  if (!v.valid) throw std::invalid_argument("invalid gradient: " + v.reason);

  std::vector<int> partner(K.size(), -1);
  std::vector<char> is_face_side(K.size(), 0);
  build_matching(K, pairs, partner, is_face_side);

  // Contract each pair to one unit, keyed by the smaller index. Covering
  // arcs between distinct units form a DAG: a cycle would have to climb as
  // often as it descends, which matched arcs alone cannot sustain.
  std::vector<int> unit(K.size());
  for (int i = 0; i < K.size(); ++i)
    unit[i] = (partner[i] != -1) ? std::min(i, partner[i]) : i;

  std::map<int, std::set<int>> succ;  // unit -> units it covers
  std::map<int, int> indeg;
  for (int i = 0; i < K.size(); ++i) indeg.emplace(unit[i], 0);
  for (int i = 0; i < K.size(); ++i) {
    for (int f : K.facets_of(i)) {
      if (unit[f] == unit[i]) continue;
      if (succ[unit[i]].insert(unit[f]).second) ++indeg[unit[f]];
    }
  }

  std::priority_queue<int, std::vector<int>, std::greater<int>> sources;
  for (auto& [u, d] : indeg)
    if (d == 0) sources.push(u);
  std::vector<int> order;
  while (!sources.empty()) {
    int u = sources.top();
    sources.pop();
    order.push_back(u);
    for (int w : succ[u])
      if (--indeg[w] == 0) sources.push(w);
  }
  if (order.size() != indeg.size())
    throw std::logic_error("pair-contracted Hasse diagram unexpectedly cyclic");

  std::map<int, long long> unit_value;
  const long long top = static_cast<long long>(order.size()) - 1;
  for (std::size_t i = 0; i < order.size(); ++i) unit_value[order[i]] = top - static_cast<long long>(i);

  MorseFunction f;
  for (int i = 0; i < K.size(); ++i) f.values.emplace(K.simplex(i), unit_value[unit[i]]);
  return f;
}

std::vector<GradientPair> unique_critical_vertex(const SimplicialComplex& K,
                                                 const std::vector<GradientPair>& pairs,
                                                 const std::string& p) {
  auto v = validate(K, pairs);
  if (!v.valid) throw std::invalid_argument("invalid gradient: " + v.reason);
  if (!K.connected()) throw std::invalid_argument("complex is disconnected");
  auto pi = K.index_of(Simplex({p}));
  if (!pi) throw std::invalid_argument("basepoint " + p + " is not a vertex of the complex");

  std::vector<GradientPair> kept;
  std::vector<char> edge_matched_up(K.size(), 0);
  for (const auto& pr : pairs) {
    if (pr.face.dim() >= 1) {
      kept.push_back(pr);
      if (pr.face.dim() == 1) edge_matched_up[*K.index_of(pr.face)] = 1;
    }
  }

  // Depth-first spanning tree of the 1-skeleton minus the upward-matched
  // edges, pairing each newly discovered vertex with its discovery edge.
  std::vector<std::vector<std::pair<int, int>>> adj(K.size());  // vertex -> (edge, other)
  for (int e : K.dim_indices(1)) {
    if (edge_matched_up[e]) continue;
    int a = K.facets_of(e)[0], b = K.facets_of(e)[1];
    adj[a].emplace_back(e, b);
    adj[b].emplace_back(e, a);
  }
  for (auto& lst : adj) std::sort(lst.begin(), lst.end());

  std::vector<char> seen(K.size(), 0);
  std::vector<int> stack{*pi};
  seen[*pi] = 1;
  std::size_t visited = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (auto it = adj[u].rbegin(); it != adj[u].rend(); ++it) {
      auto [e, w] = *it;
      if (seen[w]) continue;
      seen[w] = 1;
      ++visited;
      kept.push_back({K.simplex(w), K.simplex(e)});
      stack.push_back(w);
    }
  }
  if (visited != K.dim_indices(0).size())
    throw std::runtime_error("1-skeleton minus matched edges is disconnected");

  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace morsekit
