#include "morsekit/solvers.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <climits>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "detail_erasure.hpp"
#include "morsekit/reduce.hpp"

namespace morsekit {

namespace {

struct BudgetExceeded {};

struct BitsetHash {
  std::size_t operator()(const std::vector<uint64_t>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (uint64_t w : v) h = (h ^ w) * 1099511628211ull;
    return h;
  }
};

// Shared removable-cell bookkeeping for the collapse-order constructions:
// alive flags plus the count of alive proper cofaces per simplex.
struct CollapseState {
  const SimplicialComplex& K;
  std::vector<char> alive;
  std::vector<int> cofcount;
  int alive_count;

  explicit CollapseState(const SimplicialComplex& K_)
      : K(K_), alive(K_.size(), 1), cofcount(K_.size(), 0), alive_count(K_.size()) {
    for (int i = 0; i < K.size(); ++i) cofcount[i] = static_cast<int>(K.cofaces_of(i).size());
  }

  int unique_coface(int f) const {
    for (int c : K.cofaces_of(f))
      if (alive[c]) return c;
    return -1;
  }

  template <typename OnFree, typename OnMaximal>
  void remove(int idx, OnFree&& on_free, OnMaximal&& on_maximal) {
    alive[idx] = 0;
    --alive_count;
    for (int f : K.faces_of(idx)) {
      if (!alive[f]) continue;
      --cofcount[f];
      if (cofcount[f] == 1) on_free(f);
      if (cofcount[f] == 0) on_maximal(f);
    }
  }
};

}  // namespace

CollapseTrace greedy_collapse(const SimplicialComplex& K) {
  CollapseState st(K);
  std::set<std::pair<int, int>> ready;
  for (int i = 0; i < K.size(); ++i)
    if (st.cofcount[i] == 1) ready.emplace(i, st.unique_coface(i));

  CollapseTrace trace;
  auto on_free = [&](int f) { ready.emplace(f, st.unique_coface(f)); };
  auto ignore = [](int) {};
  while (!ready.empty()) {
    auto [f, c] = *ready.begin();
    ready.erase(ready.begin());
    if (!st.alive[f] || !st.alive[c] || st.cofcount[f] != 1) continue;
    trace.steps.push_back({K.simplex(f), K.simplex(c)});
    st.remove(f, on_free, ignore);
    st.remove(c, on_free, ignore);
  }
  trace.residue = K.restrict_to(st.alive);
  return trace;
}

std::vector<GradientPair> greedy_gradient(const SimplicialComplex& K) {
  CollapseState st(K);
  std::set<std::pair<int, int>> ready;
  std::set<std::pair<int, int>> maximal;  // (-dim, idx): highest dimension first
  for (int i = 0; i < K.size(); ++i) {
    if (st.cofcount[i] == 1) ready.emplace(i, st.unique_coface(i));
    if (st.cofcount[i] == 0) maximal.emplace(-K.simplex(i).dim(), i);
  }
  auto on_free = [&](int f) { ready.emplace(f, st.unique_coface(f)); };
  auto on_maximal = [&](int f) { maximal.emplace(-K.simplex(f).dim(), f); };

  std::vector<GradientPair> pairs;
  while (st.alive_count > 0) {
    bool collapsed = false;
    while (!ready.empty()) {
      auto [f, c] = *ready.begin();
      ready.erase(ready.begin());
      if (!st.alive[f] || !st.alive[c] || st.cofcount[f] != 1) continue;
      pairs.push_back({K.simplex(f), K.simplex(c)});
      st.remove(f, on_free, on_maximal);
      st.remove(c, on_free, on_maximal);
      collapsed = true;
      break;
    }
    if (collapsed) continue;
    while (!maximal.empty()) {
      auto [negd, i] = *maximal.begin();
      maximal.erase(maximal.begin());
      if (!st.alive[i] || st.cofcount[i] != 0) continue;
      st.remove(i, on_free, on_maximal);
      break;
    }
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

std::vector<GradientPair> random_gradient(const SimplicialComplex& K, std::mt19937& rng,
                                          double drop_probability) {
  CollapseState st(K);
  std::vector<int> free_cand;
  std::vector<int> max_cand;
  for (int i = 0; i < K.size(); ++i) {
    if (st.cofcount[i] == 1) free_cand.push_back(i);
    if (st.cofcount[i] == 0) max_cand.push_back(i);
  }
  auto on_free = [&](int f) { free_cand.push_back(f); };
  auto on_maximal = [&](int f) { max_cand.push_back(f); };
  auto pop_random = [&](std::vector<int>& v, auto&& valid) {
    while (!v.empty()) {
      std::size_t i = rng() % v.size();
      int x = v[i];
      v[i] = v.back();
      v.pop_back();
      if (valid(x)) return x;
    }
    return -1;
  };

  std::vector<GradientPair> pairs;
  while (st.alive_count > 0) {
    int f = pop_random(free_cand, [&](int x) { return st.alive[x] && st.cofcount[x] == 1; });
    if (f >= 0) {
      int c = st.unique_coface(f);
      pairs.push_back({K.simplex(f), K.simplex(c)});
      st.remove(f, on_free, on_maximal);
      st.remove(c, on_free, on_maximal);
      continue;
    }
    int m = pop_random(max_cand, [&](int x) { return st.alive[x] && st.cofcount[x] == 0; });
    if (m < 0) throw std::logic_error("collapse state has no maximal simplex");
    st.remove(m, on_free, on_maximal);
  }

  if (drop_probability > 0) {
    std::bernoulli_distribution drop(drop_probability);
    std::vector<GradientPair> kept;
    for (auto& p : pairs)
      if (!drop(rng)) kept.push_back(std::move(p));
    pairs = std::move(kept);
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

namespace {

// Branch-and-bound state for optimal_matching.
struct MatchSearch {
  const SimplicialComplex& K;
  const SolverConfig& cfg;
  std::vector<int> match;       // -2 undecided, -1 critical, >= 0 partner
  std::vector<char> faceside;   // matched as the lower-dimensional side
  std::vector<int> order;       // undecided processing order: top dimension, then lex
  std::vector<int> stamp;
  int generation = 0;
  int committed = 0;
  int undecided = 0;
  int best = INT_MAX;
  std::vector<int> best_match;
  std::vector<char> best_faceside;
  int lower_bound = 0;
  long long nodes = 0;
  bool done = false;
  bool aborted = false;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  MatchSearch(const SimplicialComplex& K_, const SolverConfig& cfg_) : K(K_), cfg(cfg_) {
    match.assign(K.size(), -2);
    faceside.assign(K.size(), 0);
    stamp.assign(K.size(), 0);
    undecided = K.size();
    for (int i = 0; i < K.size(); ++i) order.push_back(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      int da = K.simplex(a).dim(), db = K.simplex(b).dim();
      if (da != db) return da > db;
      return a < b;
    });
  }

  // Would matching (f, s) close a directed cycle? Equivalent to a path from
  // s down to f in the current modified layer diagram, with the direct
  // covering arc s -> f excluded (it is the arc about to be reversed).
  bool creates_cycle(int s, int f) {
    ++generation;
    std::vector<int> stack{s};
    stamp[s] = generation;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      if (K.simplex(x).dim() == K.simplex(s).dim()) {
        for (int g : K.facets_of(x)) {
          if (x == s && g == f) continue;
          if (match[x] >= 0 && match[x] == g) continue;
          if (g == f) return true;
          if (stamp[g] != generation) {
            stamp[g] = generation;
            stack.push_back(g);
          }
        }
      } else if (faceside[x]) {
        int up = match[x];
        if (stamp[up] != generation) {
          stamp[up] = generation;
          stack.push_back(up);
        }
      }
    }
    return false;
  }

  void record_if_better() {
    if (committed < best) {
      best = committed;
      best_match = match;
      best_faceside = faceside;
      if (best == lower_bound) done = true;
    }
  }

  void run(std::size_t pos) {
    if (done || aborted) return;
    if (++nodes > cfg.node_budget) {
      aborted = true;
      return;
    }
    if (cfg.time_budget_s > 0 && (nodes & 4095) == 0) {
      auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      if (dt > cfg.time_budget_s) {
        aborted = true;
        return;
      }
    }
    while (pos < order.size() && match[order[pos]] != -2) ++pos;
    if (pos == order.size()) {
      record_if_better();
      return;
    }
    if (committed + (undecided & 1) >= best) return;

    int s = order[pos];
    for (int f : K.facets_of(s)) {
      if (match[f] != -2) continue;
      if (creates_cycle(s, f)) continue;
      match[s] = f;
      match[f] = s;
      faceside[f] = 1;
      undecided -= 2;
      run(pos);
      undecided += 2;
      match[s] = -2;
      match[f] = -2;
      faceside[f] = 0;
      if (done || aborted) return;
    }
    match[s] = -1;
    ++committed;
    --undecided;
    run(pos);
    --committed;
    ++undecided;
    match[s] = -2;
  }
};

}  // namespace

MatchingResult optimal_matching(const SimplicialComplex& K, const SolverConfig& config) {
  MatchingResult out;
  if (K.empty()) {
    out.optimal = true;
    return out;
  }

  auto betti = K.betti_gf2();
  int betti_sum = 0;
  for (int b : betti) betti_sum += b;
  int lb = betti_sum;
  if ((K.size() - lb) % 2 != 0) ++lb;  // criticals and simplex count share parity

  MatchSearch search(K, config);
  search.lower_bound = lb;

  // Seed with the deterministic collapse-order gradient.
  auto seed = greedy_gradient(K);
  {
    std::vector<int> match(K.size(), -1);
    std::vector<char> faceside(K.size(), 0);
    int criticals = K.size();
    for (const auto& p : seed) {
      int f = *K.index_of(p.face), c = *K.index_of(p.coface);
      match[f] = c;
      match[c] = f;
      faceside[f] = 1;
      criticals -= 2;
    }
    search.best = criticals;
    search.best_match = std::move(match);
    search.best_faceside = std::move(faceside);
    if (criticals == lb) search.done = true;
  }

  if (!search.done) search.run(0);

  out.nodes = search.nodes;
  out.optimal = search.done || !search.aborted;
  for (int i = 0; i < K.size(); ++i) {
    if (search.best_faceside[i])
      out.pairs.push_back({K.simplex(i), K.simplex(search.best_match[i])});
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  out.profile = critical_profile(K, out.pairs);
  return out;
}

namespace {

std::vector<uint64_t> triangle_key(const SimplicialComplex& K, const std::vector<char>& alive) {
  const auto& tris = K.dim_indices(2);
  std::vector<uint64_t> key((tris.size() + 63) / 64, 0);
  for (std::size_t i = 0; i < tris.size(); ++i)
    if (alive[tris[i]]) key[i / 64] |= uint64_t{1} << (i % 64);
  return key;
}

bool has_alive_triangle(const SimplicialComplex& K, const std::vector<char>& alive) {
  for (int t : K.dim_indices(2))
    if (alive[t]) return true;
  return false;
}

}  // namespace

ErResult er_exact(const SimplicialComplex& K, const SolverConfig& config) {
  if (K.dim() > 2) throw std::invalid_argument("er is defined for complexes of dimension <= 2");

  auto certificate_for = [&](const std::vector<Simplex>& removed) {
    std::vector<char> alive(K.size(), 1);
    for (const auto& s : removed) alive[*K.index_of(s)] = 0;
    ErCertificate cert;
    cert.removed = removed;
    std::sort(cert.removed.begin(), cert.removed.end());
    detail::run_erasure(K, alive, &cert.trace.steps);
    if (has_alive_triangle(K, alive))
      throw std::logic_error("erasability certificate failed to clear the 2-simplices");
    cert.trace.residue = K.restrict_to(alive);
    return cert;
  };

  std::vector<char> base(K.size(), 1);
  detail::run_erasure(K, base, nullptr);

  ErResult out;
  if (!has_alive_triangle(K, base)) {
    out.value = 0;
    out.certificate = certificate_for({});
    out.exact = true;
    return out;
  }

  std::vector<int> residue_tris;
  for (int t : K.dim_indices(2))
    if (base[t]) residue_tris.push_back(t);
  const int trivial_ub = static_cast<int>(residue_tris.size());

  long long nodes = 0;
  std::unordered_map<std::vector<uint64_t>, int, BitsetHash> failed_depth;
  std::vector<int> removed_idx;

  // Depth-limited search: delete one remaining (necessarily internal)
  // 2-simplex, erase to the new fixpoint, recurse. Fixpoints are unique per
  // deletion set, so the memo collapses permuted deletion orders.
  auto search = [&](auto&& self, const std::vector<char>& alive, int k) -> bool {
    for (int t : K.dim_indices(2)) {
      if (!alive[t]) continue;
      if (++nodes > config.node_budget) throw BudgetExceeded{};
      std::vector<char> next = alive;
      next[t] = 0;
      detail::run_erasure(K, next, nullptr);
      if (!has_alive_triangle(K, next)) {
        removed_idx.push_back(t);
        return true;
      }
      if (k <= 1) continue;
      auto key = triangle_key(K, next);
      auto it = failed_depth.find(key);
      if (it != failed_depth.end() && it->second >= k - 1) continue;
      removed_idx.push_back(t);
      if (self(self, next, k - 1)) return true;
      removed_idx.pop_back();
      auto& depth = failed_depth[std::move(key)];
      depth = std::max(depth, k - 1);
    }
    return false;
  };

  try {
    for (int k = 1; k <= trivial_ub; ++k) {
      removed_idx.clear();
      if (search(search, base, k)) {
        std::vector<Simplex> removed;
        for (int t : removed_idx) removed.push_back(K.simplex(t));
        out.value = k;
        out.certificate = certificate_for(removed);
        out.exact = true;
        return out;
      }
    }
    throw std::logic_error("erasability search failed to terminate at the trivial bound");
  } catch (const BudgetExceeded&) {
    std::vector<Simplex> all;
    for (int t : residue_tris) all.push_back(K.simplex(t));
    out.value = trivial_ub;
    out.certificate = certificate_for(all);
    out.exact = false;
    return out;
  }
}

CollapsibilityResult is_collapsible_exact(const SimplicialComplex& K,
                                          const SolverConfig& config) {
  CollapsibilityResult out;
  if (K.size() <= 1) {
    out.collapsible = true;
    out.trace.residue = K;
    out.exact = true;
    return out;
  }

  CollapseState st(K);
  std::unordered_set<std::vector<uint64_t>, BitsetHash> dead_ends;
  auto state_key = [&]() {
    std::vector<uint64_t> key((K.size() + 63) / 64, 0);
    for (int i = 0; i < K.size(); ++i)
      if (st.alive[i]) key[i / 64] |= uint64_t{1} << (i % 64);
    return key;
  };

  long long residues = 0;
  std::vector<GradientPair> steps;
  auto ignore = [](int) {};

  auto rec = [&](auto&& self) -> bool {
    if (st.alive_count == 1) return true;
    if (++residues > config.node_budget) throw BudgetExceeded{};
    std::vector<std::pair<int, int>> moves;
    for (int i = 0; i < K.size(); ++i)
      if (st.alive[i] && st.cofcount[i] == 1) moves.emplace_back(i, st.unique_coface(i));
    if (moves.empty()) return false;
    auto key = state_key();
    if (dead_ends.count(key)) return false;
    for (auto [f, c] : moves) {
      steps.push_back({K.simplex(f), K.simplex(c)});
      st.remove(f, ignore, ignore);
      st.remove(c, ignore, ignore);
      if (self(self)) return true;
      // restore in reverse removal order so f is still dead while c's face
      // counts are rebuilt
      st.alive[c] = 1;
      ++st.alive_count;
      for (int sub : K.faces_of(c))
        if (st.alive[sub]) ++st.cofcount[sub];
      st.alive[f] = 1;
      ++st.alive_count;
      for (int sub : K.faces_of(f))
        if (st.alive[sub]) ++st.cofcount[sub];
      steps.pop_back();
    }
    dead_ends.insert(std::move(key));
    return false;
  };

  try {
    out.collapsible = rec(rec);
    out.exact = true;
  } catch (const BudgetExceeded&) {
    out.collapsible = false;
    out.exact = false;
  }
  out.residues = residues;
  if (out.collapsible) {
    out.trace.steps = steps;
    out.trace.residue = K.restrict_to(st.alive);
  } else {
    out.trace.residue = K;
  }
  return out;
}

MasResult max_acyclic_exact(const DirectedGraph& G) {
  std::vector<std::string> verts(G.vertices().begin(), G.vertices().end());
  const int n = static_cast<int>(verts.size());
  if (n > 22) throw std::runtime_error("budget exhausted: too many vertices for exact search");

  std::map<std::string, int> id;
  for (int i = 0; i < n; ++i) id[verts[i]] = i;
  std::vector<uint32_t> in_mask(n, 0);
  for (const auto& [u, v] : G.edges()) {
    if (u == v) continue;
    in_mask[id[v]] |= uint32_t{1} << id[u];
  }

  const std::size_t full = std::size_t{1} << n;
  std::vector<int> dp(full, 0);
  std::vector<int8_t> choice(full, -1);
  for (std::size_t S = 1; S < full; ++S) {
    for (int v = 0; v < n; ++v) {
      if (!(S & (std::size_t{1} << v))) continue;
      std::size_t rest = S ^ (std::size_t{1} << v);
      int cand = dp[rest] + std::popcount(static_cast<uint32_t>(in_mask[v] & rest));
      if (cand > dp[S] || choice[S] < 0) {
        dp[S] = cand;
        choice[S] = static_cast<int8_t>(v);
      }
    }
  }

  std::vector<int> pos(n, 0);
  std::size_t S = full - 1;
  int next_pos = n - 1;
  while (S) {
    int v = choice[S];
    pos[v] = next_pos--;
    S ^= std::size_t{1} << v;
  }

  MasResult out;
  out.value = dp[full - 1];
  for (const auto& v : verts) out.subgraph.add_vertex(v);
  for (const auto& [u, v] : G.edges()) {
    if (u != v && pos[id[u]] < pos[id[v]]) out.subgraph.add_edge(u, v);
  }
  if (out.subgraph.num_edges() != out.value)
    throw std::logic_error("acyclic subgraph reconstruction mismatch");
  return out;
}

FasResult min_fas_exact(const DirectedGraph& G) {
  auto mas = max_acyclic_exact(G);
  FasResult out;
  out.value = G.num_edges() - mas.value;
  for (const auto& e : G.edges())
    if (!mas.subgraph.edges().count(e)) out.edges.insert(e);
  return out;
}

DirectedGraph mas_half_approx(const DirectedGraph& G) {
  std::set<Edge> forward, backward;
  for (const auto& e : G.edges()) {
    if (e.first < e.second) forward.insert(e);
    if (e.first > e.second) backward.insert(e);
  }
  const auto& keep = backward.size() > forward.size() ? backward : forward;
  DirectedGraph out;
  for (const auto& v : G.vertices()) out.add_vertex(v);
  for (const auto& e : keep) out.add_edge(e.first, e.second);
  return out;
}

CollapsibilityAnswer algorithm_B(
    const SimplicialComplex& K, int c,
    const std::function<std::vector<GradientPair>(const SimplicialComplex&)>& minmm_solver) {
  if (c < 1) throw std::invalid_argument("amplification exponent must be positive");
  if (K.empty()) throw std::invalid_argument("complex must be nonempty");
  if (!K.connected()) throw std::invalid_argument("complex must be connected");
  if (K.size() == 1) return CollapsibilityAnswer::Collapsible;

  unsigned long long target = 1;
  for (int i = 1; i < c; ++i) {
    if (target > (1ull << 62) / static_cast<unsigned long long>(K.size()))
      throw std::invalid_argument("amplification exponent too large");
    target *= static_cast<unsigned long long>(K.size());
  }

  PointedComplex pointed{K, K.vertex_tokens().front()};
  PointedComplex amplified = amplify(pointed, c);

  auto pairs = minmm_solver(amplified.complex);
  auto check = validate(amplified.complex, pairs);
  if (!check.valid)
    throw std::invalid_argument("solver returned an invalid gradient: " + check.reason);
  auto profile = critical_profile(amplified.complex, pairs);
  return static_cast<unsigned long long>(profile.m) < target ? CollapsibilityAnswer::Collapsible
                                                             : CollapsibilityAnswer::NotCollapsible;
}

}  // namespace morsekit
