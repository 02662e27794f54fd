#include "morsekit/erasure.hpp"

#include <set>
#include <stdexcept>

#include "detail_erasure.hpp"

namespace morsekit {

namespace detail {

void run_erasure(const SimplicialComplex& K, std::vector<char>& alive,
                 std::vector<GradientPair>* steps) {
  std::vector<int> tricount(K.size(), 0);
  for (int e : K.dim_indices(1)) {
    if (!alive[e]) continue;
    for (int t : K.cofaces_of(e))
      if (alive[t]) ++tricount[e];
  }

  auto unique_tri = [&](int e) {
    for (int t : K.cofaces_of(e))
      if (alive[t]) return t;
    return -1;
  };

  std::set<std::pair<int, int>> ready;
  for (int e : K.dim_indices(1))
    if (alive[e] && tricount[e] == 1) ready.emplace(e, unique_tri(e));

  while (!ready.empty()) {
    auto [e, t] = *ready.begin();
    ready.erase(ready.begin());
    if (!alive[e] || !alive[t] || tricount[e] != 1) continue;
    if (steps) steps->push_back({K.simplex(e), K.simplex(t)});
    alive[e] = 0;
    alive[t] = 0;
    for (int f : K.facets_of(t)) {
      if (!alive[f]) continue;
      --tricount[f];
      if (tricount[f] == 1) ready.emplace(f, unique_tri(f));
    }
  }
}

}  // namespace detail

CollapseTrace erase(const SimplicialComplex& K) {
  if (K.dim() > 2) throw std::invalid_argument("erasure requires a complex of dimension <= 2");
  std::vector<char> alive(K.size(), 1);
  CollapseTrace trace;
  detail::run_erasure(K, alive, &trace.steps);
  trace.residue = K.restrict_to(alive);
  return trace;
}

bool is_erasable(const SimplicialComplex& K) {
  if (K.dim() > 2) throw std::invalid_argument("erasure requires a complex of dimension <= 2");
  if (K.dim() < 2) return true;
  std::vector<char> alive(K.size(), 1);
  detail::run_erasure(K, alive, nullptr);
  for (int t : K.dim_indices(2))
    if (alive[t]) return false;
  return true;
}

bool eventually_free(const SimplicialComplex& K, const Simplex& edge) {
  if (K.dim() > 2) throw std::invalid_argument("erasure requires a complex of dimension <= 2");
  auto idx = K.index_of(edge);
  if (!idx) throw std::invalid_argument("simplex " + edge.str() + " is not in the complex");
  if (edge.dim() != 1) throw std::invalid_argument("eventual freeness is defined for edges");
  std::vector<char> alive(K.size(), 1);
  detail::run_erasure(K, alive, nullptr);
  if (!alive[*idx]) return true;
  for (int t : K.cofaces_of(*idx))
    if (alive[t]) return false;
  return true;
}

}  // namespace morsekit
