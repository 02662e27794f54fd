#include "support.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include <sys/wait.h>
#include <unistd.h>

#include "morsekit/erasure.hpp"

namespace testsupport {

using morsekit::DirectedGraph;
using morsekit::GradientPair;
using morsekit::Labelling;
using morsekit::Simplex;
using morsekit::SimplicialComplex;

namespace {

const std::vector<std::string>& letters() {
  static const std::vector<std::string> t = {"a", "b", "c", "d", "e", "f", "g", "h",
                                             "i", "j", "k", "l", "m", "n", "o", "p",
                                             "q", "r", "s", "t", "u", "v", "w", "x",
                                             "y", "z"};
  return t;
}

}  // namespace

std::vector<DirectedGraph> oriented_deg3_family(int max_n) {
  std::vector<DirectedGraph> out;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    long long total = 1;
    for (size_t s = 0; s < slots.size(); ++s) total *= 3;
    for (long long code = 0; code < total; ++code) {
      DirectedGraph G;
      for (int i = 0; i < n; ++i) G.add_vertex(letters()[i]);
      long long c = code;
      for (auto [i, j] : slots) {
        int state = static_cast<int>(c % 3);
        c /= 3;
        if (state == 1) G.add_edge(letters()[i], letters()[j]);
        if (state == 2) G.add_edge(letters()[j], letters()[i]);
      }
      if (G.max_total_degree() > 3) continue;
      if (!G.weakly_connected()) continue;
      out.push_back(std::move(G));
    }
  }
  return out;
}

std::vector<DirectedGraph> edge_subgraphs(const DirectedGraph& G) {
  std::vector<morsekit::Edge> edges(G.edges().begin(), G.edges().end());
  std::vector<DirectedGraph> out;
  for (size_t mask = 0; mask < (size_t{1} << edges.size()); ++mask) {
    DirectedGraph H;
    for (const auto& v : G.vertices()) H.add_vertex(v);
    for (size_t i = 0; i < edges.size(); ++i)
      if (mask >> i & 1) H.add_edge(edges[i].first, edges[i].second);
    out.push_back(std::move(H));
  }
  return out;
}

DirectedGraph random_connected_deg3(std::mt19937& rng, int n) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> orient(0, 1);
  double p = std::min(0.9, 2.5 / std::max(1, n - 1));
  for (int attempt = 0; attempt < 20000; ++attempt) {
    DirectedGraph G;
    for (int i = 0; i < n; ++i) G.add_vertex(letters()[i]);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (coin(rng) >= p) continue;
        if (orient(rng))
          G.add_edge(letters()[i], letters()[j]);
        else
          G.add_edge(letters()[j], letters()[i]);
      }
    if (G.max_total_degree() <= 3 && G.weakly_connected()) return G;
  }
  throw std::runtime_error("random_connected_deg3: sampling failed");
}

DirectedGraph random_digraph(std::mt19937& rng, int max_n) {
  std::uniform_int_distribution<int> size(1, max_n);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  int n = size(rng);
  DirectedGraph G;
  for (int i = 0; i < n; ++i) G.add_vertex(letters()[i]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (coin(rng) < 0.3) G.add_edge(letters()[i], letters()[j]);
  return G;
}

DirectedGraph random_acyclic_subgraph(std::mt19937& rng, const DirectedGraph& G) {
  std::vector<std::string> order(G.vertices().begin(), G.vertices().end());
  std::shuffle(order.begin(), order.end(), rng);
  std::map<std::string, int> pos;
  for (size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  DirectedGraph A;
  for (const auto& v : G.vertices()) A.add_vertex(v);
  for (const auto& [u, v] : G.edges())
    if (pos[u] < pos[v] && coin(rng) < 0.6) A.add_edge(u, v);
  return A;
}

SimplicialComplex random_two_complex(std::mt19937& rng, int max_v) {
  std::uniform_int_distribution<int> nv(4, max_v);
  int n = nv(rng);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::uniform_int_distribution<int> ntri(1, 6);
  std::uniform_int_distribution<int> nedge(0, 3);
  std::vector<std::vector<std::string>> faces;
  int t = ntri(rng);
  for (int i = 0; i < t; ++i) {
    int a = pick(rng), b = pick(rng), c = pick(rng);
    if (a == b || b == c || a == c) continue;
    faces.push_back({letters()[a], letters()[b], letters()[c]});
  }
  int e = nedge(rng);
  for (int i = 0; i < e; ++i) {
    int a = pick(rng), b = pick(rng);
    if (a == b) continue;
    faces.push_back({letters()[a], letters()[b]});
  }
  if (faces.empty()) faces.push_back({letters()[0], letters()[1], letters()[2]});
  return SimplicialComplex::from_maximal(faces);
}

int mas_brute(const DirectedGraph& G) {
  std::vector<std::string> verts(G.vertices().begin(), G.vertices().end());
  std::sort(verts.begin(), verts.end());
  int best = 0;
  do {
    std::map<std::string, int> pos;
    for (size_t i = 0; i < verts.size(); ++i) pos[verts[i]] = static_cast<int>(i);
    int kept = 0;
    for (const auto& [u, v] : G.edges())
      if (u != v && pos[u] < pos[v]) ++kept;
    best = std::max(best, kept);
  } while (std::next_permutation(verts.begin(), verts.end()));
  return best;
}

namespace {

bool erasable_without(const SimplicialComplex& K, const std::vector<int>& tris,
                      const std::vector<char>& removed) {
  std::vector<Simplex> keep;
  std::vector<char> drop(K.size(), 0);
  for (size_t i = 0; i < tris.size(); ++i)
    if (removed[i]) drop[tris[i]] = 1;
  for (int i = 0; i < K.size(); ++i)
    if (!drop[i]) keep.push_back(K.simplex(i));
  return morsekit::is_erasable(SimplicialComplex::from_simplices(keep));
}

bool er_brute_choose(const SimplicialComplex& K, const std::vector<int>& tris,
                     std::vector<char>& removed, int start, int left) {
  if (left == 0) return erasable_without(K, tris, removed);
  for (int i = start; i + left <= static_cast<int>(tris.size()); ++i) {
    removed[i] = 1;
    if (er_brute_choose(K, tris, removed, i + 1, left - 1)) {
      removed[i] = 0;
      return true;
    }
    removed[i] = 0;
  }
  return false;
}

}  // namespace

int er_brute(const SimplicialComplex& K) {
  std::vector<int> tris;
  if (K.dim() >= 2) tris = K.dim_indices(2);
  std::vector<char> removed(tris.size(), 0);
  for (int k = 0; k <= static_cast<int>(tris.size()); ++k)
    if (er_brute_choose(K, tris, removed, 0, k)) return k;
  throw std::logic_error("er_brute: removing every 2-simplex must erase");
}

namespace {

void min_m2_search(const SimplicialComplex& K, const std::vector<int>& tris, size_t at,
                   std::vector<GradientPair>& pairs, std::set<int>& used_edges, int criticals,
                   int& best) {
  if (criticals >= best) return;
  if (at == tris.size()) {
    if (morsekit::validate(K, pairs).valid) best = criticals;
    return;
  }
  int tri = tris[at];
  for (int edge : K.facets_of(tri)) {
    if (used_edges.count(edge)) continue;
    used_edges.insert(edge);
    pairs.push_back({K.simplex(edge), K.simplex(tri)});
    min_m2_search(K, tris, at + 1, pairs, used_edges, criticals, best);
    pairs.pop_back();
    used_edges.erase(edge);
  }
  min_m2_search(K, tris, at + 1, pairs, used_edges, criticals + 1, best);
}

}  // namespace

int min_m2_brute(const SimplicialComplex& K) {
  std::vector<int> tris;
  if (K.dim() >= 2) tris = K.dim_indices(2);
  int best = static_cast<int>(tris.size());
  std::vector<GradientPair> pairs;
  std::set<int> used_edges;
  min_m2_search(K, tris, 0, pairs, used_edges, 0, best);
  return best;
}

bool erase_within(const SimplicialComplex& K, const std::vector<Simplex>& triangles) {
  std::vector<char> alive(K.size(), 1);
  std::vector<char> target(K.size(), 0);
  for (const auto& t : triangles) {
    auto idx = K.index_of(t);
    if (!idx || t.dim() != 2) throw std::invalid_argument("erase_within: not a 2-simplex of K");
    target[*idx] = 1;
  }
  bool progress = true;
  while (progress) {
    progress = false;
    for (int tri : K.dim_indices(2)) {
      if (!alive[tri] || !target[tri]) continue;
      for (int edge : K.facets_of(tri)) {
        if (!alive[edge]) continue;
        int cofaces = 0;
        for (int c : K.cofacets_of(edge))
          if (alive[c]) ++cofaces;
        if (cofaces == 1) {
          alive[edge] = 0;
          alive[tri] = 0;
          progress = true;
          break;
        }
      }
    }
  }
  for (int tri : K.dim_indices(2))
    if (target[tri] && alive[tri]) return false;
  return true;
}

SimplicialComplex relabel(const SimplicialComplex& K, const Labelling& f) {
  std::vector<Simplex> mapped;
  mapped.reserve(K.size());
  for (const auto& s : K.simplices()) {
    std::vector<std::string> verts;
    for (const auto& v : s.vertices()) verts.push_back(f.at(v));
    mapped.emplace_back(std::move(verts));
  }
  return SimplicialComplex::from_simplices(std::move(mapped));
}

DirectedGraph relabel(const DirectedGraph& G, const Labelling& f) {
  DirectedGraph out;
  for (const auto& v : G.vertices()) out.add_vertex(f.at(v));
  for (const auto& [u, v] : G.edges()) out.add_edge(f.at(u), f.at(v));
  return out;
}

const SimplicialComplex& dunce_hat() {
  static const SimplicialComplex K = SimplicialComplex::from_maximal({
      {"v0", "v1", "i1"}, {"v1", "v2", "i1"}, {"v2", "i1", "i2"}, {"v0", "v2", "i2"},
      {"v0", "v1", "i2"}, {"v1", "i2", "i3"}, {"v1", "v2", "i3"}, {"v0", "v2", "i3"},
      {"v0", "i3", "i4"}, {"v0", "v2", "i4"}, {"v2", "i4", "i5"}, {"v1", "v2", "i5"},
      {"v0", "v1", "i5"}, {"v0", "i5", "i1"}, {"i1", "i2", "i3"}, {"i1", "i3", "i4"},
      {"i1", "i4", "i5"},
  });
  return K;
}

namespace {
std::atomic<long long> g_morse_checks{0};
}

morsekit::CriticalProfile check_morse(const SimplicialComplex& K,
                                      const std::vector<GradientPair>& pairs,
                                      const std::string& where) {
  g_morse_checks.fetch_add(1, std::memory_order_relaxed);
  auto v = morsekit::validate(K, pairs);
  if (!v.valid) throw std::runtime_error(where + ": invalid gradient: " + v.reason);
  auto profile = morsekit::critical_profile(K, pairs);
  auto betti = K.betti_gf2();
  long long morse_alt = 0, betti_alt = 0;
  for (size_t d = 0; d < profile.m_d.size(); ++d) {
    long long b = d < betti.size() ? betti[d] : 0;
    if (profile.m_d[d] < b)
      throw std::runtime_error(where + ": m_" + std::to_string(d) + " = " +
                               std::to_string(profile.m_d[d]) + " below betti " +
                               std::to_string(b));
    long long sign = d % 2 == 0 ? 1 : -1;
    morse_alt += sign * profile.m_d[d];
    betti_alt += sign * b;
  }
  if (morse_alt != betti_alt)
    throw std::runtime_error(where + ": alternating sums differ: " + std::to_string(morse_alt) +
                             " vs " + std::to_string(betti_alt));
  return profile;
}

long long morse_checks() { return g_morse_checks.load(std::memory_order_relaxed); }

namespace {

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'')
      out += "'\\''";
    else
      out += c;
  }
  out += "'";
  return out;
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args, bool merge_stderr) {
  const char* bin = std::getenv("MORSEKIT_BIN");
  if (!bin) throw std::runtime_error("MORSEKIT_BIN is not set");
  std::string cmd = shell_quote(bin);
  for (const auto& a : args) cmd += " " + shell_quote(a);
  cmd += merge_stderr ? " 2>&1" : " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed for: " + cmd);
  CliResult r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_file(const std::string& stem, const std::string& content) {
  static std::atomic<long long> counter{0};
  auto dir = std::filesystem::temp_directory_path() / "morsekit_tests";
  std::filesystem::create_directories(dir);
  auto path = dir / (stem + "." + std::to_string(::getpid()) + "." +
                     std::to_string(counter.fetch_add(1)));
  std::ofstream out(path);
  out << content;
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return path.string();
}

std::string data_path(const std::string& name) {
  const char* dir = std::getenv("MORSEKIT_DATA");
  if (!dir) throw std::runtime_error("MORSEKIT_DATA is not set");
  return std::string(dir) + "/" + name;
}

}  // namespace testsupport
