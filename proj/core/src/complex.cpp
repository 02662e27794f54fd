#include "morsekit/complex.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace morsekit {

namespace {

int gf2_rank(std::vector<std::vector<uint64_t>> cols) {
  int rank = 0;
  std::vector<std::vector<uint64_t>> pivots;
  std::vector<int> pivot_bit;
  for (auto& col : cols) {
    for (std::size_t p = 0; p < pivots.size(); ++p) {
      int b = pivot_bit[p];
      if (col[b / 64] & (uint64_t{1} << (b % 64))) {
        for (std::size_t w = 0; w < col.size(); ++w) col[w] ^= pivots[p][w];
      }
    }
    int lead = -1;
    for (std::size_t w = 0; w < col.size() && lead < 0; ++w) {
      if (col[w]) {
        for (int b = 0; b < 64; ++b) {
          if (col[w] & (uint64_t{1} << b)) {
            lead = static_cast<int>(w) * 64 + b;
            break;
          }
        }
      }
    }
    if (lead >= 0) {
      ++rank;
      pivots.push_back(std::move(col));
      pivot_bit.push_back(lead);
    }
  }
  return rank;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_maximal(
    const std::vector<std::vector<std::string>>& faces) {
  std::set<Simplex> all;
  for (const auto& face : faces) {
    if (face.empty()) throw std::invalid_argument("empty face in maximal-face list");
    std::vector<std::string> sorted = face;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("duplicate vertex in face");
    Simplex s(sorted);
    all.insert(s);
    for (auto& f : s.proper_faces()) all.insert(std::move(f));
  }
  SimplicialComplex K;
  K.simplices_.assign(all.begin(), all.end());
  K.build_index();
  return K;
}

SimplicialComplex SimplicialComplex::from_simplices(std::vector<Simplex> simplices) {
  std::sort(simplices.begin(), simplices.end());
  simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
  // Validate closure before indexing: build_index dereferences every facet.
  for (const auto& s : simplices) {
    for (const auto& f : s.facets()) {
      if (!std::binary_search(simplices.begin(), simplices.end(), f))
        throw std::invalid_argument("simplex set not downward closed: missing " + f.str());
    }
  }
  SimplicialComplex K;
  K.simplices_ = std::move(simplices);
  K.build_index();
  return K;
}

void SimplicialComplex::build_index() {
  index_.clear();
  index_.reserve(simplices_.size() * 2);
  dim_ = -1;
  for (int i = 0; i < size(); ++i) {
    index_.emplace(simplices_[i], i);
    dim_ = std::max(dim_, simplices_[i].dim());
  }
  dim_indices_.assign(dim_ + 1, {});
  for (int i = 0; i < size(); ++i) dim_indices_[simplices_[i].dim()].push_back(i);

  vertex_tokens_.clear();
  if (dim_ >= 0) {
    for (int i : dim_indices_[0]) vertex_tokens_.push_back(simplices_[i].vertices()[0]);
  }

  facets_.assign(size(), {});
  cofacets_.assign(size(), {});
  faces_.assign(size(), {});
  cofaces_.assign(size(), {});
  for (int i = 0; i < size(); ++i) {
    for (const auto& f : simplices_[i].facets()) {
      int j = index_.at(f);
      facets_[i].push_back(j);
      cofacets_[j].push_back(i);
    }
    for (const auto& f : simplices_[i].proper_faces()) {
      int j = index_.at(f);
      faces_[i].push_back(j);
      cofaces_[j].push_back(i);
    }
    std::sort(facets_[i].begin(), facets_[i].end());
    std::sort(faces_[i].begin(), faces_[i].end());
  }
  for (int i = 0; i < size(); ++i) {
    std::sort(cofacets_[i].begin(), cofacets_[i].end());
    std::sort(cofaces_[i].begin(), cofaces_[i].end());
  }
}

std::vector<int> SimplicialComplex::f_vector() const {
  std::vector<int> f(dim_ + 1, 0);
  for (int d = 0; d <= dim_; ++d) f[d] = static_cast<int>(dim_indices_[d].size());
  return f;
}

bool SimplicialComplex::contains(const Simplex& s) const { return index_.count(s) > 0; }

std::optional<int> SimplicialComplex::index_of(const Simplex& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const std::vector<int>& SimplicialComplex::dim_indices(int d) const {
  static const std::vector<int> kEmpty;
  if (d < 0 || d > dim_) return kEmpty;
  return dim_indices_[d];
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
  std::vector<Simplex> out;
  for (int i = 0; i < size(); ++i)
    if (cofaces_[i].empty()) out.push_back(simplices_[i]);
  return out;
}

std::vector<FreeFace> SimplicialComplex::free_faces() const {
  // A simplex with exactly one proper coface: that coface is then maximal
  // and exactly one dimension up, which is the elementary collapse setup.
  std::vector<FreeFace> out;
  for (int i = 0; i < size(); ++i) {
    if (cofaces_[i].size() == 1) {
      out.push_back({simplices_[i], simplices_[cofaces_[i][0]]});
    }
  }
  return out;
}

std::vector<Simplex> SimplicialComplex::internal_faces() const {
  std::vector<Simplex> out;
  for (int i = 0; i < size(); ++i) {
    if (!cofaces_[i].empty()) continue;
    bool has_free_facet = false;
    for (int f : facets_[i]) {
      if (cofaces_[f].size() == 1) {
        has_free_facet = true;
        break;
      }
    }
    if (!has_free_facet) out.push_back(simplices_[i]);
  }
  return out;
}

HasseDiagram SimplicialComplex::hasse() const {
  HasseDiagram h;
  h.nodes = size();
  for (int i = 0; i < size(); ++i)
    for (int j : facets_[i]) h.arcs.emplace_back(i, j);
  return h;
}

std::vector<int> SimplicialComplex::betti_gf2() const {
  if (dim_ < 0) return {};
  std::vector<int> ranks(dim_ + 2, 0);  // ranks[d] = rank of the d-th boundary map
  for (int d = 1; d <= dim_; ++d) {
    const auto& rows = dim_indices_[d - 1];
    const auto& cols = dim_indices_[d];
    std::vector<int> row_pos(size(), -1);
    for (std::size_t r = 0; r < rows.size(); ++r) row_pos[rows[r]] = static_cast<int>(r);
    std::size_t words = (rows.size() + 63) / 64;
    std::vector<std::vector<uint64_t>> matrix;
    matrix.reserve(cols.size());
    for (int c : cols) {
      std::vector<uint64_t> col(words, 0);
      for (int f : facets_[c]) {
        int r = row_pos[f];
        col[r / 64] |= uint64_t{1} << (r % 64);
      }
      matrix.push_back(std::move(col));
    }
    ranks[d] = gf2_rank(std::move(matrix));
  }
  std::vector<int> betti(dim_ + 1, 0);
  for (int d = 0; d <= dim_; ++d)
    betti[d] = static_cast<int>(dim_indices_[d].size()) - ranks[d] - ranks[d + 1];
  return betti;
}

bool SimplicialComplex::connected() const {
  if (dim_ < 0) return true;
  const auto& verts = dim_indices_[0];
  std::vector<int> parent(size());
  for (int i = 0; i < size(); ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int e : dim_indices(1)) {
    int a = find(facets_[e][0]), b = find(facets_[e][1]);
    if (a != b) parent[a] = b;
  }
  int root = find(verts[0]);
  for (int v : verts)
    if (find(v) != root) return false;
  return true;
}

SimplicialComplex SimplicialComplex::restrict_to(const std::vector<char>& alive) const {
  std::vector<Simplex> kept;
  for (int i = 0; i < size(); ++i)
    if (alive[i]) kept.push_back(simplices_[i]);
  return from_simplices(std::move(kept));
}

SimplicialComplex quotient(const SimplicialComplex& K, const Labelling& f) {
  std::set<Simplex> images;
  for (const auto& s : K.simplices()) {
    std::vector<std::string> mapped;
    mapped.reserve(s.vertices().size());
    for (const auto& v : s.vertices()) {
      auto it = f.find(v);
      if (it == f.end()) throw std::invalid_argument("labelling missing vertex " + v);
      mapped.push_back(it->second);
    }
    images.emplace(std::move(mapped));
  }
  return SimplicialComplex::from_simplices({images.begin(), images.end()});
}

PointedComplex wedge_sum(const std::vector<PointedComplex>& parts) {
  if (parts.empty()) throw std::invalid_argument("wedge of an empty collection");
  for (const auto& p : parts) {
    if (!p.complex.contains(Simplex({p.basepoint})))
      throw std::invalid_argument("basepoint " + p.basepoint + " not a vertex of its complex");
  }
  if (parts.size() == 1) return parts[0];

  int width = 1;
  for (std::size_t m = parts.size() - 1; m >= 10; m /= 10) ++width;
  auto prefix = [&](std::size_t i) {
    std::string num = std::to_string(i);
    return "w" + std::string(width - num.size(), '0') + num + "/";
  };
  const std::string bp = prefix(0) + parts[0].basepoint;

  std::vector<Simplex> all;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const std::string pre = prefix(i);
    for (const auto& s : parts[i].complex.simplices()) {
      std::vector<std::string> mapped;
      mapped.reserve(s.vertices().size());
      for (const auto& v : s.vertices()) mapped.push_back(v == parts[i].basepoint ? bp : pre + v);
      all.emplace_back(std::move(mapped));
    }
  }
  return {SimplicialComplex::from_simplices(std::move(all)), bp};
}

}  // namespace morsekit
