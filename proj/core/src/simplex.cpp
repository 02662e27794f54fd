#include "morsekit/simplex.hpp"

#include <algorithm>
#include <stdexcept>

namespace morsekit {

Simplex::Simplex(std::vector<std::string> vertices) : verts_(std::move(vertices)) {
  if (verts_.empty()) throw std::invalid_argument("simplex must have at least one vertex");
  std::sort(verts_.begin(), verts_.end());
  verts_.erase(std::unique(verts_.begin(), verts_.end()), verts_.end());
}

std::vector<Simplex> Simplex::facets() const {
  std::vector<Simplex> out;
  if (dim() == 0) return out;
  out.reserve(verts_.size());
  for (std::size_t skip = 0; skip < verts_.size(); ++skip) {
    std::vector<std::string> sub;
    sub.reserve(verts_.size() - 1);
    for (std::size_t i = 0; i < verts_.size(); ++i)
      if (i != skip) sub.push_back(verts_[i]);
    out.emplace_back(std::move(sub));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Simplex> Simplex::proper_faces() const {
  std::vector<Simplex> out;
  const std::size_t n = verts_.size();
  if (n <= 1) return out;
  if (n > 20) throw std::invalid_argument("simplex dimension too large for face enumeration");
  for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
    std::vector<std::string> sub;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) sub.push_back(verts_[i]);
    out.emplace_back(std::move(sub));
  }
  return out;
}

bool Simplex::has_vertex(const std::string& v) const {
  return std::binary_search(verts_.begin(), verts_.end(), v);
}

bool Simplex::contains(const Simplex& other) const {
  return std::includes(verts_.begin(), verts_.end(), other.verts_.begin(), other.verts_.end());
}

std::string Simplex::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    if (i) s += ',';
    s += verts_[i];
  }
  s += '}';
  return s;
}

std::size_t SimplexHash::operator()(const Simplex& s) const {
  std::size_t h = 1469598103934665603ull;
  std::hash<std::string> sh;
  for (const auto& v : s.vertices()) {
    h ^= sh(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace morsekit
