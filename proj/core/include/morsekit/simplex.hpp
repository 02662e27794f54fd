#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace morsekit {

/**
 * An abstract simplex: a nonempty set of vertex tokens kept in sorted order.
 *
 * Vertex tokens are arbitrary nonempty strings without whitespace. Two
 * simplices are equal exactly when their vertex sets are equal; the total
 * order is lexicographic on the sorted token sequences, so {a} < {a,b} < {b}.
 */
class Simplex {
 public:
  /// Builds the simplex spanned by the given vertices (duplicates collapse).
  explicit Simplex(std::vector<std::string> vertices);

  int dim() const { return static_cast<int>(verts_.size()) - 1; }
  const std::vector<std::string>& vertices() const { return verts_; }

  /// All faces of codimension 1, in lexicographic order. Empty for vertices.
  std::vector<Simplex> facets() const;

  /// All nonempty proper subsets, in no particular order.
  std::vector<Simplex> proper_faces() const;

  bool has_vertex(const std::string& v) const;
  bool contains(const Simplex& other) const;

  /// Renders as "{v1,v2,...}".
  std::string str() const;

  friend bool operator==(const Simplex& a, const Simplex& b) = default;
  friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) {
    return a.verts_ <=> b.verts_;
  }

 private:
  std::vector<std::string> verts_;
};

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const;
};

}  // namespace morsekit
