#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "morsekit/simplex.hpp"

namespace morsekit {

/// A total relabelling of vertex tokens; the induced map sends each simplex
/// to the set of its vertex images.
using Labelling = std::map<std::string, std::string>;

/// Layered covering-relation graph over the simplices of a complex.
/// Arcs run coface -> face: (i, j) means simplex i covers simplex j.
struct HasseDiagram {
  int nodes = 0;
  std::vector<std::pair<int, int>> arcs;
};

/// A free face together with its unique maximal coface (one dimension up).
struct FreeFace {
  Simplex face;
  Simplex coface;
};

/**
 * A finite abstract simplicial complex.
 *
 * The simplex set is stored downward closed and in lexicographic order, so a
 * simplex index doubles as its lexicographic rank. All queries are const; the
 * complex never mutates after construction.
 */
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Downward closure of the listed faces. Faces must be nonempty vertex
  /// lists without duplicate tokens.
  static SimplicialComplex from_maximal(const std::vector<std::vector<std::string>>& faces);

  /// Builds from an already downward-closed set (throws if not closed).
  static SimplicialComplex from_simplices(std::vector<Simplex> simplices);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(simplices_.size()); }
  bool empty() const { return simplices_.empty(); }
  const std::vector<Simplex>& simplices() const { return simplices_; }
  const Simplex& simplex(int idx) const { return simplices_[idx]; }

  /// Number of simplices per dimension; empty for the empty complex.
  std::vector<int> f_vector() const;

  bool contains(const Simplex& s) const;
  /// Index of s in lexicographic order, or nullopt.
  std::optional<int> index_of(const Simplex& s) const;

  const std::vector<std::string>& vertex_tokens() const { return vertex_tokens_; }

  /// Indices of simplices of the given dimension, in lexicographic order.
  const std::vector<int>& dim_indices(int d) const;

  /// Covering faces (codimension 1) of simplex idx, as indices.
  const std::vector<int>& facets_of(int idx) const { return facets_[idx]; }
  /// Covering cofaces (codimension 1) of simplex idx, as indices.
  const std::vector<int>& cofacets_of(int idx) const { return cofacets_[idx]; }
  /// All proper cofaces of simplex idx, as indices.
  const std::vector<int>& cofaces_of(int idx) const { return cofaces_[idx]; }
  /// All proper faces of simplex idx, as indices.
  const std::vector<int>& faces_of(int idx) const { return faces_[idx]; }

  std::vector<Simplex> maximal_simplices() const;
  bool is_maximal(int idx) const { return cofaces_[idx].empty(); }

  /// Free faces paired with their unique maximal cofaces, sorted by face.
  std::vector<FreeFace> free_faces() const;
  /// Maximal simplices none of whose facets is free.
  std::vector<Simplex> internal_faces() const;

  HasseDiagram hasse() const;

  /// Betti numbers over GF(2), indices 0..dim. Empty for the empty complex.
  std::vector<int> betti_gf2() const;

  /// True if the 1-skeleton is connected (vacuously true when empty).
  bool connected() const;

  /// Subcomplex spanned by the simplices with alive[idx] != 0.
  /// The alive set must be downward closed.
  SimplicialComplex restrict_to(const std::vector<char>& alive) const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.simplices_ == b.simplices_;
  }

 private:
  void build_index();

  std::vector<Simplex> simplices_;  // sorted lexicographically
  std::unordered_map<Simplex, int, SimplexHash> index_;
  std::vector<std::string> vertex_tokens_;
  std::vector<std::vector<int>> dim_indices_;
  std::vector<std::vector<int>> facets_;
  std::vector<std::vector<int>> cofacets_;
  std::vector<std::vector<int>> faces_;
  std::vector<std::vector<int>> cofaces_;
  int dim_ = -1;
};

/// A complex with a distinguished vertex.
struct PointedComplex {
  SimplicialComplex complex;
  std::string basepoint;
};

/// Image of K under the pasting map induced by the labelling (which must be
/// total on the vertices of K).
SimplicialComplex quotient(const SimplicialComplex& K, const Labelling& f);

/// Identifies all basepoints after making the parts' vertex namespaces
/// disjoint. The resulting size is sum(n_i) - (parts - 1).
PointedComplex wedge_sum(const std::vector<PointedComplex>& parts);

}  // namespace morsekit
