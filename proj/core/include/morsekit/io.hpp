#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "morsekit/buildk.hpp"
#include "morsekit/complex.hpp"
#include "morsekit/digraph.hpp"
#include "morsekit/gradient.hpp"

namespace morsekit::io {

/// Malformed input; what() reads "<file>:<line>: <message>" (line 0 when no
/// single line is at fault).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& file, int line, const std::string& message);
  const std::string& file() const { return file_; }
  int line() const { return line_; }

 private:
  std::string file_;
  int line_;
};

/// Parses "{v1,v2,...}". Rejects whitespace, empty tokens and duplicates.
Simplex parse_simplex(const std::string& text);

// Complexes: one maximal simplex per line as whitespace-separated tokens;
// '#' comment lines and blank lines ignored. The writer sorts vertices
// within each line and the lines themselves.
SimplicialComplex read_smax(const std::string& path);
std::string smax_string(const SimplicialComplex& K);
void write_smax(const std::string& path, const SimplicialComplex& K);

// Directed graphs: "u v" per line is the edge u -> v; duplicate lines are
// rejected. Loops are representable; isolated vertices are not.
DirectedGraph read_dgr(const std::string& path);
std::string dgr_string(const DirectedGraph& G);
void write_dgr(const std::string& path, const DirectedGraph& G);

/// Pair lines "{...} -> {...}" followed by a "critical:" section listing
/// the unmatched simplices.
struct GradientFile {
  std::vector<GradientPair> pairs;
  std::vector<Simplex> critical;
};
GradientFile read_grad(const std::string& path);
std::string grad_string(const SimplicialComplex& K, const std::vector<GradientPair>& pairs);
void write_grad(const std::string& path, const SimplicialComplex& K,
                const std::vector<GradientPair>& pairs);

// Atlases: "<edge> <role> <value>" lines, one per role of each gadget copy.
// Vertex roles (q..w) carry bare tokens, cell roles (eta, gamma, omega,
// phi, psi) carry simplices. Ownership of 2-simplices is reconstructed by
// the builders, not stored.
std::map<Edge, GadgetNames> read_atlas(const std::string& path);
std::string atlas_string(const std::map<Edge, GadgetNames>& names);
void write_atlas(const std::string& path, const std::map<Edge, GadgetNames>& names);

// Audit reports: "key=value" lines, keys sorted and unique.
std::map<std::string, long long> read_audit(const std::string& path);
std::string audit_string(const std::map<std::string, long long>& kv);
void write_audit(const std::string& path, const std::map<std::string, long long>& kv);

}  // namespace morsekit::io
