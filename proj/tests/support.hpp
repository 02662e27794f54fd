#pragma once

// Shared helpers for the unit and acceptance suites: enumeration of small
// graph families, random instance generators, independent brute-force
// oracles and a subprocess runner for the command line tool.

#include <map>
#include <random>
#include <stdexcept>
#include <set>
#include <string>
#include <vector>

#include "morsekit/complex.hpp"
#include "morsekit/digraph.hpp"
#include "morsekit/gradient.hpp"

namespace testsupport {

// Every weakly connected digraph without loops or antiparallel pairs and
// with total degree <= 3, on the labelled vertex sets {a}, {a,b}, ... up to
// max_n vertices. Distinct labelled graphs are listed separately; for
// max_n = 4 the family has 647 members.
std::vector<morsekit::DirectedGraph> oriented_deg3_family(int max_n);

// All 2^|E| edge-subset subgraphs of G, each on G's full vertex set.
std::vector<morsekit::DirectedGraph> edge_subgraphs(const morsekit::DirectedGraph& G);

// Random weakly connected loop-free antiparallel-free graph with total
// degree <= 3 on n single-letter vertices (n <= 26).
morsekit::DirectedGraph random_connected_deg3(std::mt19937& rng, int n);

// Random digraph on up to max_n vertices; loops and antiparallel pairs are
// allowed (and likely).
morsekit::DirectedGraph random_digraph(std::mt19937& rng, int max_n);

// Random acyclic edge-subgraph of G: a random vertex order keeps only the
// forward edges, then a random subset of those survives.
morsekit::DirectedGraph random_acyclic_subgraph(std::mt19937& rng,
                                                const morsekit::DirectedGraph& G);

// Random 2-complex: a handful of triangles plus stray edges on up to max_v
// vertices.
morsekit::SimplicialComplex random_two_complex(std::mt19937& rng, int max_v);

// Maximum acyclic-subgraph size by brute force over all vertex orders
// (loops can never be kept). Meant for <= 8 vertices.
int mas_brute(const morsekit::DirectedGraph& G);

// Minimum number of 2-simplex deletions leaving an erasable complex, by
// exhaustive search over deletion subsets in increasing size.
int er_brute(const morsekit::SimplicialComplex& K);

// Minimum critical 2-simplex count over all valid gradients, by exhaustive
// search over (edge, triangle) matchings. Meant for <= 8 triangles.
int min_m2_brute(const morsekit::SimplicialComplex& K);

// Greedy targeted erasure: true iff some (edge, triangle) collapse sequence
// removes exactly the listed 2-simplices, i.e. their closure is an erasable
// subcomplex. The greedy order is complete because pair availability only
// grows as triangles disappear.
bool erase_within(const morsekit::SimplicialComplex& K,
                  const std::vector<morsekit::Simplex>& triangles);

// Images under a total vertex relabelling.
morsekit::SimplicialComplex relabel(const morsekit::SimplicialComplex& K,
                                    const morsekit::Labelling& f);
morsekit::DirectedGraph relabel(const morsekit::DirectedGraph& G, const morsekit::Labelling& f);

// The classic dunce hat: 8 vertices, 24 edges, 17 triangles; contractible
// but without any free face. Matches data/dunce_hat.smax.
const morsekit::SimplicialComplex& dunce_hat();

// Validates the gradient and checks the consequences of the collapse
// theorem against GF(2) homology: m_d >= beta_d for every d and equal
// alternating sums. Throws std::runtime_error (prefixed with `where`) on
// any violation; returns the critical profile otherwise. Every call feeds
// the global counter reported by morse_checks().
morsekit::CriticalProfile check_morse(const morsekit::SimplicialComplex& K,
                                      const std::vector<morsekit::GradientPair>& pairs,
                                      const std::string& where);

// Number of check_morse calls that ran in this process.
long long morse_checks();

// Runs the command line tool (path from MORSEKIT_BIN) with the given
// arguments; returns its exit code and captured stdout (plus stderr when
// merge_stderr is set).
struct CliResult {
  int exit_code = -1;
  std::string out;
};
CliResult run_cli(const std::vector<std::string>& args, bool merge_stderr = false);

// Writes content to a fresh file under the system temp directory and
// returns its path.
std::string temp_file(const std::string& stem, const std::string& content);

// Resolves a fixture name against MORSEKIT_DATA.
std::string data_path(const std::string& name);

}  // namespace testsupport
