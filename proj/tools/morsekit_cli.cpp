// Command-line surface for the morsekit library: builders, solvers and
// verifiers over the plain-text .dgr/.smax/.grad/atlas/audit formats.
//
// Exit codes: 0 = success (predicates: holds), 1 = predicate fails,
// 2 = input error, malformed file, or exhausted budget.

#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "morsekit/buildk.hpp"
#include "morsekit/complex.hpp"
#include "morsekit/digraph.hpp"
#include "morsekit/erasure.hpp"
#include "morsekit/gadget.hpp"
#include "morsekit/gradient.hpp"
#include "morsekit/io.hpp"
#include "morsekit/reduce.hpp"
#include "morsekit/solvers.hpp"

namespace mk = morsekit;

namespace {

mk::EdgeOrder make_order(const mk::DirectedGraph& G, const std::string& spec) {
  mk::EdgeOrder order = mk::lex_order(G);
  if (spec == "lex") return order;
  if (spec == "revlex") {
    std::reverse(order.begin(), order.end());
    return order;
  }
  if (spec.rfind("shuffle:", 0) == 0) {
    unsigned long seed = std::stoul(spec.substr(8));
    std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
    std::shuffle(order.begin(), order.end(), rng);
    return order;
  }
  throw std::invalid_argument("unknown edge order '" + spec +
                              "' (expected lex, revlex, or shuffle:<seed>)");
}

std::string lexmin_vertex(const mk::SimplicialComplex& K) {
  if (K.empty()) throw std::invalid_argument("complex has no vertices");
  return K.vertex_tokens().front();
}

void print_fvector(const mk::SimplicialComplex& K) {
  std::string line = "f-vector:";
  for (int f : K.f_vector()) line += " " + std::to_string(f);
  std::cout << line << "\n";
}

void print_betti(const mk::SimplicialComplex& K) {
  std::string line = "betti:";
  for (int b : K.betti_gf2()) line += " " + std::to_string(b);
  std::cout << line << "\n";
}

struct AuditOutcome {
  std::string text;
  bool ok = true;
};

AuditOutcome audit_one(const std::string& path, const std::string& order_spec,
                       const std::string& grad_path, int fuzz, unsigned seed) {
  auto G = mk::io::read_dgr(path);
  auto built = mk::build_k_full(G, make_order(G, order_spec));

  std::vector<std::pair<std::string, std::vector<mk::GradientPair>>> gradients;
  if (!grad_path.empty()) {
    gradients.emplace_back(path, mk::io::read_grad(grad_path).pairs);
  } else {
    auto fas = mk::min_fas_exact(G);
    gradients.emplace_back(
        path, mk::witness_gradient(G, built, fas.edges, lexmin_vertex(built.complex)));
  }
  std::mt19937 rng(seed);
  const double drops[] = {0.0, 0.3, 0.7};
  for (int i = 0; i < fuzz; ++i)
    gradients.emplace_back(path + "#fuzz" + std::to_string(i),
                           mk::random_gradient(built.complex, rng, drops[i % 3]));

  AuditOutcome out;
  for (const auto& [label, pairs] : gradients) {
    auto report = mk::l_reduction_audit(G, built, pairs);
    out.text += "file=" + label + "\n" + mk::io::audit_string(mk::audit_kv(report));
    if (report.mu_slack < 0 || report.nu_slack_x2 < 0) out.ok = false;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"discrete Morse theory toolkit"};
  app.require_subcommand(1);

  std::string in_path, in_path2, out_path, grad_path, atlas_path, removed_path, residue_path;
  std::string order_spec = "lex";
  std::string basepoint;
  std::string fas_path;
  std::vector<std::string> audit_paths;
  long long budget = 10'000'000;
  double time_budget = 0;
  int c_exponent = 2;
  int fuzz = 0;
  unsigned seed = 42;
  int jobs = 1;
  bool auto_fas = false;

  auto* cmd_gadget = app.add_subcommand("gadget", "write the modified dunce hat");
  cmd_gadget->add_option("--out", out_path, "output .smax path")->required();
  cmd_gadget->add_option("--grad", grad_path, "also write its gradient (.grad)");

  auto* cmd_buildk = app.add_subcommand("build-k", "build K(G,H) from a directed graph");
  cmd_buildk->add_option("graph", in_path, "input .dgr")->required();
  cmd_buildk->add_option("--sub", in_path2, "subgraph H as .dgr (default: H = G)");
  cmd_buildk->add_option("--order", order_spec, "edge order: lex, revlex, shuffle:<seed>");
  cmd_buildk->add_option("--out", out_path, "output .smax path")->required();
  cmd_buildk->add_option("--atlas", atlas_path, "also write the gadget atlas");

  auto* cmd_tilde = app.add_subcommand("build-k-tilde", "build the vertex-glued variant");
  cmd_tilde->add_option("graph", in_path, "input .dgr")->required();
  cmd_tilde->add_option("--out", out_path, "output .smax path")->required();

  auto* cmd_amp = app.add_subcommand("amplify", "wedge n^(c-1) copies at a basepoint");
  cmd_amp->add_option("complex", in_path, "input .smax")->required();
  cmd_amp->add_option("--c", c_exponent, "amplification exponent")->required();
  cmd_amp->add_option("--basepoint", basepoint, "basepoint vertex (default: smallest)");
  cmd_amp->add_option("--out", out_path, "output .smax path")->required();

  auto* cmd_omasf = app.add_subcommand("omas-f", "strip loops and antiparallel pairs");
  cmd_omasf->add_option("graph", in_path, "input .dgr")->required();
  cmd_omasf->add_option("--out", out_path, "oriented remainder .dgr");

  auto* cmd_omasg = app.add_subcommand("omas-g", "lift an acyclic subgraph back");
  cmd_omasg->add_option("graph", in_path, "original graph .dgr")->required();
  cmd_omasg->add_option("acyclic", in_path2, "acyclic subgraph of the remainder")->required();
  cmd_omasg->add_option("--out", out_path, "lifted subgraph .dgr");

  auto* cmd_solve = app.add_subcommand("solve-max", "minimize critical simplices exactly");
  cmd_solve->add_option("complex", in_path, "input .smax")->required();
  cmd_solve->add_option("--budget", budget, "search node budget");
  cmd_solve->add_option("--time-budget", time_budget, "time budget in seconds (0 = off)");
  cmd_solve->add_option("--grad", grad_path, "write the optimal gradient (.grad)");

  auto* cmd_er = app.add_subcommand("er-exact", "minimum deletions to erasability");
  cmd_er->add_option("complex", in_path, "input .smax")->required();
  cmd_er->add_option("--budget", budget, "search node budget");
  cmd_er->add_option("--removed", removed_path, "write the deleted 2-simplices (.smax)");

  auto* cmd_fas = app.add_subcommand("fas-exact", "minimum feedback arc set");
  cmd_fas->add_option("graph", in_path, "input .dgr")->required();
  cmd_fas->add_option("--out", out_path, "write the feedback edges (.dgr)");

  auto* cmd_erase = app.add_subcommand("erase", "is the 2-complex erasable?");
  cmd_erase->add_option("complex", in_path, "input .smax")->required();
  cmd_erase->add_option("--residue", residue_path, "write the erasure residue (.smax)");

  auto* cmd_collapse = app.add_subcommand("collapse", "is the complex collapsible?");
  cmd_collapse->add_option("complex", in_path, "input .smax")->required();
  cmd_collapse->add_option("--budget", budget, "search node budget");

  auto* cmd_map = app.add_subcommand("map-solution", "project a gradient to a subgraph");
  cmd_map->add_option("graph", in_path, "input .dgr")->required();
  cmd_map->add_option("gradient", grad_path, "gradient on K(G) (.grad)")->required();
  cmd_map->add_option("--order", order_spec, "edge order used to build K(G)");
  cmd_map->add_option("--atlas", atlas_path, "cross-check against this atlas");
  cmd_map->add_option("--out", out_path, "acyclic subgraph output (.dgr)");

  auto* cmd_witness = app.add_subcommand("witness", "gradient realizing the optimum");
  cmd_witness->add_option("graph", in_path, "input .dgr")->required();
  cmd_witness->add_option("--fas", fas_path, "feedback arc set .dgr (default: exact minimum)");
  cmd_witness->add_flag("--auto", auto_fas, "use the exact minimum feedback arc set");
  cmd_witness->add_option("--order", order_spec, "edge order used to build K(G)");
  cmd_witness->add_option("--basepoint", basepoint, "critical vertex (default: smallest)");
  cmd_witness->add_option("--out", out_path, "gradient output (.grad)");

  auto* cmd_betti = app.add_subcommand("betti", "Betti numbers over GF(2)");
  cmd_betti->add_option("complex", in_path, "input .smax")->required();

  auto* cmd_verify = app.add_subcommand("verify-gradient", "check a gradient file");
  cmd_verify->add_option("complex", in_path, "input .smax")->required();
  cmd_verify->add_option("gradient", grad_path, "input .grad")->required();

  auto* cmd_audit = app.add_subcommand("audit", "reduction bookkeeping per instance");
  cmd_audit->add_option("graphs", audit_paths, "input .dgr files")->required();
  cmd_audit->add_option("--grad", grad_path, "audit this gradient (single graph only)");
  cmd_audit->add_option("--order", order_spec, "edge order used to build K(G)");
  cmd_audit->add_option("--fuzz", fuzz, "extra random gradients per instance");
  cmd_audit->add_option("--seed", seed, "seed for the fuzzed gradients");
  cmd_audit->add_option("--jobs", jobs, "parallel instances")->check(CLI::PositiveNumber);
  cmd_audit->add_option("--out", out_path, "write the report here instead of stdout");

  auto* cmd_stats = app.add_subcommand("stats", "size, dimension, f-vector, betti");
  cmd_stats->add_option("complex", in_path, "input .smax")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(cmd_gadget)) {
      auto g = mk::modified_dunce_hat();
      mk::io::write_smax(out_path, g.complex);
      if (!grad_path.empty()) mk::io::write_grad(grad_path, g.complex, mk::dunce_gradient(g));
      return 0;
    }

    if (app.got_subcommand(cmd_buildk)) {
      auto G = mk::io::read_dgr(in_path);
      auto H = in_path2.empty() ? G : mk::io::read_dgr(in_path2);
      auto built = mk::build_k(G, H, make_order(G, order_spec));
      mk::io::write_smax(out_path, built.complex);
      if (!atlas_path.empty()) mk::io::write_atlas(atlas_path, built.atlas.names);
      std::cout << "simplices=" << built.complex.size() << "\n";
      return 0;
    }

    if (app.got_subcommand(cmd_tilde)) {
      auto G = mk::io::read_dgr(in_path);
      auto K = mk::build_k_tilde(G);
      mk::io::write_smax(out_path, K);
      std::cout << "simplices=" << K.size() << "\n";
      return 0;
    }

    if (app.got_subcommand(cmd_amp)) {
      auto K = mk::io::read_smax(in_path);
      std::string bp = basepoint.empty() ? lexmin_vertex(K) : basepoint;
      auto amplified = mk::amplify({K, bp}, c_exponent);
      mk::io::write_smax(out_path, amplified.complex);
      std::cout << "simplices=" << amplified.complex.size() << "\n";
      return 0;
    }

    if (app.got_subcommand(cmd_omasf)) {
      auto G = mk::io::read_dgr(in_path);
      auto f = mk::mas_to_omas_f(G);
      if (!out_path.empty()) mk::io::write_dgr(out_path, f.oriented);
      std::cout << "k=" << f.pairs.size() << "\n" << "loops=" << f.loops.size() << "\n";
      return 0;
    }

    if (app.got_subcommand(cmd_omasg)) {
      auto G = mk::io::read_dgr(in_path);
      auto A = mk::io::read_dgr(in_path2);
      auto lifted = mk::mas_to_omas_g(G, A);
      if (!out_path.empty()) mk::io::write_dgr(out_path, lifted);
      std::cout << "edges=" << lifted.num_edges() << "\n";
      return 0;
    }

    if (app.got_subcommand(cmd_solve)) {
      auto K = mk::io::read_smax(in_path);
      mk::SolverConfig cfg;
      cfg.node_budget = budget;
      cfg.time_budget_s = time_budget;
      auto res = mk::optimal_matching(K, cfg);
      std::cout << "criticals=" << res.profile.m << "\n"
                << "optimal=" << (res.optimal ? "true" : "false") << "\n";
      if (!grad_path.empty()) mk::io::write_grad(grad_path, K, res.pairs);
      if (!res.optimal) {
        std::cerr << "error: search budget exhausted\n";
        return 2;
      }
      return 0;
    }

    if (app.got_subcommand(cmd_er)) {
      auto K = mk::io::read_smax(in_path);
      mk::SolverConfig cfg;
      cfg.node_budget = budget;
      auto res = mk::er_exact(K, cfg);
      std::cout << "er=" << res.value << "\n";
      if (!removed_path.empty()) {
        std::vector<std::vector<std::string>> faces;
        for (const auto& s : res.certificate.removed) faces.push_back(s.vertices());
        mk::io::write_smax(removed_path, mk::SimplicialComplex::from_maximal(faces));
      }
      if (!res.exact) {
        std::cerr << "error: search budget exhausted\n";
        return 2;
      }
      return 0;
    }

    if (app.got_subcommand(cmd_fas)) {
      auto G = mk::io::read_dgr(in_path);
      auto res = mk::min_fas_exact(G);
      std::cout << "minfas=" << res.value << "\n";
      if (!out_path.empty()) {
        mk::DirectedGraph fas_edges;
        for (const auto& e : res.edges) fas_edges.add_edge(e.first, e.second);
        mk::io::write_dgr(out_path, fas_edges);
      }
      return 0;
    }

    if (app.got_subcommand(cmd_erase)) {
      auto K = mk::io::read_smax(in_path);
      auto trace = mk::erase(K);
      if (!residue_path.empty()) mk::io::write_smax(residue_path, trace.residue);
      bool erasable = trace.residue.dim() < 2;
      std::cout << (erasable ? "erasable" : "not erasable") << "\n";
      return erasable ? 0 : 1;
    }

    if (app.got_subcommand(cmd_collapse)) {
      auto K = mk::io::read_smax(in_path);
      mk::SolverConfig cfg;
      cfg.node_budget = budget;
      auto res = mk::is_collapsible_exact(K, cfg);
      if (!res.exact) {
        std::cout << "budget exhausted\n";
        return 2;
      }
      std::cout << (res.collapsible ? "collapsible" : "not collapsible") << "\n";
      return res.collapsible ? 0 : 1;
    }

    if (app.got_subcommand(cmd_map)) {
      auto G = mk::io::read_dgr(in_path);
      auto built = mk::build_k_full(G, make_order(G, order_spec));
      if (!atlas_path.empty()) {
        auto stored = mk::io::read_atlas(atlas_path);
        if (stored != built.atlas.names)
          throw std::invalid_argument("atlas file does not match the rebuilt complex");
      }
      auto grad = mk::io::read_grad(grad_path);
      auto sol = mk::solution_map_a(G, built, grad.pairs);
      if (!out_path.empty()) mk::io::write_dgr(out_path, sol.subgraph);
      std::cout << "fas=" << sol.fas.size() << "\n"
                << "edges=" << sol.subgraph.num_edges() << "\n";
      return 0;
    }

    if (app.got_subcommand(cmd_witness)) {
      auto G = mk::io::read_dgr(in_path);
      auto built = mk::build_k_full(G, make_order(G, order_spec));
      std::set<mk::Edge> F;
      if (!fas_path.empty()) {
        auto fg = mk::io::read_dgr(fas_path);
        F = fg.edges();
      } else {
        F = mk::min_fas_exact(G).edges;
      }
      std::string bp = basepoint.empty() ? lexmin_vertex(built.complex) : basepoint;
      auto pairs = mk::witness_gradient(G, built, F, bp);
      auto profile = mk::critical_profile(built.complex, pairs);
      if (!out_path.empty()) mk::io::write_grad(out_path, built.complex, pairs);
      std::cout << "criticals=" << profile.m << "\n";
      return 0;
    }

    if (app.got_subcommand(cmd_betti)) {
      print_betti(mk::io::read_smax(in_path));
      return 0;
    }

    if (app.got_subcommand(cmd_verify)) {
      auto K = mk::io::read_smax(in_path);
      auto grad = mk::io::read_grad(grad_path);
      for (const auto& p : grad.pairs) {
        if (!K.contains(p.face) || !K.contains(p.coface))
          throw std::invalid_argument("gradient references simplices outside the complex");
      }
      auto res = mk::validate(K, grad.pairs);
      if (!res.valid) {
        std::cout << "invalid: " << res.reason << "\n";
        return 1;
      }
      std::set<mk::Simplex> matched;
      for (const auto& p : grad.pairs) {
        matched.insert(p.face);
        matched.insert(p.coface);
      }
      std::vector<mk::Simplex> expected;
      for (const auto& s : K.simplices())
        if (!matched.count(s)) expected.push_back(s);
      auto listed = grad.critical;
      std::sort(listed.begin(), listed.end());
      if (listed != expected) {
        std::cout << "invalid: critical section does not match the matching\n";
        return 1;
      }
      std::cout << "valid\n";
      return 0;
    }

    if (app.got_subcommand(cmd_audit)) {
      if (!grad_path.empty() && audit_paths.size() != 1)
        throw std::invalid_argument("--grad requires exactly one graph");
      std::vector<AuditOutcome> outcomes(audit_paths.size());
      if (jobs <= 1 || audit_paths.size() <= 1) {
        for (std::size_t i = 0; i < audit_paths.size(); ++i)
          outcomes[i] = audit_one(audit_paths[i], order_spec, grad_path, fuzz, seed);
      } else {
        std::vector<std::future<AuditOutcome>> futures;
        for (std::size_t i = 0; i < audit_paths.size(); ++i) {
          futures.push_back(std::async(std::launch::async, audit_one, audit_paths[i],
                                       order_spec, grad_path, fuzz, seed));
          if (static_cast<int>(futures.size()) == jobs || i + 1 == audit_paths.size()) {
            std::size_t base = i + 1 - futures.size();
            for (std::size_t j = 0; j < futures.size(); ++j)
              outcomes[base + j] = futures[j].get();
            futures.clear();
          }
        }
      }
      std::string text;
      bool ok = true;
      for (const auto& o : outcomes) {
        text += o.text;
        ok = ok && o.ok;
      }
      if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot open " + out_path + " for writing");
        out << text;
      } else {
        std::cout << text;
      }
      return ok ? 0 : 1;
    }

    if (app.got_subcommand(cmd_stats)) {
      auto K = mk::io::read_smax(in_path);
      std::cout << "simplices: " << K.size() << "\n" << "dim: " << K.dim() << "\n";
      print_fvector(K);
      print_betti(K);
      return 0;
    }
  } catch (const mk::io::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
