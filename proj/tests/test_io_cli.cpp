#include <fstream>

#include "doctest.h"
#include "morsekit/buildk.hpp"
#include "morsekit/gadget.hpp"
#include "morsekit/io.hpp"
#include "support.hpp"

using morsekit::Simplex;
using morsekit::SimplicialComplex;
using testsupport::run_cli;
using testsupport::temp_file;

namespace mio = morsekit::io;

TEST_CASE("simplex text form") {
  CHECK(mio::parse_simplex("{a,b,c}") == Simplex({"a", "b", "c"}));
  CHECK(mio::parse_simplex("{x}") == Simplex({"x"}));
  CHECK_THROWS(mio::parse_simplex("{a, b}"));
  CHECK_THROWS(mio::parse_simplex("{}"));
  CHECK_THROWS(mio::parse_simplex("{a,,b}"));
  CHECK_THROWS(mio::parse_simplex("{a,a}"));
  CHECK_THROWS(mio::parse_simplex("a,b"));
}

TEST_CASE("complex files round trip canonically") {
  auto path = temp_file("tri.smax", "# a comment\n\nb  a c\nc d\n");
  auto K = mio::read_smax(path);
  CHECK(K.f_vector() == std::vector<int>{4, 4, 1});
  auto text = mio::smax_string(K);
  CHECK(text == "a b c\nc d\n");
  auto again = mio::read_smax(temp_file("tri2.smax", text));
  CHECK(again == K);

  auto bad = temp_file("bad.smax", "a b\n\na b a\n");
  try {
    mio::read_smax(bad);
    FAIL("expected a parse error");
  } catch (const mio::ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.file() == bad);
    CHECK(std::string(e.what()).find(bad + ":3: ") == 0);
  }
  CHECK_THROWS_AS(mio::read_smax("/nonexistent/x.smax"), mio::ParseError);
}

TEST_CASE("graph files round trip and reject duplicates") {
  auto path = temp_file("g.dgr", "# g\nb c\na b\nc a\n");
  auto G = mio::read_dgr(path);
  CHECK(G.num_edges() == 3);
  CHECK(mio::dgr_string(G) == "a b\nb c\nc a\n");

  try {
    mio::read_dgr(temp_file("dup.dgr", "a b\na b\n"));
    FAIL("expected a parse error");
  } catch (const mio::ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(mio::read_dgr(temp_file("tok.dgr", "a b c\n")), mio::ParseError);
  CHECK_THROWS_AS(mio::read_dgr(temp_file("tok1.dgr", "a\n")), mio::ParseError);
}

TEST_CASE("gradient files round trip") {
  auto g = morsekit::modified_dunce_hat();
  auto pairs = morsekit::dunce_gradient(g);
  auto text = mio::grad_string(g.complex, pairs);
  auto file = mio::read_grad(temp_file("v.grad", text));
  auto sorted = pairs;
  std::sort(sorted.begin(), sorted.end());
  CHECK(file.pairs == sorted);
  CHECK(file.critical == std::vector<Simplex>{Simplex({"s"}), g.eta, Simplex({"t"})});

  CHECK_THROWS(mio::grad_string(g.complex, {{Simplex({"x"}), Simplex({"x", "y"})}}));

  try {
    mio::read_grad(temp_file("bad.grad", "{a} -> {a,b}\n{c} {c,d}\ncritical:\n"));
    FAIL("expected a parse error");
  } catch (const mio::ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(mio::read_grad(temp_file("bad2.grad", "{a,} -> {a,b}\ncritical:\n")),
                  mio::ParseError);
}

TEST_CASE("atlas files round trip") {
  morsekit::DirectedGraph G;
  G.add_edge("a", "b");
  G.add_edge("b", "c");
  G.add_edge("c", "a");
  auto built = morsekit::build_k_full(G, morsekit::lex_order(G));
  auto text = mio::atlas_string(built.atlas.names);
  auto names = mio::read_atlas(temp_file("k.atlas", text));
  CHECK(names == built.atlas.names);

  CHECK_THROWS_AS(mio::read_atlas(temp_file("r.atlas", "a>b zeta {q}\n")), mio::ParseError);
  try {
    mio::read_atlas(temp_file("i.atlas", "a>b q x\n"));
    FAIL("expected a parse error");
  } catch (const mio::ParseError& e) {
    CHECK(e.line() == 0);  // incomplete copy is a whole-file complaint
  }
}

TEST_CASE("audit files round trip") {
  std::map<std::string, long long> kv = {{"alpha", 5}, {"beta", -2}};
  CHECK(mio::audit_string(kv) == "alpha=5\nbeta=-2\n");
  CHECK(mio::read_audit(temp_file("a.audit", "alpha=5\nbeta=-2\n")) == kv);
  CHECK_THROWS_AS(mio::read_audit(temp_file("b.audit", "alpha=x\n")), mio::ParseError);
  CHECK_THROWS_AS(mio::read_audit(temp_file("c.audit", "a=1\na=2\n")), mio::ParseError);
}

TEST_CASE("cli stats on the gadget") {
  auto out = temp_file("gadget.smax", "");
  auto r = run_cli({"gadget", "--out", out});
  REQUIRE(r.exit_code == 0);
  auto s = run_cli({"stats", out});
  CHECK(s.exit_code == 0);
  CHECK(s.out == "simplices: 39\ndim: 2\nf-vector: 7 19 13\nbetti: 1 0 0\n");
}

TEST_CASE("cli gadget gradient verifies") {
  auto out = temp_file("gadget.smax", "");
  auto grad = temp_file("gadget.grad", "");
  REQUIRE(run_cli({"gadget", "--out", out, "--grad", grad}).exit_code == 0);
  auto v = run_cli({"verify-gradient", out, grad});
  CHECK(v.exit_code == 0);
  CHECK(v.out == "valid\n");
}

TEST_CASE("cli build-k on a single edge matches the gadget complex") {
  auto g1 = temp_file("edge.dgr", "a b\n");
  auto k1 = temp_file("edge.smax", "");
  auto r = run_cli({"build-k", g1, "--out", k1});
  REQUIRE(r.exit_code == 0);
  CHECK(r.out == "simplices=39\n");
  auto s1 = run_cli({"stats", k1});

  auto gout = temp_file("gadget.smax", "");
  REQUIRE(run_cli({"gadget", "--out", gout}).exit_code == 0);
  CHECK(s1.out == run_cli({"stats", gout}).out);
}

TEST_CASE("cli pipeline build, witness, verify, map") {
  auto gpath = temp_file("c3.dgr", "a b\nb c\nc a\n");
  auto kpath = temp_file("c3.smax", "");
  auto apath = temp_file("c3.atlas", "");
  auto r = run_cli({"build-k", gpath, "--out", kpath, "--atlas", apath});
  REQUIRE(r.exit_code == 0);
  CHECK(r.out == "simplices=108\n");

  CHECK(run_cli({"betti", kpath}).out == "betti: 1 1 0\n");

  auto grad = temp_file("c3.grad", "");
  auto w = run_cli({"witness", gpath, "--out", grad});
  REQUIRE(w.exit_code == 0);
  CHECK(w.out == "criticals=4\n");

  auto v = run_cli({"verify-gradient", kpath, grad});
  CHECK(v.exit_code == 0);
  CHECK(v.out == "valid\n");

  auto sub = temp_file("c3.sub.dgr", "");
  auto m = run_cli({"map-solution", gpath, grad, "--atlas", apath, "--out", sub});
  CHECK(m.exit_code == 0);
  CHECK(m.out == "fas=1\nedges=2\n");
  CHECK(mio::read_dgr(sub).is_acyclic());

  auto f = run_cli({"fas-exact", gpath});
  CHECK(f.exit_code == 0);
  CHECK(f.out == "minfas=1\n");

  auto er = run_cli({"er-exact", kpath});
  CHECK(er.exit_code == 0);
  CHECK(er.out == "er=1\n");
}

TEST_CASE("cli predicates use exit codes") {
  auto dunce = testsupport::data_path("dunce_hat.smax");
  auto e = run_cli({"erase", dunce});
  CHECK(e.exit_code == 1);
  CHECK(e.out == "not erasable\n");

  auto c = run_cli({"collapse", dunce});
  CHECK(c.exit_code == 1);
  CHECK(c.out == "not collapsible\n");

  auto gout = temp_file("gadget.smax", "");
  REQUIRE(run_cli({"gadget", "--out", gout}).exit_code == 0);
  CHECK(run_cli({"erase", gout}).exit_code == 0);
  CHECK(run_cli({"collapse", gout}).exit_code == 0);

  auto starved = run_cli({"collapse", gout, "--budget", "1"});
  CHECK(starved.exit_code == 2);
  CHECK(starved.out == "budget exhausted\n");

  auto d = run_cli({"er-exact", dunce});
  CHECK(d.exit_code == 0);
  CHECK(d.out == "er=1\n");
}

TEST_CASE("cli verify rejects a broken gradient") {
  auto kpath = temp_file("tri.smax", "a b c\n");
  auto bad = temp_file("bad.grad",
                       "{a} -> {a,b}\n{b} -> {b,c}\n{c} -> {a,c}\n"
                       "critical:\n{a,b,c}\n");
  auto r = run_cli({"verify-gradient", kpath, bad});
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("invalid") == 0);

  auto mislabeled = temp_file("mis.grad", "{a} -> {a,b}\ncritical:\n");
  auto m = run_cli({"verify-gradient", kpath, mislabeled});
  CHECK(m.exit_code == 1);

  auto foreign = temp_file("foreign.grad", "{z} -> {y,z}\ncritical:\n");
  CHECK(run_cli({"verify-gradient", kpath, foreign}).exit_code == 2);
}

TEST_CASE("cli reports malformed input with file and line") {
  auto bad = temp_file("bad.dgr", "a b\na b\n");
  auto r = run_cli({"fas-exact", bad}, true);
  CHECK(r.exit_code == 2);
  CHECK(r.out.find(":2: ") != std::string::npos);

  CHECK(run_cli({"stats", "/nonexistent/k.smax"}).exit_code == 2);
}

TEST_CASE("cli solver frontends") {
  auto gout = temp_file("gadget.smax", "");
  REQUIRE(run_cli({"gadget", "--out", gout}).exit_code == 0);
  auto s = run_cli({"solve-max", gout});
  CHECK(s.exit_code == 0);
  CHECK(s.out == "criticals=1\noptimal=true\n");

  auto amp = temp_file("amp.smax", "");
  auto a = run_cli({"amplify", temp_file("tri.smax", "a b c\n"), "--c", "2", "--out", amp});
  CHECK(a.exit_code == 0);
  CHECK(a.out == "simplices=43\n");

  auto g = temp_file("pair.dgr", "u v\nv u\nu w\n");
  auto rem = temp_file("rem.dgr", "");
  auto f = run_cli({"omas-f", g, "--out", rem});
  CHECK(f.exit_code == 0);
  CHECK(f.out == "k=1\nloops=0\n");
  CHECK(mio::dgr_string(mio::read_dgr(rem)) == "u w\n");

  auto empty = temp_file("empty.dgr", "");
  auto lifted = temp_file("lift.dgr", "");
  auto gres = run_cli({"omas-g", temp_file("pair2.dgr", "u v\nv u\n"), empty, "--out", lifted});
  CHECK(gres.exit_code == 0);
  CHECK(gres.out == "edges=1\n");
  CHECK(mio::dgr_string(mio::read_dgr(lifted)) == "u v\n");
}

TEST_CASE("cli audit") {
  auto c3 = temp_file("c3.dgr", "a b\nb c\nc a\n");
  auto path2 = temp_file("path2.dgr", "a b\nb c\n");
  auto r = run_cli({"audit", c3, "--fuzz", "5", "--seed", "7"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("file=" + c3) == 0);
  CHECK(r.out.find("mu_slack=52\n") != std::string::npos);
  CHECK(r.out.find("nu_slack_x2=0\n") != std::string::npos);
  CHECK(r.out.find("opt_maxmm=104\n") != std::string::npos);

  auto multi1 = run_cli({"audit", c3, path2, "--fuzz", "3", "--seed", "9", "--jobs", "2"});
  auto multi2 = run_cli({"audit", c3, path2, "--fuzz", "3", "--seed", "9", "--jobs", "2"});
  CHECK(multi1.exit_code == 0);
  CHECK(multi1.out == multi2.out);
  CHECK(multi1.out.find("file=" + c3) != std::string::npos);
  CHECK(multi1.out.find("file=" + path2) != std::string::npos);
}

TEST_CASE("cli outputs are deterministic") {
  auto gpath = temp_file("c3.dgr", "a b\nb c\nc a\n");
  auto k1 = temp_file("k1.smax", "");
  auto k2 = temp_file("k2.smax", "");
  REQUIRE(run_cli({"build-k", gpath, "--out", k1}).exit_code == 0);
  REQUIRE(run_cli({"build-k", gpath, "--out", k2}).exit_code == 0);
  std::ifstream f1(k1), f2(k2);
  std::string s1((std::istreambuf_iterator<char>(f1)), std::istreambuf_iterator<char>());
  std::string s2((std::istreambuf_iterator<char>(f2)), std::istreambuf_iterator<char>());
  CHECK(s1 == s2);
  CHECK_FALSE(s1.empty());
}
