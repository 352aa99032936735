#include "sbcert/brauer_graph.hpp"
#include "sbcert/io/presentation_file.hpp"

#include <catch_amalgamated.hpp>

#include <functional>
#include <random>

using namespace sbcert;

namespace {

AlgebraPresentation fixture(const std::string& name) {
  auto r = load_presentation(std::string(SBCERT_FIXTURES) + "/" + name + ".alg");
  REQUIRE(r.ok());
  return *r.algebra;
}

// Kind from edge multiset and an exhaustive search for a simple cycle.
GraphKind oracle_kind(const BrauerGraph& g) {
  std::map<std::pair<int, int>, int> count;
  bool loop = false;
  for (const auto& e : g.edges) {
    ++count[{e.u, e.w}];
    loop = loop || e.u == e.w;
  }
  for (const auto& [k, n] : count) {
    if (n > 1) return GraphKind::HasMultiEdge;
  }
  if (loop) return g.node_count == 1 ? GraphKind::HasMultiEdge : GraphKind::SingleVertexLoop;
  std::vector<std::vector<int>> adj(g.node_count);
  for (const auto& e : g.edges) {
    adj[e.u].push_back(e.w);
    adj[e.w].push_back(e.u);
  }
  std::vector<bool> on(g.node_count, false);
  std::function<bool(int, int, int, int)> walk = [&](int start, int x, int from, int depth) {
    for (int y : adj[x]) {
      if (y == from && depth == 1) continue;
      if (y == start && depth >= 2) return true;
      if (on[y]) continue;
      on[y] = true;
      bool found = walk(start, y, x, depth + 1);
      on[y] = false;
      if (found) return true;
    }
    return false;
  };
  for (int s = 0; s < g.node_count; ++s) {
    on.assign(g.node_count, false);
    on[s] = true;
    if (walk(s, s, -1, 0)) return GraphKind::HasCycle;
  }
  return GraphKind::TreeNoMultiEdge;
}

BrauerGraph random_graph(std::mt19937& rng) {
  BrauerGraph g;
  g.node_count = 1 + static_cast<int>(rng() % 6);
  for (int n = 1; n < g.node_count; ++n) {
    int m = static_cast<int>(rng() % n);
    g.edges.push_back(BrauerEdge{m, n, n});
  }
  int extra = static_cast<int>(rng() % 3);
  for (int k = 0; k < extra; ++k) {
    int x = static_cast<int>(rng() % g.node_count);
    int y = static_cast<int>(rng() % g.node_count);
    g.edges.push_back(BrauerEdge{std::min(x, y), std::max(x, y), 0});
  }
  std::shuffle(g.edges.begin(), g.edges.end(), rng);
  g.node_labels.assign(g.node_count, "c");
  g.rotation.assign(g.node_count, {});
  return g;
}

}  // namespace

TEST_CASE("fixture graphs are classified by kind") {
  const std::vector<std::pair<std::string, GraphKind>> cases{
      {"commutative", GraphKind::TreeNoMultiEdge}, {"hecke", GraphKind::TreeNoMultiEdge},
      {"ztilde1", GraphKind::TreeNoMultiEdge},     {"ztilde2", GraphKind::TreeNoMultiEdge},
      {"dihedral", GraphKind::HasMultiEdge},       {"nakayama2", GraphKind::HasMultiEdge},
      {"two_crossings", GraphKind::HasMultiEdge},      {"nakayama3", GraphKind::HasCycle},
      {"nakayama4", GraphKind::HasCycle},          {"short_cycle", GraphKind::SingleVertexLoop}};
  for (const auto& [name, kind] : cases) {
    INFO(name);
    auto alg = fixture(name);
    auto g = build_brauer_graph(alg);
    auto v = classify(g);
    CHECK(v.kind == kind);
    CHECK(verify_graph_certificate(g, v));
    CHECK(g.node_count == static_cast<int>(alg.cycles().size()));
    CHECK(g.edges.size() == alg.valency_two_vertices().size());
  }
}

TEST_CASE("the n-fold Nakayama graph is an n-cycle") {
  for (int n : {3, 4}) {
    auto g = build_brauer_graph(fixture("nakayama" + std::to_string(n)));
    CHECK(g.node_count == n);
    CHECK(static_cast<int>(g.edges.size()) == n);
    auto v = classify(g);
    CHECK(v.walk.size() == static_cast<std::size_t>(n + 1));
  }
}

TEST_CASE("classification agrees with a brute-force cycle search") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = random_graph(rng);
    auto v = classify(g);
    CHECK(v.kind == oracle_kind(g));
    CHECK(verify_graph_certificate(g, v));
  }
}

TEST_CASE("tampered certificates are rejected") {
  auto g = build_brauer_graph(fixture("nakayama3"));
  auto v = classify(g);
  auto bad = v;
  bad.kind = GraphKind::TreeNoMultiEdge;
  CHECK_FALSE(verify_graph_certificate(g, bad));
  bad = v;
  bad.walk.back() = bad.walk.front() == 0 ? 1 : 0;
  CHECK_FALSE(verify_graph_certificate(g, bad));
  bad = v;
  bad.edges[0] = 99;
  CHECK_FALSE(verify_graph_certificate(g, bad));
  auto tree = build_brauer_graph(fixture("hecke"));
  GraphVerdict fake{GraphKind::HasMultiEdge, {0, 0}, {}};
  CHECK_FALSE(verify_graph_certificate(tree, fake));
  GraphVerdict loop{GraphKind::SingleVertexLoop, {0}, {}};
  CHECK_FALSE(verify_graph_certificate(tree, loop));
}

TEST_CASE("DOT export lists every node and edge once") {
  auto alg = fixture("dihedral");
  CHECK(export_dot(alg, build_brauer_graph(alg)) ==
        "graph brauer {\n  c0 [label=\"(x y)^2\"];\n  c0 -- c0 [label=\"v0\"];\n}\n");
  auto hecke = fixture("hecke");
  auto dot = export_dot(hecke, build_brauer_graph(hecke));
  CHECK(std::count(dot.begin(), dot.end(), '\n') == 2 + 2 + 1);
}

TEST_CASE("two-colouring of a word that covers every crossing") {
  auto alg = fixture("two_crossings");
  auto c = two_colouring(alg, parse_word(alg, "alpha1.alpha2.alpha3|beta"));
  CHECK(c.ok);
  CHECK(c.colour.at(alg.cycle_of(*alg.quiver().find_arrow("alpha1"))) == 'a');
  CHECK(c.colour.at(alg.cycle_of(*alg.quiver().find_arrow("beta"))) == 'b');
  auto dihedral = fixture("dihedral");
  auto bad = two_colouring(dihedral, parse_word(dihedral, "x|y"));
  CHECK_FALSE(bad.ok);
  CHECK(bad.offending_arrow >= 0);
}

TEST_CASE("disconnected graphs are refused") {
  BrauerGraph g;
  g.node_count = 2;
  g.node_labels = {"a", "b"};
  g.rotation.assign(2, {});
  CHECK_THROWS_AS(classify(g), std::logic_error);
}
