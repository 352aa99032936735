#include "sbcert/io/presentation_file.hpp"
#include "sbcert/io/report.hpp"

#include <catch_amalgamated.hpp>

using namespace sbcert;

namespace {

AlgebraPresentation fixture(const std::string& name) {
  auto r = load_presentation(std::string(SBCERT_FIXTURES) + "/" + name + ".alg");
  REQUIRE(r.ok());
  return *r.algebra;
}

const Diagnostic* find_code(const ParseResult& r, const std::string& code) {
  for (const auto& d : r.diagnostics) {
    if (d.code == code) return &d;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("syntax errors carry line and column") {
  auto r = parse_presentation("[quiver]\nvertices: a\nx: a => a\n[sigma]\n(x) @ 2\n");
  CHECK_FALSE(r.ok());
  REQUIRE_FALSE(r.diagnostics.empty());
  CHECK(r.diagnostics[0].line == 3);
  CHECK(r.diagnostics[0].column > 1);
  auto missing = parse_presentation("[quiver]\nvertices: a\n");
  REQUIRE(find_code(missing, "syntax"));
  auto bad_scalar = parse_presentation("[quiver]\nvertices: a\nx: a -> a\ny: a -> a\n[sigma]\n(x y) @ 2\n[socle]\na = p:1/0 q:1\n");
  CHECK_FALSE(bad_scalar.ok());
  CHECK(bad_scalar.diagnostics.front().line == 8);
}

TEST_CASE("comments and blank lines are ignored") {
  auto r = parse_presentation("# c\n\n[quiver]\nvertices: a   # trailing\nx: a -> a\ny: a -> a\n[sigma]\n(x y) @ 2\n[socle]\na = p:q0 q:2\n");
  REQUIRE(r.ok());
  CHECK(r.algebra->is_symbolic());
  CHECK(r.algebra->scalars(0).p.symbol() == "q0");
}

TEST_CASE("serialization round-trips every fixture") {
  for (const auto& name : {"commutative", "dihedral_symbolic", "two_crossings", "hecke", "nakayama4", "short_cycle"}) {
    auto alg = fixture(name);
    auto text = serialize_presentation(alg);
    auto back = parse_presentation(text);
    REQUIRE(back.ok());
    CHECK(serialize_presentation(*back.algebra) == text);
    CHECK(back.algebra->digest_hex() == alg.digest_hex());
  }
  CHECK_FALSE(load_presentation("/nonexistent/file.alg").ok());
}

TEST_CASE("verdict reports re-verify from JSON alone") {
  for (const auto& name : {"commutative", "hecke", "dihedral", "two_crossings", "nakayama3", "short_cycle", "nakayama_finite"}) {
    INFO(name);
    auto alg = fixture(name);
    auto report = verdict_json(alg, theorem_verdict(alg));
    auto reparsed = Json::parse(report.dump(2));
    CHECK(reparsed == report);
    auto check = check_report(alg, reparsed);
    for (const auto& f : check.failures) INFO(f);
    CHECK(check.ok());
    CHECK_FALSE(check.passed.empty());
  }
}

TEST_CASE("tampered reports fail the check") {
  auto alg = fixture("dihedral");
  auto report = verdict_json(alg, theorem_verdict(alg));
  auto bad_v = report;
  bad_v["certificates"]["criminal"]["v"] = "3";
  CHECK_FALSE(check_report(alg, bad_v).ok());
  auto bad_kind = report;
  bad_kind["graph"]["verdict"]["kind"] = "TreeNoMultiEdge";
  CHECK_FALSE(check_report(alg, bad_kind).ok());
  auto bad_digest = report;
  bad_digest["presentation"]["digest"] = "00";
  CHECK_FALSE(check_report(alg, bad_digest).ok());
  CHECK_FALSE(check_report(fixture("dihedral_q2"), report).ok());

  auto tree = fixture("hecke");
  auto rep = verdict_json(tree, theorem_verdict(tree));
  for (auto& [id, m] : rep["certificates"]["rescaling"]["factors"].items()) m["coefficient"] = "7";
  CHECK_FALSE(check_report(tree, rep).ok());
  Json junk = Json::object();
  CHECK_FALSE(check_report(tree, junk).ok());
}
