#include "sbcert/fuzz.hpp"
#include "sbcert/io/presentation_file.hpp"

#include <catch_amalgamated.hpp>

using namespace sbcert;

TEST_CASE("the generator is deterministic per seed and only yields valid presentations") {
  FuzzRng a(99), b(99), c(100);
  bool differs = false;
  for (int i = 0; i < 40; ++i) {
    auto x = random_presentation(a, 4, 2);
    auto y = random_presentation(b, 4, 2);
    auto z = random_presentation(c, 4, 2);
    CHECK(x.canonical_text() == y.canonical_text());
    differs = differs || x.canonical_text() != z.canonical_text();
    auto again = parse_presentation(x.canonical_text());
    CHECK(again.ok());
  }
  CHECK(differs);
}

TEST_CASE("the portable engine gives the reference sequence") {
  FuzzRng rng(5489);
  std::mt19937_64 ref(5489);
  for (int i = 0; i < 5; ++i) CHECK(rng.below(1000) == ref() % 1000);
}

TEST_CASE("a small campaign finds no violations") {
  FuzzOptions opt;
  opt.seed = 7;
  opt.count = 25;
  auto s = run_fuzz(opt);
  CHECK(s.cases.size() == 25);
  CHECK(s.violations == 0);
  CHECK(s.words > 0);
  std::size_t infinite = 0;
  for (const auto& c : s.cases) {
    for (const auto& f : c.findings) INFO(f.check << ": " << f.message);
    CHECK(c.findings.empty());
    infinite += c.infinite ? 1 : 0;
  }
  CHECK(infinite + s.finite_type == s.cases.size());
  auto t = run_fuzz(opt);
  for (std::size_t i = 0; i < s.cases.size(); ++i) CHECK(t.cases[i].digest == s.cases[i].digest);
}

TEST_CASE("minimization shrinks scalars and multiplicities while the predicate holds") {
  auto r = parse_presentation(
      "[quiver]\nvertices: v0\nx: v0 -> v0\ny: v0 -> v0\n[sigma]\n(x y) @ 3\n[socle]\nv0 = p:5/3 q:-1\n");
  REQUIRE(r.ok());
  auto always = [](const AlgebraPresentation&) { return true; };
  auto small = minimize_presentation(*r.algebra, always);
  CHECK(small.scalars(0).p.rational() == 1);
  CHECK(small.scalars(0).q.rational() == 1);
  CHECK(small.cycles()[0].multiplicity == 1);
  auto keep_mult = [](const AlgebraPresentation& a) { return a.cycles()[0].multiplicity == 3; };
  auto kept = minimize_presentation(*r.algebra, keep_mult);
  CHECK(kept.cycles()[0].multiplicity == 3);
  CHECK(kept.scalars(0).p.rational() == 1);
}

TEST_CASE("presentation checks pass on the fixture corpus") {
  for (const auto& name : {"dihedral", "hecke", "two_crossings", "short_cycle", "nakayama_finite"}) {
    auto r = load_presentation(std::string(SBCERT_FIXTURES) + "/" + name + ".alg");
    REQUIRE(r.ok());
    auto check = check_presentation(*r.algebra, FuzzOptions{});
    for (const auto& f : check.findings) INFO(f.check << ": " << f.message);
    CHECK(check.findings.empty());
  }
}
