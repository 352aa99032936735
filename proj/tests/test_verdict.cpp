#include "sbcert/io/presentation_file.hpp"
#include "sbcert/verdict.hpp"

#include <catch_amalgamated.hpp>

using namespace sbcert;

namespace {

AlgebraPresentation fixture(const std::string& name) {
  auto r = load_presentation(std::string(SBCERT_FIXTURES) + "/" + name + ".alg");
  REQUIRE(r.ok());
  return *r.algebra;
}

// Scalars replaced by their symbols p_v, q_v.
AlgebraPresentation symbolic(const AlgebraPresentation& alg) {
  auto raw = alg.to_raw();
  for (auto& s : raw.socle) {
    s.p = ScalarSpec(std::string("p_" + s.vertex));
    s.q = ScalarSpec(std::string("q_" + s.vertex));
  }
  auto report = validate_presentation(raw);
  REQUIRE(report.ok());
  return *report.algebra;
}

}  // namespace

TEST_CASE("trees rescale every socle ratio to one") {
  for (const auto& name : {"commutative", "hecke", "ztilde1", "ztilde2"}) {
    INFO(name);
    auto alg = fixture(name);
    auto cert = rescale_to_one(alg);
    CHECK(cert.verified);
    for (const auto& [v, r] : cert.ratios) CHECK(r.is_identity());
    auto g = build_brauer_graph(alg);
    CHECK(verify_rescaling(alg, g, cert));
    CHECK(cert.distance[cert.root] == 0);
    CHECK(cert.scaled_arrow[cert.root] == -1);
    auto sym = symbolic(alg);
    CHECK(rescale_to_one(sym).verified);
  }
}

TEST_CASE("a rescaling with a wrong factor is rejected") {
  auto alg = fixture("hecke");
  auto cert = rescale_to_one(alg);
  auto g = build_brauer_graph(alg);
  for (auto& f : cert.factors) {
    if (!f.is_identity()) f = f * ScalarMonomial(Rational(2));
  }
  CHECK_FALSE(verify_rescaling(alg, g, cert));
  auto bad = rescale_to_one(alg);
  bad.factors[*alg.quiver().find_arrow("alpha")] = ScalarMonomial(Rational(3));
  CHECK_FALSE(verify_rescaling(alg, g, bad));
  CHECK_THROWS_AS(rescale_to_one(fixture("dihedral")), std::invalid_argument);
}

TEST_CASE("non-trees have a verified criminal witness") {
  for (const auto& name : {"dihedral", "nakayama2", "nakayama3", "nakayama4", "two_crossings", "short_cycle"}) {
    INFO(name);
    auto alg = fixture(name);
    auto search = find_criminal_witness(alg);
    REQUIRE(search.certificate);
    const auto& c = *search.certificate;
    CHECK(c.verified);
    CHECK(c.non_isomorphic);
    CHECK(c.oracle.iso_verified);
    CHECK_FALSE(is_rational_root_of_unity(c.v));
    CHECK_FALSE(c.v_symbolic.is_identity());
    auto copy = c;
    CHECK(verify_criminal(alg, copy));
    copy.v = copy.v + 1;
    CHECK_FALSE(verify_criminal(alg, copy));
  }
}

TEST_CASE("assignments put 2 or 1/2 on one indeterminate") {
  auto v = ScalarMonomial::variable("q_v0", Rational(2)) * ScalarMonomial::variable("p_v0", Rational(-2));
  auto choice = choose_assignment(v);
  REQUIRE(choice);
  CHECK(choice->first == "q_v0");
  CHECK(choice->second == 2);
  auto inv = choose_assignment(ScalarMonomial::variable("p_v0", Rational(-1)));
  REQUIRE(inv);
  CHECK(inv->second == Rational(1, 2));
  CHECK_FALSE(choose_assignment(ScalarMonomial()).has_value());
}

TEST_CASE("the E = F criterion: v = 1 iff sigma(a_i) ends where a_pi(i) begins") {
  std::size_t seen = 0;
  for (const auto& name : {"dihedral", "hecke", "nakayama2", "nakayama3", "nakayama4", "commutative", "ztilde2"}) {
    auto alg = fixture(name);
    for (const auto& w : enumerate_band_words(alg, 12)) {
      if (!has_distinct_e_equal_f(alg, w)) continue;
      ++seen;
      auto r = check_sigma_criterion(alg, w);
      CHECK(r.sigma_condition == r.v_is_one);
      CHECK(r.pi.size() == static_cast<std::size_t>(w.size()));
    }
  }
  CHECK(seen > 0);
}

TEST_CASE("verdicts on the fixtures") {
  const std::vector<std::pair<std::string, Conclusion>> cases{
      {"commutative", Conclusion::NoCriminalsAnyQ},  {"hecke", Conclusion::NoCriminalsAnyQ},
      {"ztilde1", Conclusion::NoCriminalsAnyQ},      {"ztilde2", Conclusion::NoCriminalsAnyQ},
      {"dihedral", Conclusion::CriminalsForSomeQ},   {"nakayama2", Conclusion::CriminalsForSomeQ},
      {"nakayama3", Conclusion::CriminalsForSomeQ},  {"two_crossings", Conclusion::CriminalsForSomeQ},
      {"short_cycle", Conclusion::CriminalsForSomeQ}, {"nakayama_finite", Conclusion::FiniteType}};
  for (const auto& [name, conclusion] : cases) {
    INFO(name);
    auto v = theorem_verdict(fixture(name));
    CHECK(v.conclusion == conclusion);
    CHECK(v.certificate_complete == (conclusion != Conclusion::FiniteType));
    CHECK(v.infinite_type.infinite == (conclusion != Conclusion::FiniteType));
  }
}

TEST_CASE("the infinite-type check falls back when no minimal word exists") {
  auto alg = fixture("short_cycle");
  auto r = infinite_type_check(alg);
  CHECK(r.infinite);
  CHECK_FALSE(r.from_minimal);
  CHECK(r.minimal_words == 0);
  REQUIRE(r.witness);
  CHECK_FALSE(check_band_word(alg, *r.witness).has_value());
  auto finite = infinite_type_check(fixture("nakayama_finite"));
  CHECK_FALSE(finite.infinite);
  CHECK(finite.cap == 6);
}
