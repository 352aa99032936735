#include "sbcert/band_module.hpp"
#include "sbcert/io/presentation_file.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace sbcert;

namespace {

AlgebraPresentation fixture(const std::string& name) {
  auto r = load_presentation(std::string(SBCERT_FIXTURES) + "/" + name + ".alg");
  REQUIRE(r.ok());
  return *r.algebra;
}

ScalarMonomial var(const std::string& name, int e = 1) { return ScalarMonomial::variable(name, Rational(e)); }

AlgebraPresentation random_scalars(const AlgebraPresentation& alg, std::mt19937& rng) {
  static const std::vector<Rational> pool{Rational(1), Rational(-1), Rational(2), Rational(3), Rational(1, 2),
                                          Rational(5, 3)};
  std::map<int, SoclePair> repl;
  for (int v : alg.valency_two_vertices()) repl.emplace(v, SoclePair{pool[rng() % pool.size()], pool[rng() % pool.size()]});
  return alg.with_scalars(repl);
}

}  // namespace

TEST_CASE("dihedral word x|y: v = (q/p)^2 and the relation scalars swap") {
  auto alg = fixture("dihedral_symbolic");
  auto w = parse_word(alg, "x|y");
  CHECK(v_symbolic(alg, w) == var("q_v0", 2) * var("p_v0", -2));
  auto view = relation_views(alg, w);
  REQUIRE(view.terms.size() == 1);
  const auto& t = view.terms[0];
  CHECK(alg.scalar(t.p).to_string() == "p0");
  CHECK(alg.scalar(t.q).to_string() == "q0");
  CHECK(alg.scalar(t.p_prime).to_string() == "q0");
  CHECK(alg.scalar(t.q_prime).to_string() == "p0");
  const auto& q = alg.quiver();
  CHECK(arrows_to_string(alg, t.big_a) == "y.x.y");
  CHECK(arrows_to_string(alg, t.big_b) == "x.y.x");
  CHECK(q.arrow_count() == 2);
}

TEST_CASE("concrete dihedral values of v") {
  CHECK(v_parameter(fixture("dihedral"), parse_word(fixture("dihedral"), "x|y")) == 1);
  auto alg = fixture("dihedral_q2");
  CHECK(v_parameter(alg, parse_word(alg, "x|y")) == 4);
}

TEST_CASE("commutative and Hecke-type words have v identically 1") {
  for (const auto& name : {"commutative", "hecke"}) {
    auto alg = fixture(name);
    for (const auto& w : enumerate_band_words(alg, 8)) {
      CHECK(v_symbolic(alg, w).is_identity());
      CHECK(v_parameter(alg, w) == 1);
    }
  }
}

TEST_CASE("the word alpha1.alpha2.alpha3 | beta gives a four-dimensional module") {
  auto alg = fixture("two_crossings");
  auto w = parse_word(alg, "alpha1.alpha2.alpha3|beta");
  auto band = build_band_module(alg, w, Rational(5));
  CHECK(band.rep.total_dimension() == 4);
  CHECK(relation_violations(alg, band.rep).empty());
  const auto& q = alg.quiver();
  CHECK(band.rep.action(*q.find_arrow("alpha1"))(0, 0) == 5);
}

TEST_CASE("band modules satisfy all relations and have the word's dimension") {
  for (const auto& name : {"dihedral_q2", "commutative", "hecke", "two_crossings", "nakayama2", "nakayama3", "ztilde1",
                           "ztilde2", "short_cycle"}) {
    auto alg = fixture(name);
    for (const auto& w : enumerate_band_words(alg, 10)) {
      for (int l : {1, -2}) {
        auto band = build_band_module(alg, w, Rational(l));
        CHECK(relation_violations(alg, band.rep).empty());
        CHECK(band.rep.total_dimension() == w.total_length());
        // e_t and the interior of a_t, f_t and the interior of b_t
        std::vector<int> expected(alg.quiver().vertex_count(), 0);
        for (int t = 0; t < w.size(); ++t) {
          for (int a : w.a[t]) ++expected[alg.quiver().source(a)];
          for (int a : w.b[t]) ++expected[alg.quiver().target(a)];
        }
        CHECK(band.rep.dims() == expected);
      }
    }
  }
}

TEST_CASE("symbolic v evaluates to the concrete v under random scalars") {
  std::mt19937 rng(29);
  for (const auto& name : {"dihedral", "two_crossings", "nakayama2", "nakayama3", "nakayama4", "ztilde2", "hecke",
                           "short_cycle"}) {
    auto base = fixture(name);
    for (int trial = 0; trial < 6; ++trial) {
      auto alg = random_scalars(base, rng);
      for (const auto& w : enumerate_band_words(alg, 8)) {
        auto eval = v_symbolic(alg, w).evaluate(alg.canonical_assignment());
        REQUIRE(eval);
        CHECK(*eval == v_parameter(alg, w));
      }
    }
  }
}

TEST_CASE("v of the inverted word is the reciprocal") {
  for (const auto& name : {"dihedral_symbolic", "nakayama3", "two_crossings"}) {
    auto alg = fixture(name);
    for (const auto& w : enumerate_band_words(alg, 8)) {
      CHECK(v_symbolic(alg, invert(w)) == v_symbolic(alg, w).inverse());
      CHECK(v_symbolic(alg, rotate(w, 1)) == v_symbolic(alg, w));
    }
  }
}

TEST_CASE("band modules reject invalid words and zero parameters") {
  auto alg = fixture("dihedral");
  CHECK_THROWS_AS(build_band_module(alg, parse_word(alg, "x|x"), Rational(1)), WordError);
  CHECK_THROWS_AS(build_band_module(alg, parse_word(alg, "x|y"), Rational(0)), std::invalid_argument);
}
