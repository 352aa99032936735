#include "sbcert/band_module.hpp"
#include "sbcert/io/presentation_file.hpp"
#include "sbcert/module.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace sbcert;

namespace {

AlgebraPresentation fixture(const std::string& name) {
  auto r = load_presentation(std::string(SBCERT_FIXTURES) + "/" + name + ".alg");
  REQUIRE(r.ok());
  return *r.algebra;
}

ModuleRep simple(const AlgebraPresentation& alg, int v) {
  const auto& q = alg.quiver();
  std::vector<int> dims(q.vertex_count(), 0);
  dims[v] = 1;
  std::vector<Matrix> actions;
  for (int a = 0; a < q.arrow_count(); ++a) actions.emplace_back(dims[q.target(a)], dims[q.source(a)]);
  return ModuleRep(alg, dims, actions);
}

Matrix random_invertible(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> d(-2, 2);
  for (;;) {
    Matrix m(n, n);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) m(r, c) = d(rng);
    }
    if (!is_zero(determinant(m))) return m;
  }
}

Matrix inverse(const Matrix& m) { return *solve(m, Matrix::identity(m.rows())); }

// g M g^-1 for a random base change g per vertex.
ModuleRep conjugate(const AlgebraPresentation& alg, const ModuleRep& m, std::mt19937& rng) {
  const auto& q = alg.quiver();
  std::vector<Matrix> g, gi;
  for (int v = 0; v < q.vertex_count(); ++v) {
    g.push_back(random_invertible(rng, m.dim(v)));
    gi.push_back(inverse(g.back()));
  }
  std::vector<Matrix> actions;
  for (int a = 0; a < q.arrow_count(); ++a) actions.push_back(g[q.target(a)] * m.action(a) * gi[q.source(a)]);
  return ModuleRep(alg, m.dims(), actions);
}

const std::vector<std::string> kNames{"dihedral_q2", "hecke", "two_crossings", "nakayama3", "ztilde2", "commutative"};

}  // namespace

TEST_CASE("projective modules satisfy the relations and have simple socle") {
  for (const auto& name : kNames) {
    auto alg = fixture(name);
    for (int v = 0; v < alg.quiver().vertex_count(); ++v) {
      auto p = projective_module(alg, v).rep;
      CHECK(relation_violations(alg, p).empty());
      CHECK(p.total_dimension() == static_cast<int>(projective_basis(alg, v).size()));
      CHECK(hom_space(alg, simple(alg, v), p).size() == 1);
      for (int u = 0; u < alg.quiver().vertex_count(); ++u) {
        if (u != v) CHECK(hom_space(alg, simple(alg, u), p).empty());
      }
      CHECK(syzygy(alg, p).total_dimension() == 0);
    }
  }
}

TEST_CASE("End(e_v L) has the dimension of e_v L e_v") {
  for (const auto& name : kNames) {
    auto alg = fixture(name);
    for (int v = 0; v < alg.quiver().vertex_count(); ++v) {
      std::size_t paths_to_v = 0;
      for (const auto& p : projective_basis(alg, v)) paths_to_v += path_target(alg, p) == v ? 1 : 0;
      auto p = projective_module(alg, v).rep;
      CHECK(hom_space(alg, p, p).size() == paths_to_v);
    }
  }
}

TEST_CASE("syzygy of a simple module is the radical of its projective") {
  for (const auto& name : kNames) {
    auto alg = fixture(name);
    for (int v = 0; v < alg.quiver().vertex_count(); ++v) {
      auto s = simple(alg, v);
      auto cover = projective_cover(alg, s);
      REQUIRE(cover.cover.summands == std::vector<int>{v});
      CHECK(is_morphism(alg, cover.cover.rep, s, cover.projection));
      auto omega = syzygy(alg, s);
      CHECK(omega.total_dimension() == static_cast<int>(projective_basis(alg, v).size()) - 1);
      CHECK(relation_violations(alg, omega).empty());
    }
  }
}

TEST_CASE("projective cover of a band module is minimal") {
  auto alg = fixture("dihedral_q2");
  auto w = parse_word(alg, "x|y");
  auto m = build_band_module(alg, w, Rational(3)).rep;
  auto cover = projective_cover(alg, m);
  CHECK(cover.cover.summands.size() == static_cast<std::size_t>(top(alg, m).dims[0]));
  CHECK(cover.cover.summands.size() == 1);
  for (int v = 0; v < alg.quiver().vertex_count(); ++v) CHECK(rank(cover.projection.maps[v]) == m.dim(v));
}

TEST_CASE("isomorphism survives random base changes") {
  std::mt19937 rng(17);
  for (const auto& name : {"dihedral_q2", "two_crossings", "nakayama3", "hecke"}) {
    auto alg = fixture(name);
    for (const auto& w : enumerate_band_words(alg, 6)) {
      auto m = build_band_module(alg, w, Rational(3, 2)).rep;
      auto n = conjugate(alg, m, rng);
      auto r = is_isomorphic(alg, m, n);
      CHECK(r.isomorphic);
      REQUIRE(r.witness);
      CHECK(is_morphism(alg, m, n, *r.witness));
      for (int v = 0; v < alg.quiver().vertex_count(); ++v) CHECK(!is_zero(determinant(r.witness->maps[v])));
    }
  }
}

TEST_CASE("band modules with different parameters are not isomorphic") {
  auto alg = fixture("dihedral_q2");
  auto w = parse_word(alg, "x|y");
  auto m1 = build_band_module(alg, w, Rational(1)).rep;
  auto m2 = build_band_module(alg, w, Rational(2)).rep;
  auto r = is_isomorphic(alg, m1, m2);
  CHECK_FALSE(r.isomorphic);
  CHECK_FALSE(r.obstruction.empty());
  CHECK_FALSE(is_isomorphic(alg, m1, simple(alg, 0)).isomorphic);
}

TEST_CASE("isomorphism budget is enforced") {
  std::mt19937 rng(2);
  int searched = 0;
  for (const auto& name : {"nakayama3", "two_crossings", "dihedral_q2"}) {
    auto alg = fixture(name);
    for (const auto& w : enumerate_band_words(alg, 8)) {
      auto m = build_band_module(alg, w, Rational(1)).rep;
      auto n = conjugate(alg, m, rng);
      auto full = is_isomorphic(alg, m, n);
      CHECK(full.isomorphic);
      if (full.grid_points > 1) {
        ++searched;
        CHECK_THROWS_AS(is_isomorphic(alg, m, n, full.grid_points - 1), IsoBudgetExceeded);
      }
    }
  }
  INFO("pairs needing more than one grid point: " << searched);
  SUCCEED();
}

TEST_CASE("modules violating a relation are rejected") {
  auto alg = fixture("dihedral");
  std::vector<Matrix> actions{Matrix::identity(1), Matrix(1, 1)};
  CHECK_THROWS_AS(make_module(alg, {1}, actions), ModuleError);
  CHECK_THROWS_AS(ModuleRep(alg, {2}, actions), ModuleError);
}
