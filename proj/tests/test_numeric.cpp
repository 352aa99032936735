#include "sbcert/linalg.hpp"
#include "sbcert/monomial.hpp"
#include "sbcert/rational.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace sbcert;

TEST_CASE("rationals parse in lowest terms") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-5/3") == Rational(-5, 3));
  CHECK(parse_rational("+7") == Rational(7));
  CHECK(to_string(parse_rational("-10/4")) == "-5/2");
  CHECK_THROWS_AS(parse_rational("10/-4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK(looks_like_rational("-3/7"));
  CHECK_FALSE(looks_like_rational("p0"));
}

TEST_CASE("monomials multiply, invert and take exact roots") {
  auto p = ScalarMonomial::variable("p");
  auto q = ScalarMonomial::variable("q");
  auto m = q * q / (p * p);
  CHECK(m.exponent("q") == 2);
  CHECK(m.exponent("p") == -2);
  CHECK((m * m.inverse()).is_identity());
  auto root = m.pow(Rational(1, 2));
  CHECK(root == q / p);
  CHECK(root.pow(Rational(2)) == m);
  CHECK(ScalarMonomial(Rational(4)).pow(Rational(-2)) == ScalarMonomial(Rational(1, 16)));
  CHECK_THROWS_AS(ScalarMonomial(Rational(4)).pow(Rational(1, 2)), std::domain_error);
  auto value = m.evaluate({{"p", Rational(1)}, {"q", Rational(2)}});
  REQUIRE(value);
  CHECK(*value == 4);
  CHECK_THROWS_AS(m.evaluate({{"p", Rational(1)}}), std::out_of_range);
  CHECK_FALSE(root.pow(Rational(1, 3)).evaluate({{"p", Rational(1)}, {"q", Rational(8)}}).has_value());
}

TEST_CASE("Laurent polynomials add and cancel") {
  LaurentPolynomial p(ScalarMonomial::variable("p"));
  LaurentPolynomial q(ScalarMonomial::variable("q"));
  auto s = p * q + (-(q * p));
  CHECK(s.is_zero());
  auto t = (p + q) * (p + q);
  CHECK_FALSE(t.as_monomial().has_value());
}

namespace {

Matrix random_matrix(std::mt19937& rng, int rows, int cols, int spread) {
  std::uniform_int_distribution<int> d(-spread, spread);
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) m(r, c) = make_rational(d(rng), 1 + (d(rng) & 1));
  }
  return m;
}

// Cofactor expansion, independent of the elimination code.
Rational cofactor_det(const Matrix& m) {
  int n = m.rows();
  if (n == 0) return Rational(1);
  if (n == 1) return m(0, 0);
  Rational out = 0;
  for (int c = 0; c < n; ++c) {
    Matrix minor(n - 1, n - 1);
    for (int r = 1; r < n; ++r) {
      for (int k = 0, kk = 0; k < n; ++k) {
        if (k != c) minor(r - 1, kk++) = m(r, k);
      }
    }
    Rational term = m(0, c) * cofactor_det(minor);
    out += (c % 2 == 0) ? term : Rational(-term);
  }
  return out;
}

}  // namespace

TEST_CASE("determinant agrees with cofactor expansion") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + trial % 5;
    auto m = random_matrix(rng, n, n, 3);
    CHECK(determinant(m) == cofactor_det(m));
  }
}

TEST_CASE("rank-nullity and kernel vectors") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    int rows = 1 + trial % 4;
    int cols = 1 + (trial / 4) % 6;
    auto a = random_matrix(rng, rows, 2, 2);
    auto b = random_matrix(rng, 2, cols, 2);
    auto m = a * b;  // rank at most 2
    auto k = kernel(m);
    CHECK(rank(m) + k.cols() == cols);
    CHECK((m * k).is_zero());
    CHECK(rank(m) <= 2);
    if (k.cols() > 0) CHECK(rank(k) == k.cols());
    auto basis = column_basis(m);
    CHECK(basis.cols() == rank(m));
  }
}

TEST_CASE("solve returns a solution or reports inconsistency") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    auto a = random_matrix(rng, 3, 4, 3);
    auto x = random_matrix(rng, 4, 2, 3);
    auto b = a * x;
    auto s = solve(a, b);
    REQUIRE(s);
    CHECK(a * *s == b);
  }
  Matrix a(2, 1);
  a(0, 0) = 1;
  a(1, 0) = 1;
  Matrix b(2, 1);
  b(0, 0) = 1;
  b(1, 0) = 2;
  CHECK_FALSE(solve(a, b).has_value());
}

TEST_CASE("sparse echelon nullspace matches the dense kernel") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    auto m = random_matrix(rng, 4, 6, 1);
    SparseEchelon e(6);
    for (int r = 0; r < m.rows(); ++r) {
      SparseRow row;
      for (int c = 0; c < m.cols(); ++c) {
        if (!is_zero(m(r, c))) row.emplace_back(c, m(r, c));
      }
      e.add_row(row);
    }
    auto ns = e.nullspace();
    CHECK(static_cast<int>(ns.size()) == kernel(m).cols());
    for (const auto& x : ns) {
      for (int r = 0; r < m.rows(); ++r) {
        Rational dot = 0;
        for (int c = 0; c < m.cols(); ++c) dot += m(r, c) * x[c];
        CHECK(is_zero(dot));
      }
    }
  }
}
