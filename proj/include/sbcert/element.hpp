#pragma once

// Elements of the algebra as linear combinations of basis paths.
//
// Coefficients are Rational for concrete scalars, or LaurentPolynomial when the
// socle scalars are indeterminates.

#include "sbcert/algebra.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace sbcert {

template <typename Coeff>
struct CoefficientRing;

template <>
struct CoefficientRing<Rational> {
  static bool is_zero(const Rational& c) { return sgn(c) == 0; }
  static Rational scalar(const AlgebraPresentation& alg, const ScalarRef& ref) {
    const auto& s = alg.scalar(ref);
    if (s.is_symbolic()) throw std::domain_error("symbolic scalar '" + s.symbol() + "' in a concrete computation");
    return s.rational();
  }
  static std::string to_string(const Rational& c) { return sbcert::to_string(c); }
};

template <>
struct CoefficientRing<LaurentPolynomial> {
  static bool is_zero(const LaurentPolynomial& c) { return c.is_zero(); }
  static LaurentPolynomial scalar(const AlgebraPresentation& alg, const ScalarRef& ref) {
    const auto& s = alg.scalar(ref);
    if (s.is_symbolic()) return LaurentPolynomial(ScalarMonomial::variable(s.symbol()));
    return LaurentPolynomial(s.rational());
  }
  static std::string to_string(const LaurentPolynomial& c) { return c.to_string(); }
};

/// -q/p at a valency-two vertex: the factor picked up when the non-representative
/// socle path is rewritten.
template <typename Coeff>
Coeff socle_flip(const AlgebraPresentation& alg, int v) {
  using Ring = CoefficientRing<Coeff>;
  Coeff p = Ring::scalar(alg, ScalarRef{v, ScalarSide::P});
  Coeff q = Ring::scalar(alg, ScalarRef{v, ScalarSide::Q});
  if constexpr (std::is_same_v<Coeff, Rational>) {
    return -q / p;
  } else {
    auto pm = p.as_monomial();
    auto qm = q.as_monomial();
    return LaurentPolynomial(ScalarMonomial(-1) * (*qm) / (*pm));
  }
}

template <typename Coeff>
class AlgebraElement {
 public:
  using Ring = CoefficientRing<Coeff>;

  AlgebraElement() = default;
  explicit AlgebraElement(const AlgebraPresentation& alg) : digest_(alg.digest()) {}

  static AlgebraElement basis(const AlgebraPresentation& alg, const Path& p, const Coeff& c = Coeff(1)) {
    AlgebraElement e(alg);
    e.add_term(p, c);
    return e;
  }

  static AlgebraElement idempotent(const AlgebraPresentation& alg, int v) {
    return basis(alg, Path::idempotent(v));
  }

  /// The image of an arrow word; zero if the word is zero in the algebra.
  static AlgebraElement from_arrows(const AlgebraPresentation& alg, int vertex, const std::vector<int>& arrows,
                                    const Coeff& c = Coeff(1)) {
    AlgebraElement e(alg);
    if (auto r = reduce_arrows(alg, vertex, arrows)) {
      e.add_term(r->path, r->flipped ? Coeff(c * socle_flip<Coeff>(alg, r->path.vertex)) : c);
    }
    return e;
  }

  void add_term(const Path& p, const Coeff& c) {
    if (Ring::is_zero(c)) return;
    auto it = terms_.find(p);
    if (it == terms_.end()) {
      terms_.emplace(p, c);
      return;
    }
    it->second = it->second + c;
    if (Ring::is_zero(it->second)) terms_.erase(it);
  }

  std::uint64_t algebra_digest() const { return digest_; }
  const std::map<Path, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Coeff coefficient(const Path& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  AlgebraElement& operator+=(const AlgebraElement& other) {
    check_same(other);
    for (const auto& [p, c] : other.terms_) add_term(p, c);
    return *this;
  }
  AlgebraElement operator+(const AlgebraElement& other) const {
    AlgebraElement out = *this;
    out += other;
    return out;
  }
  AlgebraElement operator-(const AlgebraElement& other) const { return *this + other.scaled(Coeff(-1)); }

  AlgebraElement scaled(const Coeff& c) const {
    AlgebraElement out;
    out.digest_ = digest_;
    for (const auto& [p, x] : terms_) out.add_term(p, Coeff(x * c));
    return out;
  }

  std::string to_string(const AlgebraPresentation& alg) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [p, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + Ring::to_string(c) + ")*" + path_to_string(alg, p);
    }
    return out;
  }

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.digest_ == b.digest_ && a.terms_ == b.terms_;
  }

  void check_same(const AlgebraElement& other) const {
    if (digest_ != 0 && other.digest_ != 0 && digest_ != other.digest_) {
      throw std::invalid_argument("algebra elements belong to different algebras");
    }
  }

  void check_algebra(const AlgebraPresentation& alg) const {
    if (digest_ != 0 && digest_ != alg.digest()) throw std::invalid_argument("element belongs to a different algebra");
  }

 private:
  std::uint64_t digest_ = 0;
  std::map<Path, Coeff> terms_;
};

using Element = AlgebraElement<Rational>;
using SymbolicElement = AlgebraElement<LaurentPolynomial>;

/// Bilinear product reduced to basis form.
template <typename Coeff>
AlgebraElement<Coeff> multiply(const AlgebraPresentation& alg, const AlgebraElement<Coeff>& x,
                               const AlgebraElement<Coeff>& y) {
  x.check_algebra(alg);
  y.check_algebra(alg);
  AlgebraElement<Coeff> out(alg);
  for (const auto& [px, cx] : x.terms()) {
    for (const auto& [py, cy] : y.terms()) {
      auto r = concatenate(alg, px, py);
      if (!r) continue;
      Coeff c = cx * cy;
      if (r->flipped) c = c * socle_flip<Coeff>(alg, r->path.vertex);
      out.add_term(r->path, c);
    }
  }
  return out;
}

}  // namespace sbcert
