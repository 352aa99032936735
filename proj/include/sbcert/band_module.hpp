#pragma once

// Socle relations along a band word, the parameter v, and band modules M(lambda).
//
// At f_t:  p_t (A_t a_t) + q_t (B_t b_t) = 0, with A_t: f_t -> e_t, B_t: f_t -> e_{t+1}.
// At e_t:  p'_t (a_t A_t) + q'_t (b_{t-1} B_{t-1}) = 0.
// v = prod_t (q_t / p_t)(p'_t / q'_t).

#include "sbcert/band_word.hpp"
#include "sbcert/element.hpp"
#include "sbcert/module.hpp"
#include "sbcert/monomial.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace sbcert {

class WordError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RelationTerm {
  std::vector<int> big_a;  // A_t
  std::vector<int> big_b;  // B_t
  ScalarRef p;             // multiplies A_t a_t
  ScalarRef q;             // multiplies B_t b_t
  ScalarRef p_prime;       // multiplies a_t A_t
  ScalarRef q_prime;       // multiplies b_{t-1} B_{t-1}
};

struct RelationView {
  std::vector<RelationTerm> terms;
};

inline void require_band_word(const AlgebraPresentation& alg, const BandWord& w) {
  if (auto bad = check_band_word(alg, w)) throw WordError("not a band word: " + *bad);
}

/// The sigma-path completing `p` to the socle path starting with p's first arrow.
inline std::vector<int> socle_complement(const AlgebraPresentation& alg, const std::vector<int>& p) {
  long rest = alg.socle_length(p.front()) - static_cast<long>(p.size());
  std::vector<int> out;
  int next = alg.sigma(p.back());
  for (long k = 0; k < rest; ++k) {
    out.push_back(next);
    next = alg.sigma(next);
  }
  return out;
}

namespace detail {

template <typename Coeff>
AlgebraElement<Coeff> word_element(const AlgebraPresentation& alg, const std::vector<int>& arrows) {
  return AlgebraElement<Coeff>::from_arrows(alg, alg.quiver().source(arrows.front()), arrows);
}

inline std::vector<int> join(std::vector<int> x, const std::vector<int>& y) {
  x.insert(x.end(), y.begin(), y.end());
  return x;
}

}  // namespace detail

/// Factors the socle relations at every f_t and e_t along the word and checks
/// the zero identities a_t B_t = b_t A_t = A_t b_{t-1} = B_t a_{t+1} = 0.
inline RelationView relation_views(const AlgebraPresentation& alg, const BandWord& w) {
  require_band_word(alg, w);
  RelationView view;
  for (int t = 0; t < w.size(); ++t) {
    RelationTerm term;
    term.big_a = socle_complement(alg, w.a[t]);
    term.big_b = socle_complement(alg, w.b[t]);
    if (term.big_a.empty() || term.big_b.empty()) throw WordError("socle path does not factor along the word");
    term.p = alg.branch_scalar(term.big_a.front());
    term.q = alg.branch_scalar(term.big_b.front());
    term.p_prime = alg.branch_scalar(w.a[t].front());
    term.q_prime = alg.branch_scalar(w.b_at(t - 1).front());
    view.terms.push_back(std::move(term));
  }

  using E = SymbolicElement;
  auto elem = [&](const std::vector<int>& arrows) { return detail::word_element<LaurentPolynomial>(alg, arrows); };
  auto zero_product = [&](const std::vector<int>& x, const std::vector<int>& y) {
    if (alg.quiver().target(x.back()) != alg.quiver().source(y.front())) return true;
    return multiply(alg, elem(x), elem(y)).is_zero();
  };
  auto scalar = [&](const ScalarRef& r) { return CoefficientRing<LaurentPolynomial>::scalar(alg, r); };
  for (int t = 0; t < w.size(); ++t) {
    const auto& term = view.terms[t];
    const auto& prev = view.terms[w.index(t - 1)];
    if (!zero_product(w.a[t], term.big_b) || !zero_product(w.b[t], term.big_a) ||
        !zero_product(term.big_a, w.b_at(t - 1)) || !zero_product(term.big_b, w.a_at(t + 1))) {
      throw std::logic_error("band word violates a zero identity at index " + std::to_string(t));
    }
    E at_f = multiply(alg, elem(term.big_a), elem(w.a[t])).scaled(scalar(term.p)) +
             multiply(alg, elem(term.big_b), elem(w.b[t])).scaled(scalar(term.q));
    E at_e = multiply(alg, elem(w.a[t]), elem(term.big_a)).scaled(scalar(term.p_prime)) +
             multiply(alg, elem(w.b_at(t - 1)), elem(prev.big_b)).scaled(scalar(term.q_prime));
    if (!at_f.is_zero() || !at_e.is_zero()) {
      throw std::logic_error("socle relation does not hold along the word at index " + std::to_string(t));
    }
  }
  return view;
}

inline Rational v_parameter(const AlgebraPresentation& alg, const BandWord& w) {
  auto view = relation_views(alg, w);
  Rational v = 1;
  auto value = [&](const ScalarRef& r) { return CoefficientRing<Rational>::scalar(alg, r); };
  for (const auto& t : view.terms) v *= value(t.q) / value(t.p) * value(t.p_prime) / value(t.q_prime);
  return v;
}

/// v as a Laurent monomial in the canonical indeterminates p_<vertex>, q_<vertex>.
inline ScalarMonomial v_symbolic(const AlgebraPresentation& alg, const BandWord& w) {
  auto view = relation_views(alg, w);
  ScalarMonomial v(1);
  auto var = [&](const ScalarRef& r) { return ScalarMonomial::variable(alg.indeterminate(r)); };
  for (const auto& t : view.terms) v = v * var(t.q) / var(t.p) * var(t.p_prime) / var(t.q_prime);
  return v;
}

// ---------------------------------------------------------------------------
// Band modules

struct BandPosition {
  int vertex;
  int local;  // coordinate within the space at `vertex`
};

struct BandModule {
  BandWord word;
  Rational lambda;
  ModuleRep rep;
  std::vector<BandPosition> positions;  // position 0 is e_0
};

/// M(lambda) with V = K: one basis vector per position along the band, the first
/// arrow of a_0 acting by lambda and every other arrow of the word by 1.
inline BandModule build_band_module(const AlgebraPresentation& alg, const BandWord& w, const Rational& lambda) {
  if (sgn(lambda) == 0) throw std::invalid_argument("lambda must be nonzero");
  require_band_word(alg, w);
  const auto& q = alg.quiver();
  struct Edge {
    int arrow, from, to;
    Rational scalar;
  };
  std::vector<int> vertex_of{word_e(alg, w, 0)};
  std::vector<Edge> edges;
  int current = 0;
  auto new_position = [&](int vertex) {
    vertex_of.push_back(vertex);
    return static_cast<int>(vertex_of.size()) - 1;
  };
  for (int t = 0; t < w.size(); ++t) {
    for (std::size_t k = 0; k < w.a[t].size(); ++k) {
      int arrow = w.a[t][k];
      int next = new_position(q.target(arrow));
      edges.push_back(Edge{arrow, current, next, (t == 0 && k == 0) ? lambda : Rational(1)});
      current = next;
    }
    // walk b_t backwards from f_t to e_{t+1}
    for (std::size_t k = w.b[t].size(); k-- > 0;) {
      int arrow = w.b[t][k];
      bool closes = (t == w.m() && k == 0);
      int prev = closes ? 0 : new_position(q.source(arrow));
      edges.push_back(Edge{arrow, prev, current, Rational(1)});
      current = prev;
    }
  }
  std::vector<int> dims(q.vertex_count(), 0);
  std::vector<BandPosition> positions;
  for (int v : vertex_of) positions.push_back(BandPosition{v, dims[v]++});
  std::vector<Matrix> actions;
  for (int a = 0; a < q.arrow_count(); ++a) actions.emplace_back(dims[q.target(a)], dims[q.source(a)]);
  for (const auto& e : edges) {
    actions[e.arrow](positions[e.to].local, positions[e.from].local) += e.scalar;
  }
  return BandModule{w, lambda, ModuleRep(alg, std::move(dims), std::move(actions)), std::move(positions)};
}

/// The band module as a checked module: every relation must act as zero.
inline ModuleRep module_from_band(const AlgebraPresentation& alg, const BandModule& band) {
  auto bad = relation_violations(alg, band.rep);
  if (!bad.empty()) throw ModuleError("band module violates a relation: " + bad.front());
  return band.rep;
}

}  // namespace sbcert
