#pragma once

// The decision procedure with certificates. A Brauer graph that is a tree with
// no multiple edges yields a symbolic rescaling of arrows taking every socle
// relation to ratio 1. Any other graph yields a band word, a concrete scalar
// assignment with v not in {1, -1}, and an oracle check of Omega^2.

#include "sbcert/brauer_graph.hpp"
#include "sbcert/resolution.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sbcert {

struct InfiniteTypeResult {
  bool infinite = false;
  std::optional<BandWord> witness;
  std::size_t minimal_words = 0;
  bool from_minimal = false;  // witness is a word of minimal paths
  long cap = 0;               // length cap of the fallback search
};

/// Default cap for the fallback search: twice the sum of all socle lengths.
inline long default_band_cap(const AlgebraPresentation& alg) {
  long total = 0;
  for (const auto& c : alg.cycles()) total += static_cast<long>(c.arrows.size()) * c.multiplicity;
  return 2 * total;
}

/// Infinite type iff a band word exists. Words of minimal paths are tried first;
/// when a minimal path through a cycle is the whole socle path there may be no
/// such word, and the search continues over all words up to the cap.
inline InfiniteTypeResult infinite_type_check(const AlgebraPresentation& alg, long cap = 0) {
  auto words = enumerate_minimal_band_words(alg);
  InfiniteTypeResult out;
  out.minimal_words = words.size();
  out.cap = cap > 0 ? cap : default_band_cap(alg);
  if (!words.empty()) {
    out.infinite = true;
    out.from_minimal = true;
    out.witness = words.front();
    return out;
  }
  for (long len = 2; len <= out.cap; ++len) {
    auto general = enumerate_band_words(alg, len);
    if (!general.empty()) {
      out.infinite = true;
      out.witness = general.front();
      return out;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rescaling

struct RescalingCertificate {
  int root = -1;
  std::vector<int> distance;            // per cycle
  std::vector<int> scaled_arrow;        // per cycle, -1 for the root
  std::vector<ScalarMonomial> factors;  // per arrow: new arrow = factor * old arrow
  std::map<int, ScalarMonomial> ratios;  // valency-two vertex -> transformed p/q
  bool verified = false;
};

/// Transformed ratio p'/q' at valency-two vertex v for the given arrow factors.
/// With alpha' = s_alpha alpha, the relation p X + q C = 0 becomes
/// (p / s_X) X' + (q / s_C) C' = 0, where s_X is the product of factors along X.
inline ScalarMonomial transformed_ratio(const AlgebraPresentation& alg, const std::vector<ScalarMonomial>& factors,
                                        int v) {
  auto sp = socle_paths(alg, v);
  ScalarMonomial sx, sc;
  for (int a : *sp.d) sx = sx * factors.at(a);
  for (int a : sp.c) sc = sc * factors.at(a);
  ScalarMonomial p = ScalarMonomial::variable(alg.indeterminate(ScalarRef{v, ScalarSide::P}));
  ScalarMonomial q = ScalarMonomial::variable(alg.indeterminate(ScalarRef{v, ScalarSide::Q}));
  return (p / sx) / (q / sc);
}

inline bool verify_rescaling(const AlgebraPresentation& alg, const BrauerGraph& g, const RescalingCertificate& cert) {
  if (static_cast<int>(cert.factors.size()) != alg.quiver().arrow_count()) return false;
  if (cert.root < 0 || cert.root >= g.node_count) return false;
  for (int a = 0; a < alg.quiver().arrow_count(); ++a) {
    bool allowed = alg.cycle_of(a) != cert.root && cert.scaled_arrow.at(alg.cycle_of(a)) == a;
    if (!allowed && !cert.factors[a].is_identity()) return false;
  }
  for (int v : alg.valency_two_vertices()) {
    if (!transformed_ratio(alg, cert.factors, v).is_identity()) return false;
  }
  return true;
}

/// Induction on the distance from a leaf cycle: each newly reached cycle has one
/// arrow, the one leaving the connecting vertex, scaled by an m-th root.
inline RescalingCertificate rescale_to_one(const AlgebraPresentation& alg) {
  auto g = build_brauer_graph(alg);
  if (classify(g).kind != GraphKind::TreeNoMultiEdge) {
    throw std::invalid_argument("rescaling needs a Brauer graph that is a tree with no multiple edges");
  }
  const auto& q = alg.quiver();
  RescalingCertificate cert;
  cert.factors.assign(q.arrow_count(), ScalarMonomial());
  cert.distance.assign(g.node_count, -1);
  cert.scaled_arrow.assign(g.node_count, -1);
  std::vector<std::vector<int>> incident(g.node_count);
  for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
    incident[g.edges[i].u].push_back(i);
    incident[g.edges[i].w].push_back(i);
  }
  cert.root = 0;
  for (int c = 1; c < g.node_count; ++c) {
    if (incident[c].size() < incident[cert.root].size()) cert.root = c;
  }
  cert.distance[cert.root] = 0;
  std::vector<int> queue{cert.root};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    int parent = queue[k];
    for (int e : incident[parent]) {
      const auto& edge = g.edges[e];
      int child = edge.u == parent ? edge.w : edge.u;
      if (cert.distance[child] != -1) continue;
      cert.distance[child] = cert.distance[parent] + 1;
      queue.push_back(child);
      int j = edge.label;
      auto out = q.out_arrows(j);
      int beta = alg.cycle_of(out[0]) == child ? out[0] : out[1];
      int rep = alg.representative_arrow(j);
      long mult = alg.cycles()[child].multiplicity;
      auto sp = socle_paths(alg, j);
      const auto& parent_branch = beta == rep ? *sp.d : sp.c;
      ScalarMonomial parent_product;
      for (int a : parent_branch) parent_product = parent_product * cert.factors[a];
      ScalarMonomial p = ScalarMonomial::variable(alg.indeterminate(ScalarRef{j, ScalarSide::P}));
      ScalarMonomial qv = ScalarMonomial::variable(alg.indeterminate(ScalarRef{j, ScalarSide::Q}));
      // child branch is X (scalar p) when beta is not the representative
      ScalarMonomial power = beta == rep ? qv / p * parent_product : p / qv * parent_product;
      cert.factors[beta] = power.pow(Rational(1, mult));
      cert.scaled_arrow[child] = beta;
    }
  }
  for (int v : alg.valency_two_vertices()) cert.ratios.emplace(v, transformed_ratio(alg, cert.factors, v));
  cert.verified = verify_rescaling(alg, g, cert);
  return cert;
}

// ---------------------------------------------------------------------------
// Criminal witnesses

struct CriminalCertificate {
  BandWord word;
  std::map<int, SoclePair> assignment;  // scalars of the deformed algebra, per valency-two vertex
  std::string chosen_indeterminate;
  Rational chosen_value;
  ScalarMonomial v_symbolic;
  Rational v;
  Rational lambda = 1;
  OmegaReport oracle;
  bool non_isomorphic = false;  // M(v lambda) not isomorphic to M(lambda)
  bool verified = false;
};

inline bool is_rational_root_of_unity(const Rational& v) { return v == 1 || v == -1; }

/// Scalars all 1 except the chosen indeterminate, set to 2 (positive exponent)
/// or 1/2 (negative exponent), so that v = 2^k with k > 0.
inline std::optional<std::pair<std::string, Rational>> choose_assignment(const ScalarMonomial& v) {
  for (const auto& [name, e] : v.exponents()) {
    if (sgn(e) > 0) return std::make_pair(name, Rational(2));
  }
  for (const auto& [name, e] : v.exponents()) {
    if (sgn(e) < 0) return std::make_pair(name, Rational(1, 2));
  }
  return std::nullopt;
}

inline std::map<int, SoclePair> assignment_for(const AlgebraPresentation& alg, const std::string& name,
                                               const Rational& value) {
  std::map<int, SoclePair> out;
  for (int v : alg.valency_two_vertices()) {
    SoclePair pair{Rational(1), Rational(1)};
    if (alg.indeterminate(ScalarRef{v, ScalarSide::P}) == name) pair.p = value;
    if (alg.indeterminate(ScalarRef{v, ScalarSide::Q}) == name) pair.q = value;
    out.emplace(v, pair);
  }
  return out;
}

/// Recomputes every claim of a criminal certificate on the deformed algebra.
inline bool verify_criminal(const AlgebraPresentation& alg, CriminalCertificate& cert, long budget = 2'000'000) {
  auto deformed = alg.with_scalars(cert.assignment);
  if (check_band_word(deformed, cert.word)) return false;
  Rational v = v_parameter(deformed, cert.word);
  auto sym = v_symbolic(deformed, cert.word);
  auto eval = sym.evaluate(deformed.canonical_assignment());
  if (!eval || *eval != v || v != cert.v || is_rational_root_of_unity(v)) return false;
  cert.oracle = verify_omega_squared(deformed, cert.word, cert.lambda, budget);
  auto m_lambda = build_band_module(deformed, cert.word, cert.lambda).rep;
  auto m_v = build_band_module(deformed, cert.word, v * cert.lambda).rep;
  cert.non_isomorphic = !is_isomorphic(deformed, m_v, m_lambda, budget).isomorphic;
  return cert.oracle.iso_verified && cert.non_isomorphic;
}

struct WitnessSearch {
  std::optional<CriminalCertificate> certificate;
  long cap = 0;
  std::size_t words_tested = 0;
};

/// Minimal words first, then all words by increasing total length up to the cap
/// (default twice the number of arrows); the first word with v not identically 1 wins.
inline WitnessSearch find_criminal_witness(const AlgebraPresentation& alg, long cap = 0, long budget = 2'000'000) {
  WitnessSearch out;
  out.cap = cap > 0 ? cap : 2L * alg.quiver().arrow_count();
  auto attempt = [&](const BandWord& w) -> bool {
    ++out.words_tested;
    auto sym = v_symbolic(alg, w);
    auto choice = choose_assignment(sym);
    if (!choice) return false;
    CriminalCertificate cert;
    cert.word = w;
    cert.v_symbolic = sym;
    cert.chosen_indeterminate = choice->first;
    cert.chosen_value = choice->second;
    cert.assignment = assignment_for(alg, choice->first, choice->second);
    cert.v = v_parameter(alg.with_scalars(cert.assignment), w);
    cert.verified = verify_criminal(alg, cert, budget);
    out.certificate = std::move(cert);
    return true;
  };
  for (const auto& w : enumerate_minimal_band_words(alg)) {
    if (attempt(w)) return out;
  }
  std::set<std::vector<int>> tried;
  for (long len = 1; len <= out.cap; ++len) {
    for (const auto& w : enumerate_band_words(alg, len)) {
      if (w.total_length() != len || !tried.insert(word_key(alg, w)).second) continue;
      if (attempt(w)) return out;
    }
  }
  return out;
}

struct SigmaCriterionResult {
  bool sigma_condition = false;
  bool v_is_one = false;
  std::vector<int> pi;  // e_{pi(i)} = f_i
};

inline SigmaCriterionResult check_sigma_criterion(const AlgebraPresentation& alg, const BandWord& w) {
  require_band_word(alg, w);
  const int n = w.size();
  std::map<int, int> index_of_e;
  std::set<int> fs;
  for (int t = 0; t < n; ++t) {
    if (!index_of_e.emplace(word_e(alg, w, t), t).second) throw std::invalid_argument("the vertices e_t are not distinct");
    if (!fs.insert(word_f(alg, w, t)).second) throw std::invalid_argument("the vertices f_t are not distinct");
  }
  SigmaCriterionResult out;
  out.sigma_condition = true;
  for (int t = 0; t < n; ++t) {
    auto it = index_of_e.find(word_f(alg, w, t));
    if (it == index_of_e.end()) throw std::invalid_argument("E and F differ");
    out.pi.push_back(it->second);
    if (alg.sigma(w.a[t].back()) != w.a[it->second].front()) out.sigma_condition = false;
  }
  out.v_is_one = v_symbolic(alg, w).is_identity();
  return out;
}

inline bool has_distinct_e_equal_f(const AlgebraPresentation& alg, const BandWord& w) {
  std::set<int> es, fs;
  for (int t = 0; t < w.size(); ++t) {
    es.insert(word_e(alg, w, t));
    fs.insert(word_f(alg, w, t));
  }
  return static_cast<int>(es.size()) == w.size() && es == fs;
}

// ---------------------------------------------------------------------------

enum class Conclusion { NoCriminalsAnyQ, CriminalsForSomeQ, FiniteType };

inline std::string to_string(Conclusion c) {
  switch (c) {
    case Conclusion::NoCriminalsAnyQ: return "NoCriminalsAnyQ";
    case Conclusion::CriminalsForSomeQ: return "CriminalsForSomeQ";
    case Conclusion::FiniteType: return "FiniteType";
  }
  return "?";
}

struct Verdict {
  BrauerGraph graph;
  GraphVerdict graph_verdict;
  InfiniteTypeResult infinite_type;
  Conclusion conclusion = Conclusion::FiniteType;
  std::optional<RescalingCertificate> rescaling;
  std::optional<WitnessSearch> witness;
  bool certificate_complete = false;
};

inline Verdict theorem_verdict(const AlgebraPresentation& alg, long witness_cap = 0, long budget = 2'000'000) {
  Verdict out;
  out.graph = build_brauer_graph(alg);
  out.graph_verdict = classify(out.graph);
  out.infinite_type = infinite_type_check(alg);
  if (!out.infinite_type.infinite) {
    out.conclusion = Conclusion::FiniteType;
    return out;
  }
  if (out.graph_verdict.kind == GraphKind::TreeNoMultiEdge) {
    out.conclusion = Conclusion::NoCriminalsAnyQ;
    out.rescaling = rescale_to_one(alg);
    out.certificate_complete = out.rescaling->verified;
  } else {
    out.conclusion = Conclusion::CriminalsForSomeQ;
    out.witness = find_criminal_witness(alg, witness_cap, budget);
    out.certificate_complete = out.witness->certificate && out.witness->certificate->verified;
  }
  return out;
}

}  // namespace sbcert
