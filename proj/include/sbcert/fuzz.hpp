#pragma once

// Random presentations and the invariant checks run on each of them.

#include "sbcert/io/presentation_file.hpp"
#include "sbcert/verdict.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace sbcert {

struct FuzzOptions {
  std::uint64_t seed = 1;
  int count = 50;
  int max_vertices = 4;
  long max_multiplicity = 2;
  long word_length = 6;  // general words up to this total length, plus all minimal words
  std::vector<Rational> lambdas{Rational(1), Rational(2)};
  bool resolution = true;
  bool verdict = true;
};

struct Finding {
  std::string check;
  std::string message;
};

class FuzzRng {
 public:
  explicit FuzzRng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [0, n); plain modulo of the standardized engine output, so the
  /// sequence is the same on every platform.
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

inline const std::vector<Rational>& fuzz_scalar_pool() {
  static const std::vector<Rational> pool{Rational(1), Rational(-1), Rational(2), Rational(3), Rational(1, 2),
                                          Rational(5, 3)};
  return pool;
}

/// A random valid presentation: valencies, a random pairing of outgoing with
/// incoming arrow slots, a random local sigma at each vertex, multiplicities and
/// scalars. Retries until the quiver is connected.
inline AlgebraPresentation random_presentation(FuzzRng& rng, int max_vertices, long max_multiplicity) {
  for (;;) {
    int n = 1 + static_cast<int>(rng.below(static_cast<std::size_t>(max_vertices)));
    std::vector<int> valency(n);
    std::vector<int> out_slots, in_slots;
    for (int v = 0; v < n; ++v) {
      valency[v] = 1 + static_cast<int>(rng.below(2));
      for (int k = 0; k < valency[v]; ++k) {
        out_slots.push_back(v);
        in_slots.push_back(v);
      }
    }
    rng.shuffle(in_slots);
    RawPresentation raw;
    for (int v = 0; v < n; ++v) raw.vertices.push_back("v" + std::to_string(v));
    int arrows = static_cast<int>(out_slots.size());
    std::vector<std::vector<int>> in_at(n), out_at(n);
    for (int a = 0; a < arrows; ++a) {
      std::string id = (a < 10 ? "a0" : "a") + std::to_string(a);
      raw.arrows.push_back(RawArrow{id, raw.vertices[out_slots[a]], raw.vertices[in_slots[a]], 0});
      out_at[out_slots[a]].push_back(a);
      in_at[in_slots[a]].push_back(a);
    }
    std::vector<int> sigma(arrows, -1);
    for (int v = 0; v < n; ++v) {
      auto outs = out_at[v];
      rng.shuffle(outs);
      for (std::size_t k = 0; k < in_at[v].size(); ++k) sigma[in_at[v][k]] = outs[k];
    }
    std::vector<bool> done(arrows, false);
    for (int a = 0; a < arrows; ++a) {
      if (done[a]) continue;
      RawCycle c;
      int x = a;
      do {
        done[x] = true;
        c.arrows.push_back(raw.arrows[x].id);
        x = sigma[x];
      } while (x != a);
      long lo = c.arrows.size() == 1 ? 2 : 1;
      long hi = std::max(lo, max_multiplicity);
      c.multiplicity = lo + static_cast<long>(rng.below(static_cast<std::size_t>(hi - lo + 1)));
      raw.cycles.push_back(c);
    }
    const auto& pool = fuzz_scalar_pool();
    for (int v = 0; v < n; ++v) {
      if (valency[v] != 2) continue;
      Rational p = pool[rng.below(pool.size())];
      Rational q = pool[rng.below(pool.size())];
      raw.socle.push_back(RawSocle{raw.vertices[v], p, q, 0});
    }
    auto report = validate_presentation(raw);
    if (report.ok()) return *report.algebra;
  }
}

/// Minimal words and all words up to the given total length.
inline std::vector<BandWord> words_for_checks(const AlgebraPresentation& alg, long max_length) {
  auto words = enumerate_minimal_band_words(alg);
  std::set<std::vector<int>> keys;
  for (const auto& w : words) keys.insert(word_key(alg, w));
  for (auto& w : enumerate_band_words(alg, max_length)) {
    if (keys.insert(word_key(alg, w)).second) words.push_back(std::move(w));
  }
  return words;
}

struct PresentationCheck {
  std::vector<Finding> findings;
  std::size_t words = 0;
  std::size_t criterion_words = 0;
  bool infinite = false;
  bool minimal_word_missing = false;  // infinite type without a word of minimal paths
};

/// All property checks on one concrete presentation.
inline PresentationCheck check_presentation(const AlgebraPresentation& alg, const FuzzOptions& opt) {
  PresentationCheck out;
  auto fail = [&](std::string check, std::string message) {
    out.findings.push_back(Finding{std::move(check), std::move(message)});
  };
  try {
    auto reparsed = parse_presentation(serialize_presentation(alg));
    if (!reparsed.ok() || reparsed.algebra->canonical_text() != alg.canonical_text()) {
      fail("round-trip", "serialized presentation does not parse back to itself");
    }
    const auto& q = alg.quiver();
    for (int v = 0; v < q.vertex_count(); ++v) {
      auto sp = socle_paths(alg, v);
      std::size_t expected = sp.c.size() + (sp.d ? sp.d->size() : 1);
      if (projective_basis(alg, v).size() != expected) fail("projective-dimension", "dim e_v L != |C| + |D| at " + q.vertex_id(v));
    }
    auto g = build_brauer_graph(alg);
    auto gv = classify(g);
    if (!verify_graph_certificate(g, gv)) fail("graph-certificate", "graph certificate does not re-verify");
    if (g.node_count != static_cast<int>(alg.cycles().size()) ||
        g.edges.size() != alg.valency_two_vertices().size()) {
      fail("graph-counts", "node or edge count mismatch");
    }
    auto words = words_for_checks(alg, opt.word_length);
    auto inf = infinite_type_check(alg);
    out.infinite = inf.infinite;
    out.minimal_word_missing = inf.infinite && !inf.from_minimal;
    if (!inf.infinite && !words.empty()) fail("infinite-type", "band words exist but the infinite-type check found none");
    if (out.infinite) {
      bool self_loop = std::any_of(g.edges.begin(), g.edges.end(), [](const BrauerEdge& e) { return e.u == e.w; });
      if (g.node_count < 2 && !self_loop) fail("graph-shape", "infinite type with a one-node graph without self-crossing");
    }
    for (const auto& w : words) {
      ++out.words;
      std::string name = word_to_text(alg, w);
      if (auto bad = check_band_word(alg, w)) {
        fail("band-word", name + ": " + *bad);
        continue;
      }
      Rational v = v_parameter(alg, w);
      auto sym = v_symbolic(alg, w).evaluate(alg.canonical_assignment());
      if (!sym || *sym != v) fail("v-symbolic", name + ": symbolic v does not evaluate to v");
      for (const auto& lambda : opt.lambdas) {
        auto band = build_band_module(alg, w, lambda);
        if (band.rep.total_dimension() != w.total_length()) fail("band-dimension", name + ": dim M != sum |a| + |b|");
        auto rep = verify_omega_squared(alg, w, lambda);
        if (!rep.iso_verified) {
          fail("omega-squared", name + " lambda=" + to_string(lambda) + ": Omega^2 M(lambda) !~ M(v lambda) (" +
                                    rep.obstruction + ")");
        }
        if (rep.dim_omega != rep.dim_cover - rep.dim_m) fail("syzygy-dimension", name + ": dim Omega != dim P - dim M");
        if (opt.resolution) {
          auto res = resolution_matrices(alg, w, lambda);
          for (const auto& f : res.failures) fail("resolution", name + " lambda=" + to_string(lambda) + ": " + f);
        }
      }
      if (has_distinct_e_equal_f(alg, w)) {
        ++out.criterion_words;
        auto p = check_sigma_criterion(alg, w);
        if (p.sigma_condition != p.v_is_one) fail("sigma-criterion", name + ": sigma condition and v = 1 disagree");
      }
    }
    if (opt.verdict && out.infinite) {
      auto verdict = theorem_verdict(alg);
      bool tree = gv.kind == GraphKind::TreeNoMultiEdge;
      if ((verdict.conclusion == Conclusion::NoCriminalsAnyQ) != tree) fail("verdict", "conclusion disagrees with the graph");
      if (!verdict.certificate_complete) fail("certificate", "certificate missing or not verified");
    }
  } catch (const std::exception& e) {
    fail("exception", e.what());
  }
  return out;
}

/// Shrinks a failing presentation: scalars to 1, multiplicities down, while `fails` holds.
inline AlgebraPresentation minimize_presentation(const AlgebraPresentation& alg,
                                                 const std::function<bool(const AlgebraPresentation&)>& fails) {
  AlgebraPresentation cur = alg;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v : cur.valency_two_vertices()) {
      for (auto side : {ScalarSide::P, ScalarSide::Q}) {
        const auto& s = cur.scalar(ScalarRef{v, side});
        if (!s.is_symbolic() && s.rational() == 1) continue;
        SoclePair pair = cur.scalars(v);
        (side == ScalarSide::P ? pair.p : pair.q) = Rational(1);
        auto candidate = cur.with_scalars({{v, pair}});
        if (fails(candidate)) {
          cur = candidate;
          changed = true;
        }
      }
    }
    auto raw = cur.to_raw();
    for (auto& c : raw.cycles) {
      if (c.multiplicity <= 1 || static_cast<long>(c.arrows.size()) * (c.multiplicity - 1) < 2) continue;
      --c.multiplicity;
      auto report = validate_presentation(raw);
      if (report.ok() && fails(*report.algebra)) {
        cur = *report.algebra;
        changed = true;
        break;
      }
      ++c.multiplicity;
    }
  }
  return cur;
}

struct FuzzCase {
  int index = 0;
  std::string digest;
  bool infinite = false;
  std::size_t words = 0;
  std::size_t criterion_words = 0;
  bool minimal_word_missing = false;
  std::vector<Finding> findings;
  std::string reproduction;  // minimized presentation text when findings exist
};

struct FuzzSummary {
  FuzzOptions options;
  std::vector<FuzzCase> cases;
  std::size_t finite_type = 0;
  std::size_t minimal_word_missing = 0;
  std::size_t words = 0;
  std::size_t criterion_words = 0;
  std::size_t violations = 0;
};

inline FuzzSummary run_fuzz(const FuzzOptions& opt) {
  FuzzSummary summary;
  summary.options = opt;
  FuzzRng rng(opt.seed);
  for (int i = 0; i < opt.count; ++i) {
    auto alg = random_presentation(rng, opt.max_vertices, opt.max_multiplicity);
    auto result = check_presentation(alg, opt);
    FuzzCase c;
    c.index = i;
    c.digest = alg.digest_hex();
    c.infinite = result.infinite;
    c.words = result.words;
    c.criterion_words = result.criterion_words;
    c.minimal_word_missing = result.minimal_word_missing;
    c.findings = result.findings;
    if (!c.findings.empty()) {
      auto minimized = minimize_presentation(alg, [&](const AlgebraPresentation& a) {
        return !check_presentation(a, opt).findings.empty();
      });
      c.reproduction = serialize_presentation(minimized);
    }
    if (!c.infinite) ++summary.finite_type;
    if (c.minimal_word_missing) ++summary.minimal_word_missing;
    summary.words += c.words;
    summary.criterion_words += c.criterion_words;
    summary.violations += c.findings.size();
    summary.cases.push_back(std::move(c));
  }
  return summary;
}

}  // namespace sbcert
