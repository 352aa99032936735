#pragma once

// JSON reports (schema "sbcert.report/1") and their independent re-verification.

#include "sbcert/fuzz.hpp"
#include "sbcert/io/presentation_file.hpp"
#include "sbcert/verdict.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace sbcert {

inline constexpr const char* kReportSchema = "sbcert.report/1";

using Json = nlohmann::json;

inline Json rational_json(const Rational& r) { return to_string(r); }

inline Json monomial_json(const ScalarMonomial& m) {
  Json exps = Json::object();
  for (const auto& [name, e] : m.exponents()) exps[name] = to_string(e);
  return Json{{"coefficient", to_string(m.coefficient())}, {"exponents", exps}, {"text", m.to_string()}};
}

inline ScalarMonomial monomial_from_json(const Json& j) {
  ExponentMap exps;
  for (const auto& [name, e] : j.at("exponents").items()) exps.emplace(name, parse_rational(e.get<std::string>()));
  return ScalarMonomial(parse_rational(j.at("coefficient").get<std::string>()), exps);
}

inline Json word_json(const AlgebraPresentation& alg, const BandWord& w) {
  return Json{{"word", word_to_cli(alg, w)},
              {"text", word_to_text(alg, w)},
              {"m", w.size() - 1},
              {"total_length", w.total_length()}};
}

inline Json graph_json(const AlgebraPresentation& alg, const BrauerGraph& g, const GraphVerdict& gv) {
  Json edges = Json::array();
  for (const auto& e : g.edges) {
    edges.push_back(Json{{"u", e.u}, {"w", e.w}, {"vertex", alg.quiver().vertex_id(e.label)}});
  }
  return Json{{"nodes", g.node_labels},
              {"edges", edges},
              {"verdict", Json{{"kind", to_string(gv.kind)}, {"edges", gv.edges}, {"walk", gv.walk}}}};
}

inline Json omega_json(const OmegaReport& r) {
  return Json{{"v", rational_json(r.v)},         {"lambda", rational_json(r.lambda)},
              {"iso_verified", r.iso_verified},  {"dim_m", r.dim_m},
              {"dim_cover", r.dim_cover},        {"dim_omega", r.dim_omega},
              {"dim_omega2", r.dim_omega2},      {"obstruction", r.obstruction}};
}

inline Json rationals_json(const std::vector<Rational>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(rational_json(x));
  return out;
}

inline Json resolution_json(const ResolutionReport& r) {
  Json out{{"m", r.m},
           {"lambda", rational_json(r.lambda)},
           {"v", rational_json(r.v)},
           {"mu", rational_json(r.mu)},
           {"c", rationals_json(r.c)},
           {"d", rationals_json(r.d)},
           {"r", rationals_json(r.r)},
           {"s", rationals_json(r.s)},
           {"c_plus", rationals_json(r.c_plus)},
           {"d_plus", rationals_json(r.d_plus)},
           {"psi_psi1_zero", r.psi_psi1_zero},
           {"psi1_psi2_zero", r.psi1_psi2_zero},
           {"exact_at_p0", r.exact_at_p0},
           {"exact_at_p1", r.exact_at_p1},
           {"image_psi_is_band", r.image_psi_is_band},
           {"image_psi2_is_band", r.image_psi2_is_band},
           {"mu_is_v_lambda", r.mu_is_v_lambda},
           {"ranks", Json{{"psi", r.rank_psi}, {"psi1", r.rank_psi1}, {"psi2", r.rank_psi2},
                          {"ker_psi", r.kernel_psi}, {"ker_psi1", r.kernel_psi1}}},
           {"failures", r.failures},
           {"ok", r.ok()}};
  if (r.zero_case) {
    const auto& z = *r.zero_case;
    out["zero_case"] = Json{{"w", z.w},
                            {"zeta", z.zeta},
                            {"w_plus", z.w_plus},
                            {"w_in_socle", z.w_in_socle},
                            {"w_kills_zeta", z.w_kills_zeta},
                            {"zeta_kills_wplus", z.zeta_kills_wplus},
                            {"wplus_relation", z.wplus_relation},
                            {"dim_w", z.dim_w},
                            {"dim_zeta", z.dim_zeta},
                            {"dim_e", z.dim_e},
                            {"expected_dim_zeta", z.expected_dim_zeta}};
  }
  return out;
}

inline Json rescaling_json(const AlgebraPresentation& alg, const BrauerGraph& g, const RescalingCertificate& c) {
  const auto& q = alg.quiver();
  Json factors = Json::object();
  for (int a = 0; a < q.arrow_count(); ++a) factors[q.arrow_id(a)] = monomial_json(c.factors[a]);
  Json ratios = Json::object();
  for (const auto& [v, r] : c.ratios) ratios[q.vertex_id(v)] = r.to_string();
  Json scaled = Json::array();
  for (int n = 0; n < g.node_count; ++n) {
    scaled.push_back(Json{{"cycle", g.node_labels[n]},
                          {"distance", c.distance[n]},
                          {"arrow", c.scaled_arrow[n] < 0 ? Json(nullptr) : Json(q.arrow_id(c.scaled_arrow[n]))}});
  }
  return Json{{"root", c.root}, {"cycles", scaled}, {"factors", factors}, {"ratios", ratios}, {"verified", c.verified}};
}

inline Json criminal_json(const AlgebraPresentation& alg, const CriminalCertificate& c) {
  const auto& q = alg.quiver();
  Json assignment = Json::object();
  for (const auto& [v, pair] : c.assignment) {
    assignment[q.vertex_id(v)] = Json{{"p", pair.p.to_string()}, {"q", pair.q.to_string()}};
  }
  return Json{{"word", word_json(alg, c.word)},
              {"assignment", assignment},
              {"chosen", Json{{"indeterminate", c.chosen_indeterminate}, {"value", rational_json(c.chosen_value)}}},
              {"v_symbolic", monomial_json(c.v_symbolic)},
              {"v", rational_json(c.v)},
              {"lambda", rational_json(c.lambda)},
              {"oracle", omega_json(c.oracle)},
              {"non_isomorphic", c.non_isomorphic},
              {"verified", c.verified}};
}

inline Json presentation_json(const AlgebraPresentation& alg) {
  return Json{{"digest", alg.digest_hex()},
              {"vertices", alg.quiver().vertex_count()},
              {"arrows", alg.quiver().arrow_count()},
              {"cycles", alg.cycles().size()},
              {"valency_two", alg.valency_two_vertices().size()},
              {"symbolic", alg.is_symbolic()}};
}

inline Json verdict_json(const AlgebraPresentation& alg, const Verdict& v) {
  Json inf{{"infinite", v.infinite_type.infinite},
           {"minimal_words", v.infinite_type.minimal_words},
           {"from_minimal", v.infinite_type.from_minimal}};
  if (v.infinite_type.witness) inf["witness"] = word_json(alg, *v.infinite_type.witness);
  else inf["cap"] = v.infinite_type.cap;
  Json certificates = Json::object();
  if (v.rescaling) certificates["rescaling"] = rescaling_json(alg, v.graph, *v.rescaling);
  if (v.witness) {
    Json search{{"cap", v.witness->cap}, {"words_tested", v.witness->words_tested}};
    if (v.witness->certificate) certificates["criminal"] = criminal_json(alg, *v.witness->certificate);
    certificates["search"] = search;
  }
  return Json{{"schema", kReportSchema},
              {"command", "verdict"},
              {"presentation", presentation_json(alg)},
              {"graph", graph_json(alg, v.graph, v.graph_verdict)},
              {"infinite_type", inf},
              {"verdict", Json{{"conclusion", to_string(v.conclusion)}, {"certificate_complete", v.certificate_complete}}},
              {"certificates", certificates}};
}

inline Json fuzz_json(const FuzzSummary& s) {
  Json cases = Json::array();
  for (const auto& c : s.cases) {
    Json findings = Json::array();
    for (const auto& f : c.findings) findings.push_back(Json{{"check", f.check}, {"message", f.message}});
    Json entry{{"index", c.index},
               {"digest", c.digest},
               {"infinite", c.infinite},
               {"minimal_word_missing", c.minimal_word_missing},
               {"words", c.words},
               {"criterion_words", c.criterion_words},
               {"findings", findings}};
    if (!c.reproduction.empty()) entry["reproduction"] = c.reproduction;
    cases.push_back(entry);
  }
  return Json{{"schema", kReportSchema},
              {"command", "fuzz"},
              {"options", Json{{"seed", s.options.seed},
                               {"count", s.options.count},
                               {"max_vertices", s.options.max_vertices},
                               {"max_multiplicity", s.options.max_multiplicity},
                               {"word_length", s.options.word_length},
                               {"lambdas", rationals_json(s.options.lambdas)}}},
              {"summary", Json{{"presentations", s.cases.size()},
                               {"finite_type", s.finite_type},
                               {"minimal_word_missing", s.minimal_word_missing},
                               {"words", s.words},
                               {"criterion_words", s.criterion_words},
                               {"violations", s.violations}}},
              {"cases", cases}};
}

// ---------------------------------------------------------------------------
// Re-verification of a verdict report against its presentation

struct CheckResult {
  std::vector<std::string> failures;
  std::vector<std::string> passed;
  bool ok() const { return failures.empty(); }
};

inline CheckResult check_report(const AlgebraPresentation& alg, const Json& report, long budget = 2'000'000) {
  CheckResult out;
  auto expect = [&](bool cond, const std::string& what) { (cond ? out.passed : out.failures).push_back(what); };
  try {
    expect(report.at("schema") == kReportSchema, "schema");
    expect(report.at("presentation").at("digest") == alg.digest_hex(), "presentation digest");
    auto g = build_brauer_graph(alg);
    const auto& gv_json = report.at("graph").at("verdict");
    auto kind = graph_kind_from_string(gv_json.at("kind").get<std::string>());
    expect(kind.has_value(), "graph kind is known");
    if (!kind) return out;
    GraphVerdict claimed{*kind, gv_json.at("edges").get<std::vector<int>>(), gv_json.at("walk").get<std::vector<int>>()};
    expect(verify_graph_certificate(g, claimed), "graph certificate");
    bool tree = claimed.kind == GraphKind::TreeNoMultiEdge;
    auto conclusion = report.at("verdict").at("conclusion").get<std::string>();
    const auto& certs = report.at("certificates");
    if (conclusion == to_string(Conclusion::FiniteType)) {
      expect(!infinite_type_check(alg).infinite, "finite type");
      return out;
    }
    const auto& inf = report.at("infinite_type");
    if (inf.contains("witness")) {
      auto w = parse_word(alg, inf.at("witness").at("word").get<std::string>());
      expect(!check_band_word(alg, w).has_value(), "infinite-type witness is a band word");
    } else {
      expect(false, "infinite-type witness present");
    }
    if (conclusion == to_string(Conclusion::NoCriminalsAnyQ)) {
      expect(tree, "conclusion matches graph kind");
      expect(certs.contains("rescaling"), "rescaling certificate present");
      if (!certs.contains("rescaling")) return out;
      const auto& r = certs.at("rescaling");
      RescalingCertificate cert;
      cert.root = r.at("root").get<int>();
      const auto& q = alg.quiver();
      cert.factors.assign(q.arrow_count(), ScalarMonomial());
      for (const auto& [id, m] : r.at("factors").items()) {
        auto a = q.find_arrow(id);
        if (!a) throw std::invalid_argument("unknown arrow " + id);
        cert.factors[*a] = monomial_from_json(m);
      }
      cert.scaled_arrow.assign(g.node_count, -1);
      const auto& cycles = r.at("cycles");
      if (static_cast<int>(cycles.size()) != g.node_count) throw std::invalid_argument("cycle count mismatch");
      for (int n = 0; n < g.node_count; ++n) {
        const auto& arrow = cycles[n].at("arrow");
        if (!arrow.is_null()) {
          auto a = q.find_arrow(arrow.get<std::string>());
          if (!a) throw std::invalid_argument("unknown arrow");
          cert.scaled_arrow[n] = *a;
        }
      }
      expect(verify_rescaling(alg, g, cert), "rescaling makes every socle ratio 1");
    } else if (conclusion == to_string(Conclusion::CriminalsForSomeQ)) {
      expect(!tree, "conclusion matches graph kind");
      expect(certs.contains("criminal"), "criminal certificate present");
      if (!certs.contains("criminal")) return out;
      const auto& c = certs.at("criminal");
      CriminalCertificate cert;
      cert.word = parse_word(alg, c.at("word").at("word").get<std::string>());
      const auto& q = alg.quiver();
      for (const auto& [id, pair] : c.at("assignment").items()) {
        auto v = q.find_vertex(id);
        if (!v || !alg.is_valency_two(*v)) throw std::invalid_argument("bad assignment vertex " + id);
        cert.assignment.emplace(*v, SoclePair{parse_rational(pair.at("p").get<std::string>()),
                                              parse_rational(pair.at("q").get<std::string>())});
      }
      for (int v : alg.valency_two_vertices()) {
        if (!cert.assignment.count(v)) throw std::invalid_argument("assignment misses vertex " + q.vertex_id(v));
      }
      cert.v = parse_rational(c.at("v").get<std::string>());
      cert.lambda = parse_rational(c.at("lambda").get<std::string>());
      expect(verify_criminal(alg, cert, budget), "criminal: v != +-1, Omega^2 M(lambda) ~ M(v lambda) !~ M(lambda)");
    } else {
      expect(false, "known conclusion");
    }
  } catch (const std::exception& e) {
    out.failures.push_back(std::string("malformed report: ") + e.what());
  }
  return out;
}

}  // namespace sbcert
