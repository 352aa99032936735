// sbcert: command-line front end.
//
// Exit codes: 0 ok, 1 findings, 2 input error, 3 internal invariant failure.

#include "sbcert/io/report.hpp"
#include "sbcert/sbcert.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

using namespace sbcert;

namespace {

constexpr int kOk = 0;
constexpr int kFindings = 1;
constexpr int kInputError = 2;
constexpr int kInternal = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Timer {
  using Clock = std::chrono::steady_clock;
  bool enabled = false;
  std::vector<std::pair<std::string, double>> entries;
  Clock::time_point start = Clock::now();

  void lap(const std::string& name) {
    auto now = Clock::now();
    entries.emplace_back(name, std::chrono::duration<double, std::milli>(now - start).count());
    start = now;
  }
  void attach(Json& j) const {
    if (!enabled) return;
    Json t = Json::object();
    for (const auto& [k, ms] : entries) t[k + "_ms"] = ms;
    j["timings"] = t;
  }
  void print(std::ostream& os) const {
    if (!enabled) return;
    for (const auto& [k, ms] : entries) os << "timing " << k << " " << ms << " ms\n";
  }
};

AlgebraPresentation load_or_throw(const std::string& path) {
  auto r = load_presentation(path);
  if (!r.ok()) {
    std::string msg;
    for (const auto& d : r.diagnostics) msg += d.to_string(path) + "\n";
    throw InputError(msg);
  }
  return *r.algebra;
}

Rational rational_arg(const std::string& text, const std::string& what) {
  try {
    return parse_rational(text);
  } catch (const std::exception&) {
    throw InputError("invalid rational for " + what + ": '" + text + "'");
  }
}

/// Applies --p/--q (all vertices) and --socle v=p:q overrides.
AlgebraPresentation with_overrides(const AlgebraPresentation& alg, const std::string& p, const std::string& q,
                                   const std::vector<std::string>& socle) {
  std::map<int, SoclePair> repl;
  for (int v : alg.valency_two_vertices()) {
    SoclePair pair = alg.scalars(v);
    if (!p.empty()) pair.p = rational_arg(p, "--p");
    if (!q.empty()) pair.q = rational_arg(q, "--q");
    repl.emplace(v, pair);
  }
  for (const auto& s : socle) {
    auto eq = s.find('=');
    auto colon = s.find(':', eq == std::string::npos ? 0 : eq);
    if (eq == std::string::npos || colon == std::string::npos) throw InputError("--socle expects vertex=p:q, got '" + s + "'");
    auto v = alg.quiver().find_vertex(s.substr(0, eq));
    if (!v || !alg.is_valency_two(*v)) throw InputError("--socle: no valency-two vertex '" + s.substr(0, eq) + "'");
    repl[*v] = SoclePair{rational_arg(s.substr(eq + 1, colon - eq - 1), "--socle"),
                         rational_arg(s.substr(colon + 1), "--socle")};
  }
  if (repl.empty()) return alg;
  try {
    return alg.with_scalars(repl);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

BandWord word_arg(const AlgebraPresentation& alg, const std::string& text) {
  BandWord w;
  try {
    w = parse_word(alg, text);
  } catch (const std::exception& e) {
    throw InputError(std::string("invalid word: ") + e.what());
  }
  if (auto bad = check_band_word(alg, w)) throw InputError("not a band word: " + *bad);
  return w;
}

void write_json(const Json& j, const std::string& path) {
  std::string text = j.dump(2) + "\n";
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

void require_concrete(const AlgebraPresentation& alg, const std::string& what) {
  if (alg.is_symbolic()) throw InputError(what + " needs concrete scalars; pass --p/--q or --socle");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Criminal certificates for weakly symmetric special biserial algebras"};
  app.require_subcommand(1);
  bool timings = false;
  app.add_flag("--timings", timings, "Report wall-clock timings");
  long budget = 2'000'000;
  app.add_option("--budget", budget, "Grid points allowed per isomorphism test")->check(CLI::PositiveNumber);

  std::string file, json_out, word, lambda_text = "1", p_text, q_text, dot_out, report_path, out_dir;
  std::vector<std::string> socle;
  bool minimal_only = false, with_resolution = false;
  long max_length = 0, cap = 0;

  auto add_file = [&](CLI::App* c) { c->add_option("file", file, "Presentation file")->required(); };
  auto add_scalars = [&](CLI::App* c) {
    c->add_option("--p", p_text, "Set every p to this rational");
    c->add_option("--q", q_text, "Set every q to this rational");
    c->add_option("--socle", socle, "Set scalars at one vertex: vertex=p:q");
  };

  auto* validate = app.add_subcommand("validate", "Parse and validate a presentation");
  add_file(validate);
  validate->add_option("--json", json_out, "Write a JSON summary ('-' for stdout)");

  auto* graph = app.add_subcommand("graph", "Brauer graph and tree criterion");
  add_file(graph);
  graph->add_option("--dot", dot_out, "Write the graph in DOT format ('-' for stdout)");
  graph->add_option("--json", json_out, "Write the graph as JSON ('-' for stdout)");

  auto* words = app.add_subcommand("words", "Enumerate band words");
  add_file(words);
  words->add_flag("--minimal", minimal_only, "Only words of minimal paths");
  words->add_option("--max-length", max_length, "Total length cap (default twice the number of arrows)");
  words->add_option("--json", json_out, "Write the word list as JSON ('-' for stdout)");

  auto* vcmd = app.add_subcommand("v", "Parameter v of a band word");
  add_file(vcmd);
  vcmd->add_option("--word", word, "Band word: a0|b0|a1|b1..., paths as dotted arrow ids")->required();
  add_scalars(vcmd);

  auto* omega = app.add_subcommand("verify-omega", "Check Omega^2 M(lambda) ~ M(v lambda) with the homology engine");
  add_file(omega);
  omega->add_option("--word", word, "Band word")->required();
  omega->add_option("--lambda", lambda_text, "Band parameter (nonzero rational)");
  omega->add_flag("--resolution", with_resolution, "Also check the explicit resolution matrices");
  omega->add_option("--json", json_out, "Write the result as JSON ('-' for stdout)");
  add_scalars(omega);

  auto* verdict = app.add_subcommand("verdict", "Decide criminals with a certificate");
  add_file(verdict);
  verdict->add_option("--json", json_out, "Write the report as JSON ('-' for stdout)");
  verdict->add_option("--cap", cap, "Total length cap of the witness search");

  auto* rescale = app.add_subcommand("rescale", "Arrow rescaling for a tree Brauer graph");
  add_file(rescale);

  auto* witness = app.add_subcommand("witness", "Search for a criminal witness");
  add_file(witness);
  witness->add_option("--cap", cap, "Total length cap of the search");

  auto* check = app.add_subcommand("check", "Re-verify a verdict report against its presentation");
  add_file(check);
  check->add_option("report", report_path, "Report written by 'verdict --json'")->required();

  FuzzOptions fopt;
  auto* fuzz = app.add_subcommand("fuzz", "Random presentations checked against the oracle");
  fuzz->add_option("--seed", fopt.seed, "Random seed");
  fuzz->add_option("--count", fopt.count, "Number of presentations")->check(CLI::NonNegativeNumber);
  fuzz->add_option("--max-vertices", fopt.max_vertices, "Vertices per presentation")->check(CLI::Range(1, 12));
  fuzz->add_option("--max-multiplicity", fopt.max_multiplicity, "Largest cycle multiplicity")->check(CLI::Range(1, 6));
  fuzz->add_option("--word-length", fopt.word_length, "Total length cap of checked words")->check(CLI::Range(1, 40));
  fuzz->add_option("--out-dir", out_dir, "Directory for minimized reproductions");
  fuzz->add_option("--json", json_out, "Write the summary as JSON ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  Timer timer;
  timer.enabled = timings;
  try {
    if (*validate) {
      auto r = load_presentation(file);
      if (!r.ok()) {
        for (const auto& d : r.diagnostics) std::cerr << d.to_string(file) << "\n";
        if (!json_out.empty()) {
          Json diags = Json::array();
          for (const auto& d : r.diagnostics) {
            diags.push_back(Json{{"line", d.line}, {"column", d.column}, {"code", d.code}, {"message", d.message}});
          }
          write_json(Json{{"schema", kReportSchema}, {"command", "validate"}, {"valid", false}, {"diagnostics", diags}},
                     json_out);
        }
        return kInputError;
      }
      const auto& alg = *r.algebra;
      for (const auto& d : r.warnings) std::cerr << "warning: " << d.to_string(file) << "\n";
      std::cout << "valid " << alg.digest_hex() << ": " << alg.quiver().vertex_count() << " vertices, "
                << alg.quiver().arrow_count() << " arrows, " << alg.cycles().size() << " cycles, "
                << alg.valency_two_vertices().size() << " of valency two" << (alg.is_symbolic() ? ", symbolic" : "")
                << "\n";
      if (!json_out.empty()) {
        Json warnings = Json::array();
        for (const auto& d : r.warnings) {
          warnings.push_back(Json{{"line", d.line}, {"code", d.code}, {"message", d.message}});
        }
        write_json(Json{{"schema", kReportSchema},
                        {"command", "validate"},
                        {"valid", true},
                        {"presentation", presentation_json(alg)},
                        {"warnings", warnings},
                        {"canonical", serialize_presentation(alg)}},
                   json_out);
      }
      return kOk;
    }

    if (*fuzz) {
      auto summary = run_fuzz(fopt);
      timer.lap("fuzz");
      std::cout << "fuzz seed " << fopt.seed << ": " << summary.cases.size() << " presentations, "
                << summary.finite_type << " finite type, " << summary.minimal_word_missing
                << " without a minimal word, " << summary.words << " words, " << summary.criterion_words
                << " with E = F, " << summary.violations << " violations\n";
      for (const auto& c : summary.cases) {
        for (const auto& f : c.findings) std::cout << "case " << c.index << " " << f.check << ": " << f.message << "\n";
        if (!c.reproduction.empty() && !out_dir.empty()) {
          std::filesystem::create_directories(out_dir);
          auto path = std::filesystem::path(out_dir) /
                      ("seed" + std::to_string(fopt.seed) + "_case" + std::to_string(c.index) + ".alg");
          std::ofstream(path, std::ios::binary) << c.reproduction;
          std::cout << "case " << c.index << " reproduction " << path.string() << "\n";
        }
      }
      timer.print(std::cout);
      if (!json_out.empty()) {
        auto j = fuzz_json(summary);
        timer.attach(j);
        write_json(j, json_out);
      }
      return summary.violations == 0 ? kOk : kFindings;
    }

    auto alg = load_or_throw(file);
    timer.lap("parse");

    if (*graph) {
      auto g = build_brauer_graph(alg);
      auto gv = classify(g);
      timer.lap("classify");
      std::cout << "nodes " << g.node_count << "\n";
      for (int n = 0; n < g.node_count; ++n) std::cout << "  c" << n << " " << g.node_labels[n] << "\n";
      std::cout << "edges " << g.edges.size() << "\n";
      for (const auto& e : g.edges) {
        std::cout << "  c" << e.u << " -- c" << e.w << " " << alg.quiver().vertex_id(e.label) << "\n";
      }
      std::cout << "kind " << to_string(gv.kind) << "\n";
      std::cout << "certificate edges";
      for (int e : gv.edges) std::cout << " " << alg.quiver().vertex_id(g.edges[e].label);
      std::cout << "\n";
      if (!gv.walk.empty()) {
        std::cout << "certificate walk";
        for (int n : gv.walk) std::cout << " c" << n;
        std::cout << "\n";
      }
      if (!verify_graph_certificate(g, gv)) {
        std::cerr << "internal: graph certificate does not verify\n";
        return kInternal;
      }
      if (!dot_out.empty()) {
        if (dot_out == "-") std::cout << export_dot(alg, g);
        else std::ofstream(dot_out, std::ios::binary) << export_dot(alg, g);
      }
      if (!json_out.empty()) {
        Json j{{"schema", kReportSchema}, {"command", "graph"}, {"presentation", presentation_json(alg)},
               {"graph", graph_json(alg, g, gv)}};
        timer.attach(j);
        write_json(j, json_out);
      }
      timer.print(std::cout);
      return kOk;
    }

    if (*words) {
      std::vector<BandWord> list;
      if (minimal_only) {
        list = enumerate_minimal_band_words(alg);
      } else {
        list = enumerate_band_words(alg, max_length > 0 ? max_length : 2L * alg.quiver().arrow_count());
      }
      timer.lap("enumerate");
      Json arr = Json::array();
      for (const auto& w : list) {
        auto sym = v_symbolic(alg, w);
        std::cout << word_to_text(alg, w) << "   v = " << sym.to_string() << "\n";
        auto j = word_json(alg, w);
        j["v_symbolic"] = monomial_json(sym);
        arr.push_back(j);
      }
      std::cout << list.size() << " band words\n";
      timer.print(std::cout);
      if (!json_out.empty()) {
        Json j{{"schema", kReportSchema}, {"command", "words"}, {"presentation", presentation_json(alg)},
               {"minimal_only", minimal_only}, {"words", arr}};
        timer.attach(j);
        write_json(j, json_out);
      }
      return kOk;
    }

    if (*vcmd) {
      auto a = with_overrides(alg, p_text, q_text, socle);
      auto w = word_arg(a, word);
      auto sym = v_symbolic(a, w);
      std::cout << "word " << word_to_text(a, w) << "\n";
      std::cout << "v_symbolic " << sym.to_string() << "\n";
      if (!a.is_symbolic()) std::cout << "v " << to_string(v_parameter(a, w)) << "\n";
      return kOk;
    }

    if (*omega) {
      auto a = with_overrides(alg, p_text, q_text, socle);
      require_concrete(a, "verify-omega");
      auto w = word_arg(a, word);
      Rational lambda = rational_arg(lambda_text, "--lambda");
      if (is_zero(lambda)) throw InputError("--lambda must be nonzero");
      auto rep = verify_omega_squared(a, w, lambda, budget);
      timer.lap("omega");
      std::cout << "word " << word_to_text(a, w) << "\n";
      std::cout << "v " << to_string(rep.v) << "  lambda " << to_string(lambda) << "\n";
      std::cout << "dims M " << rep.dim_m << "  P " << rep.dim_cover << "  Omega " << rep.dim_omega << "  Omega^2 "
                << rep.dim_omega2 << "\n";
      std::cout << "Omega^2 M(" << to_string(lambda) << ") ~ M(" << to_string(rep.v * lambda)
                << "): " << (rep.iso_verified ? "yes" : "NO (" + rep.obstruction + ")") << "\n";
      Json j{{"schema", kReportSchema}, {"command", "verify-omega"}, {"presentation", presentation_json(a)},
             {"word", word_json(a, w)}, {"omega", omega_json(rep)}};
      bool ok = rep.iso_verified;
      if (with_resolution) {
        auto res = resolution_matrices(a, w, lambda, budget);
        timer.lap("resolution");
        std::cout << "resolution mu " << to_string(res.mu) << ": " << (res.ok() ? "exact" : "FAILED") << "\n";
        for (const auto& f : res.failures) std::cout << "  " << f << "\n";
        j["resolution"] = resolution_json(res);
        ok = ok && res.ok();
      }
      timer.print(std::cout);
      if (!json_out.empty()) {
        timer.attach(j);
        write_json(j, json_out);
      }
      return ok ? kOk : kInternal;
    }

    if (*verdict) {
      auto v = theorem_verdict(alg, cap, budget);
      timer.lap("verdict");
      std::cout << "graph " << to_string(v.graph_verdict.kind) << "\n";
      std::cout << "conclusion " << to_string(v.conclusion) << "\n";
      if (v.rescaling) {
        std::cout << "rescaling " << (v.rescaling->verified ? "verified" : "NOT verified") << "\n";
      }
      if (v.witness) {
        if (v.witness->certificate) {
          const auto& c = *v.witness->certificate;
          std::cout << "witness " << word_to_text(alg, c.word) << "  " << c.chosen_indeterminate << " = "
                    << to_string(c.chosen_value) << "  v = " << to_string(c.v) << "  "
                    << (c.verified ? "verified" : "NOT verified") << "\n";
        } else {
          std::cout << "witness none up to total length " << v.witness->cap << "\n";
        }
      }
      if (v.conclusion == Conclusion::FiniteType) {
        std::cout << "no band word up to total length " << v.infinite_type.cap << "\n";
      } else {
        std::cout << "certificate " << (v.certificate_complete ? "complete" : "incomplete") << "\n";
      }
      timer.print(std::cout);
      if (!json_out.empty()) {
        auto j = verdict_json(alg, v);
        timer.attach(j);
        write_json(j, json_out);
      }
      return v.conclusion == Conclusion::FiniteType || v.certificate_complete ? kOk : kFindings;
    }

    if (*rescale) {
      auto g = build_brauer_graph(alg);
      if (classify(g).kind != GraphKind::TreeNoMultiEdge) {
        std::cerr << "Brauer graph is not a tree without multiple edges; no rescaling exists\n";
        return kFindings;
      }
      auto cert = rescale_to_one(alg);
      const auto& q = alg.quiver();
      std::cout << "root c" << cert.root << " " << g.node_labels[cert.root] << "\n";
      for (int a = 0; a < q.arrow_count(); ++a) {
        if (!cert.factors[a].is_identity()) std::cout << q.arrow_id(a) << " -> " << cert.factors[a].to_string() << " * " << q.arrow_id(a) << "\n";
      }
      for (const auto& [v, r] : cert.ratios) std::cout << "ratio " << q.vertex_id(v) << " " << r.to_string() << "\n";
      std::cout << (cert.verified ? "verified" : "NOT verified") << "\n";
      return cert.verified ? kOk : kInternal;
    }

    if (*witness) {
      auto search = find_criminal_witness(alg, cap, budget);
      timer.lap("witness");
      std::cout << search.words_tested << " words tested, cap " << search.cap << "\n";
      timer.print(std::cout);
      if (!search.certificate) {
        std::cout << "no word with v not identically 1\n";
        return kFindings;
      }
      const auto& c = *search.certificate;
      std::cout << "word " << word_to_text(alg, c.word) << "\n";
      std::cout << "cli " << word_to_cli(alg, c.word) << "\n";
      std::cout << "v_symbolic " << c.v_symbolic.to_string() << "\n";
      std::cout << c.chosen_indeterminate << " = " << to_string(c.chosen_value) << ", all other scalars 1\n";
      std::cout << "v " << to_string(c.v) << "\n";
      std::cout << "Omega^2 M(1) ~ M(v): " << (c.oracle.iso_verified ? "yes" : "no") << "\n";
      std::cout << "M(v) !~ M(1): " << (c.non_isomorphic ? "yes" : "no") << "\n";
      return c.verified ? kOk : kInternal;
    }

    if (*check) {
      auto text = read_text_file(report_path);
      if (!text) throw InputError("cannot read '" + report_path + "'");
      Json report;
      try {
        report = Json::parse(*text);
      } catch (const Json::parse_error& e) {
        throw InputError(std::string("report is not JSON: ") + e.what());
      }
      auto result = check_report(alg, report, budget);
      for (const auto& p : result.passed) std::cout << "ok   " << p << "\n";
      for (const auto& f : result.failures) std::cout << "FAIL " << f << "\n";
      return result.ok() ? kOk : kFindings;
    }
  } catch (const InputError& e) {
    std::cerr << e.what() << (std::string(e.what()).ends_with("\n") ? "" : "\n");
    return kInputError;
  } catch (const IsoBudgetExceeded& e) {
    std::cerr << "isomorphism budget exceeded: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kOk;
}
