#pragma once

// Weakly symmetric special biserial algebras given by quiver, sigma cycles with
// multiplicities and socle scalars. The relations are derived from this data:
//
//   * a zero relation g.h for every pair of composable arrows with h != sigma(g);
//   * at a vertex with one outgoing arrow a, C.a = 0 where C is the sigma
//     power through that vertex;
//   * at a vertex with two outgoing arrows, p*X + q*Y = 0 where X and Y are the
//     two cycle powers starting there. X is the branch whose first arrow has
//     the larger id, Y (first arrow with the smaller id) is the socle
//     representative, so X is rewritten as -(q/p)*Y.
//
// Paths are written left to right: a.b means a followed by b.

#include "sbcert/monomial.hpp"
#include "sbcert/quiver.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace sbcert {

enum class ScalarSide { P, Q };

/// A socle scalar at a valency-two vertex. P multiplies the branch with the
/// larger first arrow, Q the representative branch.
struct ScalarRef {
  int vertex = -1;
  ScalarSide side = ScalarSide::P;
  friend bool operator==(const ScalarRef&, const ScalarRef&) = default;
};

struct SoclePair {
  ScalarSpec p;
  ScalarSpec q;
};

struct SigmaCycle {
  std::vector<int> arrows;  // rotated to start at the least arrow index
  long multiplicity = 1;
};

/// A nonzero path of the algebra. Nonzero paths follow sigma, so they are fixed
/// by their start vertex, first arrow and length. length == 0 is the idempotent
/// at `vertex` (first_arrow == -1). Ordering: vertex, then length, then arrow.
struct Path {
  int vertex = 0;
  long length = 0;
  int first_arrow = -1;

  static Path idempotent(int v) { return Path{v, 0, -1}; }
  bool is_idempotent() const { return length == 0; }
  friend auto operator<=>(const Path&, const Path&) = default;
};

struct Violation {
  std::string code;
  std::string subject;
  std::string message;
  int line = 0;
};

class AlgebraPresentation;
struct ValidationReport;
ValidationReport validate_presentation(const RawPresentation& raw);

class AlgebraPresentation {
 public:
  const Quiver& quiver() const { return quiver_; }
  const std::vector<SigmaCycle>& cycles() const { return cycles_; }

  int sigma(int arrow) const { return sigma_.at(arrow); }
  int cycle_of(int arrow) const { return cycle_of_.at(arrow); }

  /// sigma^k(arrow) for k >= 0.
  int sigma_power(int arrow, long k) const {
    const auto& cyc = cycles_[cycle_of_[arrow]].arrows;
    long len = static_cast<long>(cyc.size());
    return cyc[static_cast<std::size_t>((position_[arrow] + k % len) % len)];
  }
  int sigma_inverse(int arrow) const { return sigma_power(arrow, cycle_length(arrow) - 1); }

  long cycle_length(int arrow) const { return static_cast<long>(cycles_[cycle_of_[arrow]].arrows.size()); }

  /// Length of the socle path whose first arrow is `arrow`.
  long socle_length(int arrow) const {
    return cycle_length(arrow) * cycles_[cycle_of_[arrow]].multiplicity;
  }

  bool is_valency_two(int v) const { return quiver_.valency(v) == 2; }

  /// The arrow starting the socle representative branch at v (least outgoing arrow).
  int representative_arrow(int v) const { return quiver_.out_arrows(v)[0]; }

  int other_out(int v, int arrow) const {
    auto out = quiver_.out_arrows(v);
    if (out.size() != 2) throw std::logic_error("vertex has one outgoing arrow");
    return out[0] == arrow ? out[1] : out[0];
  }
  int other_in(int v, int arrow) const {
    auto in = quiver_.in_arrows(v);
    if (in.size() != 2) throw std::logic_error("vertex has one incoming arrow");
    return in[0] == arrow ? in[1] : in[0];
  }

  std::vector<int> valency_two_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < quiver_.vertex_count(); ++v) {
      if (is_valency_two(v)) out.push_back(v);
    }
    return out;
  }

  const SoclePair& scalars(int v) const {
    if (!is_valency_two(v)) throw std::out_of_range("no socle scalars at valency-one vertex " + quiver_.vertex_id(v));
    return socle_.at(v);
  }
  const ScalarSpec& scalar(const ScalarRef& ref) const {
    const auto& pair = scalars(ref.vertex);
    return ref.side == ScalarSide::P ? pair.p : pair.q;
  }

  /// Which socle scalar multiplies the branch with the given first arrow.
  ScalarRef branch_scalar(int first_arrow) const {
    int v = quiver_.source(first_arrow);
    if (!is_valency_two(v)) throw std::logic_error("branch at valency-one vertex has no scalar");
    return ScalarRef{v, first_arrow == representative_arrow(v) ? ScalarSide::Q : ScalarSide::P};
  }

  bool is_symbolic() const {
    for (int v : valency_two_vertices()) {
      if (socle_[v].p.is_symbolic() || socle_[v].q.is_symbolic()) return true;
    }
    return false;
  }

  /// Canonical indeterminate name for a socle scalar, e.g. "p_v0".
  std::string indeterminate(const ScalarRef& ref) const {
    return std::string(ref.side == ScalarSide::P ? "p_" : "q_") + quiver_.vertex_id(ref.vertex);
  }

  /// Concrete values keyed by canonical indeterminate names. Throws in symbolic mode.
  std::map<std::string, Rational> canonical_assignment() const {
    std::map<std::string, Rational> out;
    for (int v : valency_two_vertices()) {
      for (auto side : {ScalarSide::P, ScalarSide::Q}) {
        ScalarRef ref{v, side};
        const auto& s = scalar(ref);
        if (s.is_symbolic()) throw std::domain_error("presentation has symbolic scalars");
        out.emplace(indeterminate(ref), s.rational());
      }
    }
    return out;
  }

  /// Same quiver and sigma with the given socle scalars replacing the current ones.
  AlgebraPresentation with_scalars(const std::map<int, SoclePair>& replacement) const {
    AlgebraPresentation out = *this;
    for (const auto& [v, pair] : replacement) {
      if (!is_valency_two(v)) throw std::invalid_argument("scalars given for valency-one vertex");
      if ((!pair.p.is_symbolic() && is_zero(pair.p.rational())) ||
          (!pair.q.is_symbolic() && is_zero(pair.q.rational()))) {
        throw std::invalid_argument("socle scalars must be nonzero");
      }
      out.socle_[v] = pair;
    }
    out.digest_ = digest_of(out.canonical_text());
    return out;
  }

  /// Deterministic text form; identical to the presentation file serialization.
  std::string canonical_text() const {
    std::ostringstream os;
    os << "[quiver]\nvertices:";
    for (int v = 0; v < quiver_.vertex_count(); ++v) os << ' ' << quiver_.vertex_id(v);
    os << '\n';
    for (int a = 0; a < quiver_.arrow_count(); ++a) {
      os << quiver_.arrow_id(a) << ": " << quiver_.vertex_id(quiver_.source(a)) << " -> "
         << quiver_.vertex_id(quiver_.target(a)) << '\n';
    }
    os << "[sigma]\n";
    for (const auto& c : cycles_) {
      os << '(';
      for (std::size_t i = 0; i < c.arrows.size(); ++i) os << (i ? " " : "") << quiver_.arrow_id(c.arrows[i]);
      os << ") @ " << c.multiplicity << '\n';
    }
    os << "[socle]\n";
    for (int v : valency_two_vertices()) {
      os << quiver_.vertex_id(v) << " = p:" << socle_[v].p.to_string() << " q:" << socle_[v].q.to_string() << '\n';
    }
    return os.str();
  }

  RawPresentation to_raw() const {
    RawPresentation raw;
    for (int v = 0; v < quiver_.vertex_count(); ++v) raw.vertices.push_back(quiver_.vertex_id(v));
    for (int a = 0; a < quiver_.arrow_count(); ++a) {
      raw.arrows.push_back(RawArrow{quiver_.arrow_id(a), quiver_.vertex_id(quiver_.source(a)),
                                    quiver_.vertex_id(quiver_.target(a)), 0});
    }
    for (const auto& c : cycles_) {
      RawCycle rc;
      for (int a : c.arrows) rc.arrows.push_back(quiver_.arrow_id(a));
      rc.multiplicity = c.multiplicity;
      raw.cycles.push_back(rc);
    }
    for (int v : valency_two_vertices()) raw.socle.push_back(RawSocle{quiver_.vertex_id(v), socle_[v].p, socle_[v].q, 0});
    return raw;
  }

  std::uint64_t digest() const { return digest_; }
  std::string digest_hex() const {
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << digest_;
    return os.str();
  }

  static std::uint64_t digest_of(const std::string& text) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    return h;
  }

 private:
  friend ValidationReport validate_presentation(const RawPresentation& raw);

  Quiver quiver_;
  std::vector<SigmaCycle> cycles_;
  std::vector<int> sigma_;
  std::vector<int> cycle_of_;
  std::vector<long> position_;
  std::vector<SoclePair> socle_;  // indexed by vertex; meaningful at valency two only
  std::uint64_t digest_ = 0;
};

struct ValidationReport {
  std::optional<AlgebraPresentation> algebra;
  std::vector<Violation> violations;
  std::vector<Violation> warnings;  // valid but worth a look
  bool ok() const { return algebra.has_value(); }
};

/// Checks the raw data against the axioms of a weakly symmetric special
/// biserial presentation and builds the algebra. All violations are collected.
inline ValidationReport validate_presentation(const RawPresentation& raw) {
  ValidationReport report;
  auto& bad = report.violations;
  auto add = [&](std::string code, std::string subject, std::string message, int line = 0) {
    bad.push_back(Violation{std::move(code), std::move(subject), std::move(message), line});
  };

  std::set<std::string> vertex_ids;
  for (const auto& v : raw.vertices) {
    if (!vertex_ids.insert(v).second) add("duplicate-vertex", v, "vertex id listed twice");
  }
  std::set<std::string> arrow_ids;
  bool endpoints_ok = true;
  for (const auto& a : raw.arrows) {
    if (!arrow_ids.insert(a.id).second) add("duplicate-arrow", a.id, "arrow id listed twice", a.line);
    if (!vertex_ids.count(a.source)) {
      add("unknown-vertex", a.id, "source vertex '" + a.source + "' is not declared", a.line);
      endpoints_ok = false;
    }
    if (!vertex_ids.count(a.target)) {
      add("unknown-vertex", a.id, "target vertex '" + a.target + "' is not declared", a.line);
      endpoints_ok = false;
    }
  }
  if (raw.vertices.empty()) add("empty-quiver", "", "quiver has no vertices");
  if (!bad.empty() || !endpoints_ok) return report;

  Quiver q(std::vector<std::string>(vertex_ids.begin(), vertex_ids.end()), raw.arrows);

  if (!q.connected()) add("disconnected", "", "quiver is not connected");
  for (int v = 0; v < q.vertex_count(); ++v) {
    auto out = q.out_arrows(v).size();
    auto in = q.in_arrows(v).size();
    if (out < 1 || out > 2 || in < 1 || in > 2 || out != in) {
      add("valency", q.vertex_id(v),
          "vertex must be source and target of one arrow or of two arrows (out " + std::to_string(out) +
              ", in " + std::to_string(in) + ")");
    }
  }

  // sigma from the cycles
  std::vector<int> sigma(q.arrow_count(), -1);
  std::vector<int> cycle_of(q.arrow_count(), -1);
  std::vector<long> position(q.arrow_count(), -1);
  std::vector<SigmaCycle> cycles;
  for (const auto& rc : raw.cycles) {
    if (rc.arrows.empty()) {
      add("empty-cycle", "", "sigma cycle has no arrows", rc.line);
      continue;
    }
    if (rc.multiplicity < 1) {
      add("multiplicity", rc.arrows.front(), "cycle multiplicity must be a positive integer", rc.line);
    }
    std::vector<int> ids;
    bool ok = true;
    for (const auto& name : rc.arrows) {
      auto a = q.find_arrow(name);
      if (!a) {
        add("unknown-arrow", name, "sigma cycle names an undeclared arrow", rc.line);
        ok = false;
        continue;
      }
      if (cycle_of[*a] != -1) {
        add("sigma-not-permutation", name, "arrow occurs more than once in the sigma cycles", rc.line);
        ok = false;
        continue;
      }
      cycle_of[*a] = -2;
      ids.push_back(*a);
    }
    if (!ok) continue;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      int a = ids[i];
      int next = ids[(i + 1) % ids.size()];
      if (q.target(a) != q.source(next)) {
        add("sigma-not-composable", q.arrow_id(a),
            "sigma(" + q.arrow_id(a) + ") = " + q.arrow_id(next) + " does not start at the target of " + q.arrow_id(a),
            rc.line);
        ok = false;
      }
    }
    long len = static_cast<long>(ids.size());
    if (rc.multiplicity >= 1 && len * rc.multiplicity < 2) {
      add("socle-too-short", q.arrow_id(ids.front()),
          "socle path has length " + std::to_string(len * rc.multiplicity) + " < 2", rc.line);
      ok = false;
    }
    auto least = std::min_element(ids.begin(), ids.end());
    std::rotate(ids.begin(), least, ids.end());
    int index = static_cast<int>(cycles.size());
    for (std::size_t i = 0; i < ids.size(); ++i) {
      sigma[ids[i]] = ids[(i + 1) % ids.size()];
      cycle_of[ids[i]] = index;
      position[ids[i]] = static_cast<long>(i);
    }
    cycles.push_back(SigmaCycle{ids, rc.multiplicity});
  }
  for (int a = 0; a < q.arrow_count(); ++a) {
    if (cycle_of[a] == -1) add("sigma-not-permutation", q.arrow_id(a), "arrow is not in any sigma cycle");
  }

  // scalars
  std::vector<SoclePair> socle(q.vertex_count());
  std::vector<bool> have(q.vertex_count(), false);
  for (const auto& s : raw.socle) {
    auto v = q.find_vertex(s.vertex);
    if (!v) {
      add("unknown-vertex", s.vertex, "socle scalars for an undeclared vertex", s.line);
      continue;
    }
    if (have[*v]) add("duplicate-scalars", s.vertex, "socle scalars given twice", s.line);
    if (q.valency(*v) != 2) {
      add("scalars-at-valency-one", s.vertex, "socle scalars are only given at vertices of valency two", s.line);
      continue;
    }
    for (const auto* spec : {&s.p, &s.q}) {
      if (!spec->is_symbolic() && is_zero(spec->rational())) add("zero-scalar", s.vertex, "socle scalar must be nonzero", s.line);
    }
    have[*v] = true;
    socle[*v] = SoclePair{s.p, s.q};
  }
  for (int v = 0; v < q.vertex_count(); ++v) {
    if (q.valency(v) == 2 && !have[v]) add("missing-scalars", q.vertex_id(v), "no socle scalars for valency-two vertex");
  }
  if (!bad.empty()) return report;

  std::sort(cycles.begin(), cycles.end(),
            [](const SigmaCycle& a, const SigmaCycle& b) { return a.arrows.front() < b.arrows.front(); });
  for (int c = 0; c < static_cast<int>(cycles.size()); ++c) {
    for (int a : cycles[c].arrows) cycle_of[a] = c;
  }

  AlgebraPresentation alg;
  alg.quiver_ = std::move(q);
  alg.cycles_ = std::move(cycles);
  alg.sigma_ = std::move(sigma);
  alg.cycle_of_ = std::move(cycle_of);
  alg.position_ = std::move(position);
  alg.socle_ = std::move(socle);

  // Rotations of socle paths are socle paths of the vertex they start at.
  // With the relations derived from sigma this holds by construction; check it
  // through the branch data so that a broken derivation is caught here.
  const auto& quiver = alg.quiver();
  for (int a = 0; a < quiver.arrow_count(); ++a) {
    long len = alg.socle_length(a);
    for (long k = 0; k < len; ++k) {
      int start = alg.sigma_power(a, k);
      if (alg.socle_length(start) != len) {
        add("rotation", quiver.arrow_id(a), "rotation of a socle path is not a socle path");
      }
    }
  }
  if (!bad.empty()) return report;

  // The relation C_i alpha at a valency-one vertex i is read off the sigma-cycle;
  // with multiplicity above 1 the socle path passes i again before it ends.
  for (int v = 0; v < quiver.vertex_count(); ++v) {
    if (quiver.valency(v) != 1) continue;
    const auto& c = alg.cycles()[alg.cycle_of(quiver.out_arrows(v)[0])];
    if (c.multiplicity > 1) {
      report.warnings.push_back(Violation{"valency-one-revisit", quiver.vertex_id(v),
                                          "socle path through this valency-one vertex passes it " +
                                              std::to_string(c.multiplicity) + " times"});
    }
  }

  alg.digest_ = AlgebraPresentation::digest_of(alg.canonical_text());
  report.algebra = std::move(alg);
  return report;
}

/// Like validate_presentation but throws std::invalid_argument listing the violations.
inline AlgebraPresentation make_presentation(const RawPresentation& raw) {
  auto report = validate_presentation(raw);
  if (!report.ok()) {
    std::string msg = "invalid presentation:";
    for (const auto& v : report.violations) msg += "\n  " + v.code + " [" + v.subject + "]: " + v.message;
    throw std::invalid_argument(msg);
  }
  return std::move(*report.algebra);
}

// ---------------------------------------------------------------------------
// Paths

inline int sigma_of(const AlgebraPresentation& alg, int arrow) {
  if (arrow < 0 || arrow >= alg.quiver().arrow_count()) throw std::out_of_range("unknown arrow");
  return alg.sigma(arrow);
}

inline int last_arrow(const AlgebraPresentation& alg, const Path& p) {
  if (p.is_idempotent()) throw std::logic_error("idempotent has no last arrow");
  return alg.sigma_power(p.first_arrow, p.length - 1);
}

inline int path_target(const AlgebraPresentation& alg, const Path& p) {
  return p.is_idempotent() ? p.vertex : alg.quiver().target(last_arrow(alg, p));
}

inline std::vector<int> path_arrows(const AlgebraPresentation& alg, const Path& p) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(p.length));
  for (long k = 0; k < p.length; ++k) out.push_back(alg.sigma_power(p.first_arrow, k));
  return out;
}

inline std::string arrows_to_string(const AlgebraPresentation& alg, const std::vector<int>& arrows) {
  std::string out;
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    if (i) out += '.';
    out += alg.quiver().arrow_id(arrows[i]);
  }
  return out;
}

inline std::string path_to_string(const AlgebraPresentation& alg, const Path& p) {
  if (p.is_idempotent()) return "e_" + alg.quiver().vertex_id(p.vertex);
  return arrows_to_string(alg, path_arrows(alg, p));
}

/// A path reduced to basis form: equal to `path`, or to -(q/p)*path when
/// `flipped` (the non-representative branch of a socle relation).
struct ReducedPath {
  Path path;
  bool flipped = false;
};

inline std::optional<ReducedPath> reduce_nonzero_path(const AlgebraPresentation& alg, int first_arrow, long length) {
  int v = alg.quiver().source(first_arrow);
  long top = alg.socle_length(first_arrow);
  if (length > top) return std::nullopt;
  if (length == top && alg.is_valency_two(v) && first_arrow != alg.representative_arrow(v)) {
    int rep = alg.representative_arrow(v);
    return ReducedPath{Path{v, alg.socle_length(rep), rep}, true};
  }
  return ReducedPath{Path{v, length, first_arrow}, false};
}

/// Reduces an arrow sequence starting at `vertex`. Throws if the arrows are not
/// composable; returns nullopt when the path is zero in the algebra.
inline std::optional<ReducedPath> reduce_arrows(const AlgebraPresentation& alg, int vertex, const std::vector<int>& arrows) {
  const auto& q = alg.quiver();
  if (arrows.empty()) return ReducedPath{Path::idempotent(vertex), false};
  if (q.source(arrows[0]) != vertex) throw std::invalid_argument("path does not start at the given vertex");
  for (std::size_t i = 0; i + 1 < arrows.size(); ++i) {
    if (q.target(arrows[i]) != q.source(arrows[i + 1])) {
      throw std::invalid_argument("arrows " + q.arrow_id(arrows[i]) + " and " + q.arrow_id(arrows[i + 1]) +
                                  " are not composable");
    }
  }
  for (std::size_t i = 0; i + 1 < arrows.size(); ++i) {
    if (alg.sigma(arrows[i]) != arrows[i + 1]) return std::nullopt;
  }
  return reduce_nonzero_path(alg, arrows[0], static_cast<long>(arrows.size()));
}

/// Product of two basis paths, reduced. nullopt means zero.
inline std::optional<ReducedPath> concatenate(const AlgebraPresentation& alg, const Path& x, const Path& y) {
  if (path_target(alg, x) != y.vertex) return std::nullopt;
  if (x.is_idempotent()) return ReducedPath{y, false};
  if (y.is_idempotent()) return ReducedPath{x, false};
  if (alg.sigma(last_arrow(alg, x)) != y.first_arrow) return std::nullopt;
  return reduce_nonzero_path(alg, x.first_arrow, x.length + y.length);
}

struct SoclePaths {
  std::vector<int> c;
  std::optional<std::vector<int>> d;
};

/// C_v is the representative branch (least first arrow); D_v the other branch at valency two.
inline SoclePaths socle_paths(const AlgebraPresentation& alg, int v) {
  if (v < 0 || v >= alg.quiver().vertex_count()) throw std::out_of_range("unknown vertex");
  SoclePaths out;
  int rep = alg.representative_arrow(v);
  out.c = path_arrows(alg, Path{v, alg.socle_length(rep), rep});
  if (alg.is_valency_two(v)) {
    int other = alg.other_out(v, rep);
    out.d = path_arrows(alg, Path{v, alg.socle_length(other), other});
  }
  return out;
}

/// Basis of e_v Lambda: e_v, proper initial subwords of the branches, and the
/// representative socle path. Ordered by length, then first arrow.
inline std::vector<Path> projective_basis(const AlgebraPresentation& alg, int v) {
  std::vector<Path> out{Path::idempotent(v)};
  int rep = alg.representative_arrow(v);
  for (int a : alg.quiver().out_arrows(v)) {
    for (long len = 1; len < alg.socle_length(a); ++len) out.push_back(Path{v, len, a});
  }
  out.push_back(Path{v, alg.socle_length(rep), rep});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sbcert
