#pragma once

// Finite-dimensional right modules as quiver representations, and the exact
// homological toolkit on top of them: projective modules, tops, projective
// covers, syzygies, Hom spaces and isomorphism testing.
//
// An arrow a: i -> j acts by a matrix of shape dim(j) x dim(i); the path a.b
// acts by action(b) * action(a).

#include "sbcert/element.hpp"
#include "sbcert/linalg.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace sbcert {

class ModuleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IsoBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ModuleRep {
 public:
  ModuleRep() = default;
  ModuleRep(const AlgebraPresentation& alg, std::vector<int> dims, std::vector<Matrix> actions)
      : dims_(std::move(dims)), actions_(std::move(actions)) {
    const auto& q = alg.quiver();
    if (static_cast<int>(dims_.size()) != q.vertex_count() || static_cast<int>(actions_.size()) != q.arrow_count()) {
      throw ModuleError("module data does not match the quiver");
    }
    for (int a = 0; a < q.arrow_count(); ++a) {
      if (actions_[a].rows() != dims_[q.target(a)] || actions_[a].cols() != dims_[q.source(a)]) {
        throw ModuleError("action of arrow " + q.arrow_id(a) + " has the wrong shape");
      }
    }
  }

  static ModuleRep zero(const AlgebraPresentation& alg) {
    const auto& q = alg.quiver();
    std::vector<Matrix> actions;
    for (int a = 0; a < q.arrow_count(); ++a) actions.emplace_back(0, 0);
    return ModuleRep(alg, std::vector<int>(q.vertex_count(), 0), std::move(actions));
  }

  const std::vector<int>& dims() const { return dims_; }
  int dim(int v) const { return dims_.at(v); }
  int total_dimension() const {
    int s = 0;
    for (int d : dims_) s += d;
    return s;
  }
  bool is_zero() const { return total_dimension() == 0; }
  const Matrix& action(int arrow) const { return actions_.at(arrow); }
  const std::vector<Matrix>& actions() const { return actions_; }

  Matrix arrows_action(const AlgebraPresentation& alg, int vertex, const std::vector<int>& arrows) const {
    Matrix m = Matrix::identity(dims_.at(vertex));
    for (int a : arrows) {
      if (alg.quiver().source(a) != vertex) throw std::invalid_argument("path not composable");
      m = actions_[a] * m;
      vertex = alg.quiver().target(a);
    }
    return m;
  }

  Matrix path_action(const AlgebraPresentation& alg, const Path& p) const {
    return arrows_action(alg, p.vertex, path_arrows(alg, p));
  }

 private:
  std::vector<int> dims_;
  std::vector<Matrix> actions_;
};

/// Generating relations that act nonzero on the module (empty when it is a module).
inline std::vector<std::string> relation_violations(const AlgebraPresentation& alg, const ModuleRep& m) {
  std::vector<std::string> out;
  const auto& q = alg.quiver();
  for (int g = 0; g < q.arrow_count(); ++g) {
    for (int h : q.out_arrows(q.target(g))) {
      if (h == alg.sigma(g)) continue;
      if (!(m.action(h) * m.action(g)).is_zero()) {
        out.push_back("zero relation " + q.arrow_id(g) + "." + q.arrow_id(h) + " acts nonzero");
      }
    }
  }
  for (int v = 0; v < q.vertex_count(); ++v) {
    auto sp = socle_paths(alg, v);
    if (!alg.is_valency_two(v)) {
      auto word = sp.c;
      word.push_back(q.out_arrows(v)[0]);
      if (!m.arrows_action(alg, v, word).is_zero()) {
        out.push_back("relation C." + q.arrow_id(word.back()) + " at " + q.vertex_id(v) + " acts nonzero");
      }
      continue;
    }
    const auto& pair = alg.scalars(v);
    if (pair.p.is_symbolic() || pair.q.is_symbolic()) throw ModuleError("modules need concrete socle scalars");
    Matrix rel = m.arrows_action(alg, v, *sp.d).scaled(pair.p.rational()) +
                 m.arrows_action(alg, v, sp.c).scaled(pair.q.rational());
    if (!rel.is_zero()) out.push_back("socle relation at " + q.vertex_id(v) + " acts nonzero");
  }
  return out;
}

inline ModuleRep make_module(const AlgebraPresentation& alg, std::vector<int> dims, std::vector<Matrix> actions) {
  ModuleRep m(alg, std::move(dims), std::move(actions));
  auto bad = relation_violations(alg, m);
  if (!bad.empty()) throw ModuleError("not a module: " + bad.front());
  return m;
}

struct ModuleMorphism {
  std::vector<Matrix> maps;  // per vertex: dim_N(v) x dim_M(v)
};

inline bool is_morphism(const AlgebraPresentation& alg, const ModuleRep& m, const ModuleRep& n,
                        const ModuleMorphism& f) {
  const auto& q = alg.quiver();
  if (static_cast<int>(f.maps.size()) != q.vertex_count()) return false;
  for (int v = 0; v < q.vertex_count(); ++v) {
    if (f.maps[v].rows() != n.dim(v) || f.maps[v].cols() != m.dim(v)) return false;
  }
  for (int a = 0; a < q.arrow_count(); ++a) {
    if (!(n.action(a) * f.maps[q.source(a)] == f.maps[q.target(a)] * m.action(a))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Projective modules

/// A direct sum of indecomposable projectives e_{v_0}Lambda + ... with an explicit
/// path basis: the coordinate of (summand s, basis path b) at vertex target(b).
struct ProjectiveSum {
  std::vector<int> summands;                        // vertex of each summand
  ModuleRep rep;
  std::vector<std::vector<std::vector<Path>>> basis;  // [summand][vertex] -> paths ending there
  std::vector<std::vector<int>> offset;              // [summand][vertex] -> first coordinate

  /// Coordinate of basis path p in summand s, at vertex path_target(p).
  int coordinate(int s, const Path& p, int target) const {
    const auto& list = basis[s][target];
    auto it = std::lower_bound(list.begin(), list.end(), p);
    if (it == list.end() || !(*it == p)) throw std::logic_error("path is not a basis path of the summand");
    return offset[s][target] + static_cast<int>(it - list.begin());
  }
};

inline ProjectiveSum projective_sum(const AlgebraPresentation& alg, const std::vector<int>& vertices) {
  const auto& q = alg.quiver();
  ProjectiveSum out;
  out.summands = vertices;
  std::vector<int> dims(q.vertex_count(), 0);
  for (int v : vertices) {
    std::vector<std::vector<Path>> by_target(q.vertex_count());
    for (const auto& p : projective_basis(alg, v)) by_target[path_target(alg, p)].push_back(p);
    std::vector<int> off(q.vertex_count());
    for (int j = 0; j < q.vertex_count(); ++j) {
      std::sort(by_target[j].begin(), by_target[j].end());
      off[j] = dims[j];
      dims[j] += static_cast<int>(by_target[j].size());
    }
    out.basis.push_back(std::move(by_target));
    out.offset.push_back(std::move(off));
  }
  std::vector<Matrix> actions;
  for (int a = 0; a < q.arrow_count(); ++a) actions.emplace_back(dims[q.target(a)], dims[q.source(a)]);
  Path arrow_path{0, 1, 0};
  for (std::size_t s = 0; s < vertices.size(); ++s) {
    for (int a = 0; a < q.arrow_count(); ++a) {
      arrow_path = Path{q.source(a), 1, a};
      int src = q.source(a);
      int tgt = q.target(a);
      for (const auto& p : out.basis[s][src]) {
        auto r = concatenate(alg, p, arrow_path);
        if (!r) continue;
        Rational c = r->flipped ? socle_flip<Rational>(alg, r->path.vertex) : Rational(1);
        int row = out.coordinate(static_cast<int>(s), r->path, tgt);
        int col = out.coordinate(static_cast<int>(s), p, src);
        actions[a](row, col) += c;
      }
    }
  }
  out.rep = ModuleRep(alg, std::move(dims), std::move(actions));
  return out;
}

inline ProjectiveSum projective_module(const AlgebraPresentation& alg, int v) { return projective_sum(alg, {v}); }

/// Coordinates of an element of e_{summands[s]}Lambda inside the sum, at vertex v.
/// Terms ending at other vertices must be absent.
inline std::vector<Rational> element_coordinates(const AlgebraPresentation& alg, const ProjectiveSum& p, int s,
                                                 const Element& x, int v) {
  std::vector<Rational> out(p.rep.dim(v));
  for (const auto& [path, c] : x.terms()) {
    if (path.vertex != p.summands[s]) throw std::invalid_argument("element not in the summand");
    int t = path_target(alg, path);
    if (t != v) throw std::invalid_argument("element is not homogeneous at the requested vertex");
    out[p.coordinate(s, path, v)] += c;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Submodules, kernels, images

/// Submodule spanned at each vertex by the columns of bases[v] (full column rank,
/// closed under the action).
inline ModuleRep submodule(const AlgebraPresentation& alg, const ModuleRep& m, const std::vector<Matrix>& bases) {
  const auto& q = alg.quiver();
  std::vector<int> dims(q.vertex_count());
  for (int v = 0; v < q.vertex_count(); ++v) dims[v] = bases[v].cols();
  std::vector<Matrix> actions;
  for (int a = 0; a < q.arrow_count(); ++a) {
    Matrix image = m.action(a) * bases[q.source(a)];
    auto x = solve(bases[q.target(a)], image);
    if (!x) throw ModuleError("subspace is not closed under arrow " + q.arrow_id(a));
    actions.push_back(std::move(*x));
  }
  return ModuleRep(alg, std::move(dims), std::move(actions));
}

struct Submodule {
  ModuleRep module;
  std::vector<Matrix> inclusion;  // per vertex, columns = basis in the ambient module
};

inline Submodule kernel_submodule(const AlgebraPresentation& alg, const ModuleRep& source, const ModuleMorphism& f) {
  std::vector<Matrix> bases;
  for (int v = 0; v < alg.quiver().vertex_count(); ++v) bases.push_back(kernel(f.maps[v]));
  return Submodule{submodule(alg, source, bases), bases};
}

inline Submodule image_submodule(const AlgebraPresentation& alg, const ModuleRep& target, const ModuleMorphism& f) {
  std::vector<Matrix> bases;
  for (int v = 0; v < alg.quiver().vertex_count(); ++v) bases.push_back(column_basis(f.maps[v]));
  return Submodule{submodule(alg, target, bases), bases};
}

// ---------------------------------------------------------------------------
// Top and projective cover

struct TopData {
  std::vector<int> dims;             // top multiplicity at each vertex
  std::vector<Matrix> generators;    // per vertex: lifts of a top basis (dim M(v) x dims[v])
  std::vector<Matrix> projection;    // per vertex: M(v) -> top(v)
};

/// Top M / rad M, where rad M is the sum of the images of all arrows.
inline TopData top(const AlgebraPresentation& alg, const ModuleRep& m) {
  const auto& q = alg.quiver();
  TopData out;
  for (int v = 0; v < q.vertex_count(); ++v) {
    int d = m.dim(v);
    std::vector<Matrix> images;
    for (int a : q.in_arrows(v)) images.push_back(m.action(a));
    Matrix rad = column_basis(Matrix::hconcat(images, d));
    int r = rad.cols();
    // complete the radical basis with standard vectors, least index first
    std::vector<int> chosen;
    Matrix span = rad;
    int current = r;
    for (int k = 0; k < d && current < d; ++k) {
      Matrix e(d, 1);
      e(k, 0) = 1;
      Matrix trial = Matrix::hconcat({span, e}, d);
      if (rank(trial) > current) {
        span = std::move(trial);
        ++current;
        chosen.push_back(k);
      }
    }
    int t = static_cast<int>(chosen.size());
    Matrix gens(d, t);
    for (int j = 0; j < t; ++j) gens(chosen[j], j) = 1;
    Matrix proj(t, d);
    if (t > 0) {
      auto inv = solve(span, Matrix::identity(d));
      if (!inv) throw std::logic_error("top: basis completion is singular");
      for (int i = 0; i < t; ++i)
        for (int j = 0; j < d; ++j) proj(i, j) = (*inv)(r + i, j);
    }
    out.dims.push_back(t);
    out.generators.push_back(std::move(gens));
    out.projection.push_back(std::move(proj));
  }
  return out;
}

struct ProjectiveCover {
  ProjectiveSum cover;
  ModuleMorphism projection;  // cover -> M, surjective, kernel inside rad(cover)
};

/// Minimal projective cover built from a basis of the top.
inline ProjectiveCover projective_cover(const AlgebraPresentation& alg, const ModuleRep& m) {
  const auto& q = alg.quiver();
  auto t = top(alg, m);
  std::vector<int> vertices;
  std::vector<std::pair<int, int>> gen;  // (vertex, column in generators)
  for (int v = 0; v < q.vertex_count(); ++v) {
    for (int j = 0; j < t.dims[v]; ++j) {
      vertices.push_back(v);
      gen.emplace_back(v, j);
    }
  }
  ProjectiveCover out{projective_sum(alg, vertices), {}};
  for (int v = 0; v < q.vertex_count(); ++v) out.projection.maps.emplace_back(m.dim(v), out.cover.rep.dim(v));
  for (std::size_t s = 0; s < vertices.size(); ++s) {
    auto [gv, gj] = gen[s];
    Matrix g = t.generators[gv].column(gj);
    for (int target = 0; target < q.vertex_count(); ++target) {
      for (const auto& p : out.cover.basis[s][target]) {
        Matrix image = m.path_action(alg, p) * g;
        int col = out.cover.coordinate(static_cast<int>(s), p, target);
        for (int i = 0; i < m.dim(target); ++i) out.projection.maps[target](i, col) = image(i, 0);
      }
    }
  }
  return out;
}

/// Omega(M): the kernel of the projective cover, with its inclusion.
inline Submodule syzygy_with_inclusion(const AlgebraPresentation& alg, const ModuleRep& m) {
  auto pc = projective_cover(alg, m);
  return kernel_submodule(alg, pc.cover.rep, pc.projection);
}

inline ModuleRep syzygy(const AlgebraPresentation& alg, const ModuleRep& m) {
  return syzygy_with_inclusion(alg, m).module;
}

struct SyzygyTrace {
  std::vector<ModuleRep> modules;  // Omega^0 .. Omega^n
  std::vector<int> dimensions;
};

inline SyzygyTrace omega_n(const AlgebraPresentation& alg, const ModuleRep& m, int n) {
  if (n < 0) throw std::invalid_argument("omega_n: n must be nonnegative");
  SyzygyTrace out;
  out.modules.push_back(m);
  out.dimensions.push_back(m.total_dimension());
  for (int k = 0; k < n; ++k) {
    out.modules.push_back(syzygy(alg, out.modules.back()));
    out.dimensions.push_back(out.modules.back().total_dimension());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Hom spaces and isomorphism

inline std::vector<ModuleMorphism> hom_space(const AlgebraPresentation& alg, const ModuleRep& m, const ModuleRep& n) {
  const auto& q = alg.quiver();
  std::vector<int> offset(q.vertex_count());
  int unknowns = 0;
  for (int v = 0; v < q.vertex_count(); ++v) {
    offset[v] = unknowns;
    unknowns += n.dim(v) * m.dim(v);
  }
  // F_v is dim_N(v) x dim_M(v), entry (r, c) at offset[v] + r * dim_M(v) + c
  auto var = [&](int v, int r, int c) { return offset[v] + r * m.dim(v) + c; };
  SparseEchelon system(unknowns);
  for (int a = 0; a < q.arrow_count(); ++a) {
    int s = q.source(a);
    int t = q.target(a);
    const Matrix& na = n.action(a);
    const Matrix& ma = m.action(a);
    // (N_a F_s)(r, c) - (F_t M_a)(r, c) = 0
    for (int r = 0; r < n.dim(t); ++r) {
      for (int c = 0; c < m.dim(s); ++c) {
        SparseRow row;
        for (int k = 0; k < n.dim(s); ++k) {
          if (sgn(na(r, k)) != 0) row.emplace_back(var(s, k, c), na(r, k));
        }
        for (int k = 0; k < m.dim(t); ++k) {
          if (sgn(ma(k, c)) != 0) row.emplace_back(var(t, r, k), -ma(k, c));
        }
        if (!row.empty()) system.add_row(std::move(row));
      }
    }
  }
  std::vector<ModuleMorphism> out;
  for (const auto& x : system.nullspace()) {
    ModuleMorphism f;
    for (int v = 0; v < q.vertex_count(); ++v) {
      Matrix mv(n.dim(v), m.dim(v));
      for (int r = 0; r < n.dim(v); ++r)
        for (int c = 0; c < m.dim(v); ++c) mv(r, c) = x[var(v, r, c)];
      f.maps.push_back(std::move(mv));
    }
    out.push_back(std::move(f));
  }
  return out;
}

struct IsoResult {
  bool isomorphic = false;
  std::optional<ModuleMorphism> witness;
  std::string obstruction;  // reason when not isomorphic
  long grid_points = 0;     // combinations evaluated
};

/// Exact isomorphism test. A generic element of Hom(M, N) is invertible iff the
/// product of its vertex determinants, a polynomial of degree <= dim M in each
/// coordinate, is nonzero; it then cannot vanish on the grid {0..dim M}^k.
/// Grid points are visited by increasing coordinate sum.
inline IsoResult is_isomorphic(const AlgebraPresentation& alg, const ModuleRep& m, const ModuleRep& n,
                               long budget = 2'000'000) {
  IsoResult out;
  if (m.dims() != n.dims()) {
    out.obstruction = "dimension vectors differ";
    return out;
  }
  const auto& q = alg.quiver();
  if (m.is_zero()) {
    out.isomorphic = true;
    out.witness = ModuleMorphism{};
    for (int v = 0; v < q.vertex_count(); ++v) out.witness->maps.emplace_back(0, 0);
    return out;
  }
  auto hom = hom_space(alg, m, n);
  int k = static_cast<int>(hom.size());
  if (k == 0) {
    out.obstruction = "Hom(M, N) = 0";
    return out;
  }
  auto end_m = hom_space(alg, m, m).size();
  auto end_n = hom_space(alg, n, n).size();
  if (end_m != hom.size() || end_n != hom.size()) {
    out.obstruction = "dim End(M) = " + std::to_string(end_m) + ", dim Hom(M, N) = " + std::to_string(hom.size()) +
                      ", dim End(N) = " + std::to_string(end_n);
    return out;
  }
  const int degree = m.total_dimension();
  std::vector<int> coeffs(k, 0);

  auto try_point = [&]() -> bool {
    ++out.grid_points;
    ModuleMorphism f;
    for (int v = 0; v < q.vertex_count(); ++v) {
      Matrix fv(n.dim(v), m.dim(v));
      for (int l = 0; l < k; ++l) {
        if (coeffs[l] != 0) fv = fv + hom[l].maps[v].scaled(coeffs[l]);
      }
      f.maps.push_back(std::move(fv));
    }
    for (int v = 0; v < q.vertex_count(); ++v) {
      if (m.dim(v) > 0 && is_zero(determinant(f.maps[v]))) return false;
    }
    out.witness = std::move(f);
    return true;
  };

  // enumerate compositions of `remaining` into coordinates [idx, k) with entries <= degree
  std::function<bool(int, int)> visit = [&](int idx, int remaining) -> bool {
    if (idx == k - 1) {
      if (remaining > degree) return false;
      coeffs[idx] = remaining;
      if (out.grid_points >= budget) {
        throw IsoBudgetExceeded("isomorphism grid budget of " + std::to_string(budget) + " points exhausted (k = " +
                                std::to_string(k) + ", degree " + std::to_string(degree) + ")");
      }
      return try_point();
    }
    for (int c = std::min(remaining, degree); c >= 0; --c) {
      coeffs[idx] = c;
      if (visit(idx + 1, remaining - c)) return true;
    }
    coeffs[idx] = 0;
    return false;
  };
  for (int total = 1; total <= k * degree; ++total) {
    if (visit(0, total)) {
      out.isomorphic = true;
      return out;
    }
  }
  out.obstruction = "no invertible element of Hom(M, N) on the exhaustive grid";
  return out;
}

}  // namespace sbcert
