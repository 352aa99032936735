#pragma once

// The Brauer graph: one node per sigma-cycle, one edge per valency-two vertex
// joining the cycles of its two branches (a self-loop when both branches lie on
// the same cycle).

#include "sbcert/band_word.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace sbcert {

struct BrauerEdge {
  int u = 0;  // u <= w
  int w = 0;
  int label = 0;  // quiver vertex
};

struct BrauerGraph {
  int node_count = 0;
  std::vector<std::string> node_labels;
  std::vector<BrauerEdge> edges;
  std::vector<std::vector<int>> rotation;  // per node: edges in order of crossing along the cycle
};

inline std::string cycle_label(const AlgebraPresentation& alg, int c) {
  const auto& cyc = alg.cycles()[c];
  std::string out = "(";
  for (std::size_t i = 0; i < cyc.arrows.size(); ++i) {
    if (i) out += ' ';
    out += alg.quiver().arrow_id(cyc.arrows[i]);
  }
  out += ')';
  if (cyc.multiplicity != 1) out += "^" + std::to_string(cyc.multiplicity);
  return out;
}

inline BrauerGraph build_brauer_graph(const AlgebraPresentation& alg) {
  const auto& q = alg.quiver();
  BrauerGraph g;
  g.node_count = static_cast<int>(alg.cycles().size());
  for (int c = 0; c < g.node_count; ++c) g.node_labels.push_back(cycle_label(alg, c));
  std::map<int, int> edge_of_vertex;
  for (int v : alg.valency_two_vertices()) {
    auto out = q.out_arrows(v);
    int x = alg.cycle_of(out[0]);
    int y = alg.cycle_of(out[1]);
    edge_of_vertex[v] = static_cast<int>(g.edges.size());
    g.edges.push_back(BrauerEdge{std::min(x, y), std::max(x, y), v});
  }
  g.rotation.assign(g.node_count, {});
  for (int c = 0; c < g.node_count; ++c) {
    for (int a : alg.cycles()[c].arrows) {
      auto it = edge_of_vertex.find(q.source(a));
      if (it != edge_of_vertex.end()) g.rotation[c].push_back(it->second);
    }
  }
  return g;
}

enum class GraphKind { TreeNoMultiEdge, HasMultiEdge, HasCycle, SingleVertexLoop };

inline std::string to_string(GraphKind k) {
  switch (k) {
    case GraphKind::TreeNoMultiEdge: return "TreeNoMultiEdge";
    case GraphKind::HasMultiEdge: return "HasMultiEdge";
    case GraphKind::HasCycle: return "HasCycle";
    case GraphKind::SingleVertexLoop: return "SingleVertexLoop";
  }
  return "?";
}

inline std::optional<GraphKind> graph_kind_from_string(const std::string& s) {
  for (auto k : {GraphKind::TreeNoMultiEdge, GraphKind::HasMultiEdge, GraphKind::HasCycle, GraphKind::SingleVertexLoop}) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

struct GraphVerdict {
  GraphKind kind = GraphKind::TreeNoMultiEdge;
  std::vector<int> edges;  // tree edges, the parallel pair, the loop, or the cycle's edges in walk order
  std::vector<int> walk;   // closed walk of nodes for HasCycle (first node repeated at the end)
};

namespace detail {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[std::max(x, y)] = std::min(x, y);
    return true;
  }
};

}  // namespace detail

/// Tree criterion with certificate. Parallel edges are reported first, then
/// self-loops, then the first back-edge of a union-find pass in edge order.
/// A self-loop on the only node is the dihedral double edge and counts as HasMultiEdge.
inline GraphVerdict classify(const BrauerGraph& g) {
  const int ne = static_cast<int>(g.edges.size());
  {
    detail::UnionFind all(g.node_count);
    int comps = g.node_count;
    for (const auto& e : g.edges) comps -= all.unite(e.u, e.w) ? 1 : 0;
    if (comps > 1) throw std::logic_error("Brauer graph is disconnected");
  }
  for (int i = 0; i < ne; ++i) {
    for (int j = i + 1; j < ne; ++j) {
      if (g.edges[i].u == g.edges[j].u && g.edges[i].w == g.edges[j].w) {
        return GraphVerdict{GraphKind::HasMultiEdge, {i, j}, {}};
      }
    }
  }
  for (int i = 0; i < ne; ++i) {
    if (g.edges[i].u == g.edges[i].w) {
      if (g.node_count == 1) return GraphVerdict{GraphKind::HasMultiEdge, {i, i}, {}};
      return GraphVerdict{GraphKind::SingleVertexLoop, {i}, {g.edges[i].u, g.edges[i].u}};
    }
  }
  detail::UnionFind uf(g.node_count);
  std::vector<std::vector<std::pair<int, int>>> tree(g.node_count);  // (neighbour, edge)
  std::vector<int> tree_edges;
  for (int i = 0; i < ne; ++i) {
    const auto& e = g.edges[i];
    if (uf.unite(e.u, e.w)) {
      tree[e.u].emplace_back(e.w, i);
      tree[e.w].emplace_back(e.u, i);
      tree_edges.push_back(i);
      continue;
    }
    // tree path from e.w to e.u, then the back-edge
    std::vector<int> prev_node(g.node_count, -1), prev_edge(g.node_count, -1);
    std::vector<int> queue{e.w};
    prev_node[e.w] = e.w;
    for (std::size_t k = 0; k < queue.size(); ++k) {
      int x = queue[k];
      for (auto [y, id] : tree[x]) {
        if (prev_node[y] != -1) continue;
        prev_node[y] = x;
        prev_edge[y] = id;
        queue.push_back(y);
      }
    }
    GraphVerdict out{GraphKind::HasCycle, {}, {}};
    for (int x = e.u; x != e.w; x = prev_node[x]) {
      out.walk.push_back(x);
      out.edges.push_back(prev_edge[x]);
    }
    out.walk.push_back(e.w);
    out.edges.push_back(i);
    out.walk.push_back(e.u);
    return out;
  }
  return GraphVerdict{GraphKind::TreeNoMultiEdge, tree_edges, {}};
}

/// Re-checks a certificate against the graph.
inline bool verify_graph_certificate(const BrauerGraph& g, const GraphVerdict& v) {
  const int ne = static_cast<int>(g.edges.size());
  for (int e : v.edges) {
    if (e < 0 || e >= ne) return false;
  }
  switch (v.kind) {
    case GraphKind::TreeNoMultiEdge: {
      if (ne != g.node_count - 1 || static_cast<int>(v.edges.size()) != ne) return false;
      for (int i = 0; i < ne; ++i) {
        if (g.edges[i].u == g.edges[i].w) return false;
        for (int j = i + 1; j < ne; ++j) {
          if (g.edges[i].u == g.edges[j].u && g.edges[i].w == g.edges[j].w) return false;
        }
      }
      detail::UnionFind uf(g.node_count);
      for (const auto& e : g.edges) {
        if (!uf.unite(e.u, e.w)) return false;
      }
      return true;
    }
    case GraphKind::HasMultiEdge: {
      if (v.edges.size() != 2) return false;
      const auto& x = g.edges[v.edges[0]];
      const auto& y = g.edges[v.edges[1]];
      if (v.edges[0] == v.edges[1]) return g.node_count == 1 && x.u == x.w;
      return x.u == y.u && x.w == y.w;
    }
    case GraphKind::SingleVertexLoop:
      return v.edges.size() == 1 && g.edges[v.edges[0]].u == g.edges[v.edges[0]].w;
    case GraphKind::HasCycle: {
      if (v.walk.size() < 3 || v.walk.front() != v.walk.back() || v.edges.size() + 1 != v.walk.size()) return false;
      std::vector<int> nodes(v.walk.begin(), v.walk.end() - 1);
      std::sort(nodes.begin(), nodes.end());
      if (std::adjacent_find(nodes.begin(), nodes.end()) != nodes.end()) return false;
      std::vector<int> es = v.edges;
      std::sort(es.begin(), es.end());
      if (std::adjacent_find(es.begin(), es.end()) != es.end()) return false;
      for (std::size_t k = 0; k < v.edges.size(); ++k) {
        const auto& e = g.edges[v.edges[k]];
        int x = v.walk[k];
        int y = v.walk[k + 1];
        if (!((e.u == x && e.w == y) || (e.u == y && e.w == x))) return false;
      }
      return true;
    }
  }
  return false;
}

inline std::string export_dot(const AlgebraPresentation& alg, const BrauerGraph& g) {
  std::ostringstream os;
  os << "graph brauer {\n";
  for (int c = 0; c < g.node_count; ++c) os << "  c" << c << " [label=\"" << g.node_labels[c] << "\"];\n";
  for (const auto& e : g.edges) {
    os << "  c" << e.u << " -- c" << e.w << " [label=\"" << alg.quiver().vertex_id(e.label) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

// ---------------------------------------------------------------------------

struct Colouring {
  bool ok = false;
  std::map<int, char> colour;  // cycle -> 'a' or 'b'
  int offending_arrow = -1;
  std::string message;
};

/// Colours each cycle by the side (a or b) of the word its arrows occur on.
inline Colouring two_colouring(const AlgebraPresentation& alg, const BandWord& w) {
  Colouring out;
  std::vector<bool> covered(alg.quiver().vertex_count(), false);
  for (int t = 0; t < w.size(); ++t) {
    covered[word_e(alg, w, t)] = true;
    covered[word_f(alg, w, t)] = true;
  }
  for (int v : alg.valency_two_vertices()) {
    if (!covered[v]) throw std::invalid_argument("word does not cover valency-two vertex " + alg.quiver().vertex_id(v));
  }
  auto paint = [&](const std::vector<int>& path, char side) {
    for (int arrow : path) {
      int c = alg.cycle_of(arrow);
      auto [it, inserted] = out.colour.emplace(c, side);
      if (!inserted && it->second != side) {
        out.offending_arrow = arrow;
        out.message = "arrow " + alg.quiver().arrow_id(arrow) + " of cycle " + cycle_label(alg, c) +
                      " occurs on both sides of the word";
        return false;
      }
    }
    return true;
  };
  for (int t = 0; t < w.size(); ++t) {
    if (!paint(w.a[t], 'a') || !paint(w.b[t], 'b')) return out;
  }
  out.ok = true;
  return out;
}

}  // namespace sbcert
