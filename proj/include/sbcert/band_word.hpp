#pragma once

// Band words: cyclic sequences (a_t, b_t), t = 0..m, of nonzero paths with
//
//   e_0 -a_0-> f_0 <-b_0- e_1 -a_1-> f_1 <- ... f_m <-b_m- e_{m+1} = e_0
//
// so a_t: e_t -> f_t and b_t: e_{t+1} -> f_t. Paths are stored as arrow lists.

#include "sbcert/algebra.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace sbcert {

struct BandWord {
  std::vector<std::vector<int>> a;
  std::vector<std::vector<int>> b;

  int m() const { return static_cast<int>(a.size()) - 1; }
  int size() const { return static_cast<int>(a.size()); }
  int index(int t) const {
    int n = size();
    return ((t % n) + n) % n;
  }
  const std::vector<int>& a_at(int t) const { return a[index(t)]; }
  const std::vector<int>& b_at(int t) const { return b[index(t)]; }

  long total_length() const {
    long s = 0;
    for (std::size_t t = 0; t < a.size(); ++t) s += static_cast<long>(a[t].size() + b[t].size());
    return s;
  }

  friend bool operator==(const BandWord&, const BandWord&) = default;
};

inline int word_e(const AlgebraPresentation& alg, const BandWord& w, int t) {
  return alg.quiver().source(w.a_at(t).front());
}
inline int word_f(const AlgebraPresentation& alg, const BandWord& w, int t) {
  return alg.quiver().target(w.a_at(t).back());
}

inline BandWord rotate(const BandWord& w, int k) {
  BandWord out;
  for (int t = 0; t < w.size(); ++t) {
    out.a.push_back(w.a_at(t + k));
    out.b.push_back(w.b_at(t + k));
  }
  return out;
}

/// The same band read backwards: a'_k = b_{-k-1}, b'_k = a_{-k-1}.
inline BandWord invert(const BandWord& w) {
  BandWord out;
  for (int k = 0; k < w.size(); ++k) {
    out.a.push_back(w.b_at(-k - 1));
    out.b.push_back(w.a_at(-k - 1));
  }
  return out;
}

inline std::vector<int> word_key(const AlgebraPresentation& alg, const BandWord& w) {
  std::vector<int> key;
  for (int t = 0; t < w.size(); ++t) {
    key.push_back(word_e(alg, w, t));
    key.insert(key.end(), w.a[t].begin(), w.a[t].end());
    key.push_back(-1);
    key.insert(key.end(), w.b[t].begin(), w.b[t].end());
    key.push_back(-1);
  }
  return key;
}

/// Least key over all rotations of the word and of its inverse.
inline BandWord canonical_word(const AlgebraPresentation& alg, const BandWord& w) {
  BandWord best = w;
  auto best_key = word_key(alg, w);
  for (const auto& base : {w, invert(w)}) {
    for (int k = 0; k < w.size(); ++k) {
      auto r = rotate(base, k);
      auto key = word_key(alg, r);
      if (key < best_key) {
        best_key = std::move(key);
        best = std::move(r);
      }
    }
  }
  return best;
}

inline bool is_primitive(const BandWord& w) {
  int n = w.size();
  for (int d = 1; d < n; ++d) {
    if (n % d == 0 && rotate(w, d) == w) return false;
  }
  return true;
}

/// The first violated clause, or nullopt when w is a band word.
inline std::optional<std::string> check_band_word(const AlgebraPresentation& alg, const BandWord& w) {
  const auto& q = alg.quiver();
  if (w.a.empty() || w.a.size() != w.b.size()) return "a and b must be nonempty sequences of equal length";
  auto check_path = [&](const std::vector<int>& p, const std::string& name) -> std::optional<std::string> {
    if (p.empty()) return name + " is empty";
    for (int x : p) {
      if (x < 0 || x >= q.arrow_count()) return name + " has an unknown arrow";
    }
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      if (q.target(p[i]) != q.source(p[i + 1])) return name + " is not a path";
      if (alg.sigma(p[i]) != p[i + 1]) return name + " is zero in the algebra";
    }
    if (static_cast<long>(p.size()) >= alg.socle_length(p.front())) {
      return name + " is not a proper initial subpath of a socle path";
    }
    if (!alg.is_valency_two(q.source(p.front())) || !alg.is_valency_two(q.target(p.back()))) {
      return name + " does not join vertices of valency two";
    }
    return std::nullopt;
  };
  for (int t = 0; t < w.size(); ++t) {
    std::string idx = std::to_string(t);
    if (auto e = check_path(w.a[t], "a_" + idx)) return e;
    if (auto e = check_path(w.b[t], "b_" + idx)) return e;
  }
  for (int t = 0; t < w.size(); ++t) {
    std::string idx = std::to_string(t);
    if (q.target(w.b[t].back()) != word_f(alg, w, t)) return "b_" + idx + " does not end at f_" + idx;
    if (q.source(w.b[t].front()) != word_e(alg, w, t + 1)) {
      return "b_" + idx + " does not start at e_" + std::to_string(w.index(t + 1));
    }
    if (w.a[t].back() == w.b[t].back()) return "a_" + idx + " and b_" + idx + " end with the same arrow";
    if (w.a[t].front() == w.b_at(t - 1).front()) {
      return "a_" + idx + " and b_" + std::to_string(w.index(t - 1)) + " start with the same arrow";
    }
  }
  if (!is_primitive(w)) return "word is a proper power of a shorter word";
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Text forms

/// `e0 -a0-> f0 <-b0- e1 ... fm <-bm- e0`
inline std::string word_to_text(const AlgebraPresentation& alg, const BandWord& w) {
  const auto& q = alg.quiver();
  std::ostringstream os;
  os << q.vertex_id(word_e(alg, w, 0));
  for (int t = 0; t < w.size(); ++t) {
    os << " -" << arrows_to_string(alg, w.a[t]) << "-> " << q.vertex_id(word_f(alg, w, t)) << " <-"
       << arrows_to_string(alg, w.b[t]) << "- " << q.vertex_id(word_e(alg, w, t + 1));
  }
  return os.str();
}

/// `a0|b0|a1|b1|...`, paths as dot-separated arrow ids.
inline std::string word_to_cli(const AlgebraPresentation& alg, const BandWord& w) {
  std::string out;
  for (int t = 0; t < w.size(); ++t) {
    if (t) out += '|';
    out += arrows_to_string(alg, w.a[t]) + "|" + arrows_to_string(alg, w.b[t]);
  }
  return out;
}

inline BandWord parse_word(const AlgebraPresentation& alg, const std::string& text) {
  std::vector<std::vector<int>> paths;
  std::stringstream outer(text);
  std::string part;
  while (std::getline(outer, part, '|')) {
    std::vector<int> path;
    std::stringstream inner(part);
    std::string id;
    while (std::getline(inner, id, '.')) {
      id.erase(0, id.find_first_not_of(" \t"));
      id.erase(id.find_last_not_of(" \t") + 1);
      auto a = alg.quiver().find_arrow(id);
      if (!a) throw std::invalid_argument("unknown arrow '" + id + "' in word '" + text + "'");
      path.push_back(*a);
    }
    if (path.empty()) throw std::invalid_argument("empty path in word '" + text + "'");
    paths.push_back(std::move(path));
  }
  if (!text.empty() && text.back() == '|') throw std::invalid_argument("empty path in word '" + text + "'");
  if (paths.empty() || paths.size() % 2 != 0) {
    throw std::invalid_argument("word '" + text + "' must list an even number of paths a0|b0|...");
  }
  BandWord w;
  for (std::size_t i = 0; i < paths.size(); i += 2) {
    w.a.push_back(paths[i]);
    w.b.push_back(paths[i + 1]);
  }
  return w;
}

// ---------------------------------------------------------------------------
// Enumeration

/// The minimal path starting with `arrow`: follow sigma until a vertex of valency two.
inline std::vector<int> minimal_path_from(const AlgebraPresentation& alg, int arrow) {
  std::vector<int> p{arrow};
  long limit = alg.socle_length(arrow);
  while (!alg.is_valency_two(alg.quiver().target(p.back())) && static_cast<long>(p.size()) <= limit) {
    p.push_back(alg.sigma(p.back()));
  }
  return p;
}

/// The minimal path ending with `arrow`: follow sigma backwards until a vertex of valency two.
inline std::vector<int> minimal_path_to(const AlgebraPresentation& alg, int arrow) {
  std::vector<int> p{arrow};
  long limit = alg.socle_length(arrow);
  while (!alg.is_valency_two(alg.quiver().source(p.front())) && static_cast<long>(p.size()) <= limit) {
    p.insert(p.begin(), alg.sigma_inverse(p.front()));
  }
  return p;
}

namespace detail {

inline bool proper(const AlgebraPresentation& alg, const std::vector<int>& p) {
  return static_cast<long>(p.size()) < alg.socle_length(p.front());
}

inline void sort_words(const AlgebraPresentation& alg, std::vector<BandWord>& words) {
  std::sort(words.begin(), words.end(), [&](const BandWord& x, const BandWord& y) {
    if (x.total_length() != y.total_length()) return x.total_length() < y.total_length();
    return word_key(alg, x) < word_key(alg, y);
  });
}

}  // namespace detail

/// Band words made of minimal paths (interior vertices of valency one). The map
/// (e_t, first arrow of a_t) -> (e_{t+1}, first arrow of a_{t+1}) is a bijection
/// on outgoing arrows at valency-two vertices; its orbits are the candidates.
inline std::vector<BandWord> enumerate_minimal_band_words(const AlgebraPresentation& alg) {
  const auto& q = alg.quiver();
  std::vector<int> states;
  for (int v : alg.valency_two_vertices()) {
    for (int a : q.out_arrows(v)) states.push_back(a);
  }
  std::set<int> seen;
  std::set<std::vector<int>> keys;
  std::vector<BandWord> out;
  for (int start : states) {
    if (seen.count(start)) continue;
    BandWord w;
    bool valid = true;
    int cur = start;
    do {
      seen.insert(cur);
      auto a = minimal_path_from(alg, cur);
      if (!detail::proper(alg, a)) {
        valid = false;
        break;
      }
      int f = q.target(a.back());
      auto b = minimal_path_to(alg, alg.other_in(f, a.back()));
      if (!detail::proper(alg, b)) {
        valid = false;
        break;
      }
      int e = q.source(b.front());
      cur = alg.other_out(e, b.front());
      w.a.push_back(std::move(a));
      w.b.push_back(std::move(b));
    } while (cur != start);
    if (!valid) continue;
    auto c = canonical_word(alg, w);
    if (check_band_word(alg, c)) continue;
    if (keys.insert(word_key(alg, c)).second) out.push_back(std::move(c));
  }
  detail::sort_words(alg, out);
  return out;
}

/// All band words with total length at most max_total_length, one per class
/// under rotation and inversion, ordered by total length and then key.
inline std::vector<BandWord> enumerate_band_words(const AlgebraPresentation& alg, long max_total_length) {
  const auto& q = alg.quiver();
  std::set<std::vector<int>> keys;
  std::vector<BandWord> out;
  BandWord w;
  long total = 0;
  int e0 = -1;

  // sigma-paths ending at valency-two vertices and proper
  auto forward_paths = [&](int first) {
    std::vector<std::vector<int>> res;
    std::vector<int> p{first};
    while (detail::proper(alg, p)) {
      if (alg.is_valency_two(q.target(p.back()))) res.push_back(p);
      p.push_back(alg.sigma(p.back()));
    }
    return res;
  };
  auto backward_paths = [&](int last) {
    std::vector<std::vector<int>> res;
    std::vector<int> p{last};
    while (detail::proper(alg, p)) {
      if (alg.is_valency_two(q.source(p.front()))) res.push_back(p);
      p.insert(p.begin(), alg.sigma_inverse(p.front()));
    }
    return res;
  };

  std::function<void(int)> extend_a;
  auto extend_b = [&]() {
    int f = q.target(w.a.back().back());
    for (auto& b : backward_paths(alg.other_in(f, w.a.back().back()))) {
      long len = static_cast<long>(b.size());
      if (total + len > max_total_length) break;
      total += len;
      w.b.push_back(b);
      int e = q.source(b.front());
      if (e == e0 && b.front() != w.a.front().front()) {
        if (is_primitive(w)) {
          auto c = canonical_word(alg, w);
          if (!check_band_word(alg, c) && keys.insert(word_key(alg, c)).second) out.push_back(std::move(c));
        }
      }
      extend_a(alg.other_out(e, b.front()));
      w.b.pop_back();
      total -= len;
    }
  };
  extend_a = [&](int first) {
    for (auto& a : forward_paths(first)) {
      long len = static_cast<long>(a.size());
      if (total + len + 1 > max_total_length) break;
      total += len;
      w.a.push_back(a);
      extend_b();
      w.a.pop_back();
      total -= len;
    }
  };

  for (int v : alg.valency_two_vertices()) {
    e0 = v;
    for (int a : q.out_arrows(v)) extend_a(a);
  }
  detail::sort_words(alg, out);
  return out;
}

}  // namespace sbcert
