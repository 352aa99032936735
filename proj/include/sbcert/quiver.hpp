#pragma once

// Finite quivers with string ids, plus the raw (unvalidated) presentation data
// read from files: arrows, sigma cycles with multiplicities, socle scalars.

#include "sbcert/rational.hpp"

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

namespace sbcert {

/// A socle scalar: an exact rational or a named indeterminate.
struct ScalarSpec {
  std::variant<Rational, std::string> value = Rational(1);

  ScalarSpec() = default;
  ScalarSpec(Rational r) : value(std::move(r)) {}         // NOLINT(google-explicit-constructor)
  ScalarSpec(std::string sym) : value(std::move(sym)) {}  // NOLINT(google-explicit-constructor)

  bool is_symbolic() const { return std::holds_alternative<std::string>(value); }
  const Rational& rational() const { return std::get<Rational>(value); }
  const std::string& symbol() const { return std::get<std::string>(value); }
  std::string to_string() const { return is_symbolic() ? symbol() : sbcert::to_string(rational()); }

  friend bool operator==(const ScalarSpec& a, const ScalarSpec& b) { return a.value == b.value; }
};

struct RawArrow {
  std::string id;
  std::string source;
  std::string target;
  int line = 0;
};

struct RawCycle {
  std::vector<std::string> arrows;
  long multiplicity = 1;
  int line = 0;
};

struct RawSocle {
  std::string vertex;
  ScalarSpec p;
  ScalarSpec q;
  int line = 0;
};

struct RawPresentation {
  std::vector<std::string> vertices;
  std::vector<RawArrow> arrows;
  std::vector<RawCycle> cycles;
  std::vector<RawSocle> socle;
};

/// Quiver with vertices and arrows indexed in lexicographic order of their ids.
class Quiver {
 public:
  struct Arrow {
    std::string id;
    int source;
    int target;
  };

  Quiver() = default;

  /// Ids must be unique and endpoints must resolve; checked by the caller.
  Quiver(std::vector<std::string> vertex_ids, const std::vector<RawArrow>& arrows)
      : vertices_(std::move(vertex_ids)) {
    std::sort(vertices_.begin(), vertices_.end());
    for (int i = 0; i < static_cast<int>(vertices_.size()); ++i) vertex_index_[vertices_[i]] = i;
    std::vector<RawArrow> sorted = arrows;
    std::sort(sorted.begin(), sorted.end(),
              [](const RawArrow& a, const RawArrow& b) { return a.id < b.id; });
    for (const auto& a : sorted) {
      int id = static_cast<int>(arrows_.size());
      arrow_index_[a.id] = id;
      arrows_.push_back(Arrow{a.id, vertex_index_.at(a.source), vertex_index_.at(a.target)});
    }
    out_.assign(vertices_.size(), {});
    in_.assign(vertices_.size(), {});
    for (int a = 0; a < arrow_count(); ++a) {
      out_[arrows_[a].source].push_back(a);
      in_[arrows_[a].target].push_back(a);
    }
  }

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  const std::string& vertex_id(int v) const { return vertices_.at(v); }
  const std::string& arrow_id(int a) const { return arrows_.at(a).id; }
  int source(int a) const { return arrows_.at(a).source; }
  int target(int a) const { return arrows_.at(a).target; }
  std::span<const int> out_arrows(int v) const { return out_.at(v); }
  std::span<const int> in_arrows(int v) const { return in_.at(v); }
  int valency(int v) const { return static_cast<int>(out_.at(v).size()); }

  std::optional<int> find_vertex(std::string_view id) const {
    auto it = vertex_index_.find(std::string(id));
    if (it == vertex_index_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<int> find_arrow(std::string_view id) const {
    auto it = arrow_index_.find(std::string(id));
    if (it == arrow_index_.end()) return std::nullopt;
    return it->second;
  }

  bool connected() const {
    if (vertices_.empty()) return true;
    std::vector<bool> seen(vertices_.size(), false);
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      auto visit = [&](int w) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      };
      for (int a : out_[v]) visit(arrows_[a].target);
      for (int a : in_[v]) visit(arrows_[a].source);
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::unordered_map<std::string, int> vertex_index_;
  std::unordered_map<std::string, int> arrow_index_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
};

}  // namespace sbcert
