#pragma once

// Presentation files:
//
//   # comment
//   [quiver]
//   vertices: v0 v1
//   x: v0 -> v1
//   [sigma]
//   (x y) @ 2
//   [socle]
//   v0 = p:1 q:-3/2
//
// Ids match [A-Za-z0-9_]+; a scalar is a rational or a symbol starting with a letter.

#include "sbcert/algebra.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace sbcert {

struct Diagnostic {
  int line = 0;
  int column = 0;
  std::string code;
  std::string message;

  std::string to_string(const std::string& source = "") const {
    std::string out = source.empty() ? "" : source + ":";
    if (line > 0) out += std::to_string(line) + ":" + std::to_string(column) + ": ";
    else if (!out.empty()) out += " ";
    return out + code + ": " + message;
  }
};

struct ParseResult {
  std::optional<AlgebraPresentation> algebra;
  std::optional<RawPresentation> raw;
  std::vector<Diagnostic> diagnostics;
  std::vector<Diagnostic> warnings;
  bool ok() const { return algebra.has_value(); }
};

namespace detail {

inline bool is_id_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class LineScanner {
 public:
  LineScanner(std::string text, int line) : text_(std::move(text)), line_(line) {}

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  int column() const { return static_cast<int>(pos_) + 1; }
  bool accept(std::string_view token) {
    skip_space();
    if (text_.compare(pos_, token.size(), token) == 0) {
      pos_ += token.size();
      return true;
    }
    return false;
  }
  std::optional<std::string> identifier() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_id_char(text_[pos_])) ++pos_;
    if (pos_ == start) return std::nullopt;
    return text_.substr(start, pos_ - start);
  }
  /// A rational or symbol token: [+-]?[A-Za-z0-9_/]+
  std::optional<std::string> scalar_token() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && (is_id_char(text_[pos_]) || text_[pos_] == '/')) ++pos_;
    if (pos_ == start) return std::nullopt;
    return text_.substr(start, pos_ - start);
  }
  Diagnostic error(std::string code, std::string message) const {
    return Diagnostic{line_, column(), std::move(code), std::move(message)};
  }

 private:
  std::string text_;
  int line_;
  std::size_t pos_ = 0;
};

inline std::optional<ScalarSpec> parse_scalar(const std::string& token) {
  if (looks_like_rational(token)) {
    try {
      return ScalarSpec(parse_rational(token));
    } catch (const std::invalid_argument&) {
      return std::nullopt;
    }
  }
  if (!token.empty() && std::isalpha(static_cast<unsigned char>(token[0])) &&
      std::all_of(token.begin(), token.end(), is_id_char)) {
    return ScalarSpec(token);
  }
  return std::nullopt;
}

}  // namespace detail

inline ParseResult parse_presentation(const std::string& text) {
  ParseResult result;
  RawPresentation raw;
  auto& diags = result.diagnostics;
  enum class Section { None, Quiver, Sigma, Socle } section = Section::None;
  bool seen[3] = {false, false, false};
  bool have_vertices = false;
  std::istringstream in(text);
  std::string line_text;
  int line_no = 0;
  while (std::getline(in, line_text)) {
    ++line_no;
    auto hash = line_text.find('#');
    if (hash != std::string::npos) line_text.erase(hash);
    detail::LineScanner s(line_text, line_no);
    if (s.at_end()) continue;
    if (s.accept("[")) {
      auto name = s.identifier();
      if (!name || !s.accept("]") || !s.at_end()) {
        diags.push_back(s.error("syntax", "malformed section header"));
        continue;
      }
      int idx = -1;
      if (*name == "quiver") section = Section::Quiver, idx = 0;
      else if (*name == "sigma") section = Section::Sigma, idx = 1;
      else if (*name == "socle") section = Section::Socle, idx = 2;
      if (idx < 0) {
        diags.push_back(Diagnostic{line_no, 1, "syntax", "unknown section [" + *name + "]"});
        section = Section::None;
        continue;
      }
      if (seen[idx]) diags.push_back(Diagnostic{line_no, 1, "syntax", "section [" + *name + "] repeated"});
      seen[idx] = true;
      continue;
    }
    switch (section) {
      case Section::None:
        diags.push_back(s.error("syntax", "content before the first section header"));
        break;
      case Section::Quiver: {
        auto id = s.identifier();
        if (!id || !s.accept(":")) {
          diags.push_back(s.error("syntax", "expected 'vertices: ...' or 'arrow: source -> target'"));
          break;
        }
        if (*id == "vertices") {
          if (have_vertices) diags.push_back(Diagnostic{line_no, 1, "syntax", "vertices listed twice"});
          have_vertices = true;
          while (!s.at_end()) {
            auto v = s.identifier();
            if (!v) {
              diags.push_back(s.error("syntax", "expected a vertex id"));
              break;
            }
            raw.vertices.push_back(*v);
          }
          break;
        }
        RawArrow a{*id, "", "", line_no};
        auto src = s.identifier();
        if (!src || !s.accept("->")) {
          diags.push_back(s.error("syntax", "expected 'source -> target' for arrow " + *id));
          break;
        }
        auto tgt = s.identifier();
        if (!tgt || !s.at_end()) {
          diags.push_back(s.error("syntax", "expected a single target vertex for arrow " + *id));
          break;
        }
        a.source = *src;
        a.target = *tgt;
        raw.arrows.push_back(a);
        break;
      }
      case Section::Sigma: {
        RawCycle c;
        c.line = line_no;
        if (!s.accept("(")) {
          diags.push_back(s.error("syntax", "expected '(' to open a sigma cycle"));
          break;
        }
        bool ok = true;
        while (!s.accept(")")) {
          auto id = s.identifier();
          if (!id) {
            diags.push_back(s.error("syntax", "expected an arrow id or ')'"));
            ok = false;
            break;
          }
          c.arrows.push_back(*id);
        }
        if (!ok) break;
        if (s.accept("@")) {
          auto m = s.scalar_token();
          if (!m || !std::all_of(m->begin(), m->end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }) ||
              m->size() > 9) {
            diags.push_back(s.error("syntax", "multiplicity must be a positive integer"));
            break;
          }
          c.multiplicity = std::stol(*m);
        }
        if (!s.at_end()) {
          diags.push_back(s.error("syntax", "unexpected text after sigma cycle"));
          break;
        }
        raw.cycles.push_back(c);
        break;
      }
      case Section::Socle: {
        RawSocle r;
        r.line = line_no;
        auto v = s.identifier();
        if (!v || !s.accept("=")) {
          diags.push_back(s.error("syntax", "expected 'vertex = p:<scalar> q:<scalar>'"));
          break;
        }
        r.vertex = *v;
        bool ok = true;
        for (auto [key, target] : {std::pair{"p", &r.p}, std::pair{"q", &r.q}}) {
          if (!s.accept(key) || !s.accept(":")) {
            diags.push_back(s.error("syntax", std::string("expected '") + key + ":'"));
            ok = false;
            break;
          }
          int col = s.column();
          auto tok = s.scalar_token();
          auto spec = tok ? detail::parse_scalar(*tok) : std::nullopt;
          if (!spec) {
            diags.push_back(Diagnostic{line_no, col, "syntax", "expected a rational or a symbol"});
            ok = false;
            break;
          }
          *target = *spec;
        }
        if (!ok) break;
        if (!s.at_end()) {
          diags.push_back(s.error("syntax", "unexpected text after socle scalars"));
          break;
        }
        raw.socle.push_back(r);
        break;
      }
    }
  }
  if (!seen[0]) diags.push_back(Diagnostic{0, 0, "syntax", "missing [quiver] section"});
  if (!seen[1]) diags.push_back(Diagnostic{0, 0, "syntax", "missing [sigma] section"});
  if (!diags.empty()) return result;
  result.raw = raw;
  auto report = validate_presentation(raw);
  for (const auto& v : report.violations) {
    std::string msg = v.subject.empty() ? v.message : v.subject + ": " + v.message;
    diags.push_back(Diagnostic{v.line, v.line > 0 ? 1 : 0, v.code, msg});
  }
  for (const auto& v : report.warnings) {
    result.warnings.push_back(Diagnostic{v.line, v.line > 0 ? 1 : 0, v.code, v.subject + ": " + v.message});
  }
  if (report.ok()) result.algebra = std::move(report.algebra);
  return result;
}

inline std::string serialize_presentation(const AlgebraPresentation& alg) { return alg.canonical_text(); }

inline std::optional<std::string> read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline ParseResult load_presentation(const std::string& path) {
  auto text = read_text_file(path);
  if (!text) {
    ParseResult r;
    r.diagnostics.push_back(Diagnostic{0, 0, "io", "cannot read '" + path + "'"});
    return r;
  }
  return parse_presentation(*text);
}

}  // namespace sbcert
