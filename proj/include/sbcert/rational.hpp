#pragma once

// Exact rational scalars backed by GMP.

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sbcert {

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline bool looks_like_rational(std::string_view text) {
  if (text.empty()) return false;
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') ++i;
  if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  bool slash = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c == '/') {
      if (slash || i + 1 >= text.size()) return false;
      slash = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

/// Parses `n`, `-n` or `n/d`. Throws std::invalid_argument on malformed input or d = 0.
inline Rational parse_rational(std::string_view text) {
  if (!looks_like_rational(text)) {
    throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  }
  std::string s(text);
  if (s[0] == '+') s.erase(0, 1);
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    mpz_class den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  }
  Rational r(s, 10);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace sbcert
