#pragma once

// Laurent monomials (and sums of them) in named scalar indeterminates.
//
// Exponents are rationals so that formal radicals such as (q/p)^(1/m) can be
// carried through a certificate without ever being evaluated.

#include "sbcert/rational.hpp"

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace sbcert {

using ExponentMap = std::map<std::string, Rational>;

class ScalarMonomial {
 public:
  ScalarMonomial() : coefficient_(1) {}
  explicit ScalarMonomial(Rational coefficient) : coefficient_(std::move(coefficient)) {
    if (is_zero(coefficient_)) throw std::invalid_argument("ScalarMonomial coefficient must be nonzero");
  }
  ScalarMonomial(Rational coefficient, ExponentMap exponents)
      : ScalarMonomial(std::move(coefficient)) {
    for (auto& [name, e] : exponents) {
      if (!is_zero(e)) exponents_.emplace(name, e);
    }
  }

  static ScalarMonomial variable(const std::string& name, const Rational& exponent = 1) {
    ScalarMonomial m;
    if (!is_zero(exponent)) m.exponents_.emplace(name, exponent);
    return m;
  }

  const Rational& coefficient() const { return coefficient_; }
  const ExponentMap& exponents() const { return exponents_; }

  Rational exponent(const std::string& name) const {
    auto it = exponents_.find(name);
    return it == exponents_.end() ? Rational(0) : it->second;
  }

  bool is_identity() const { return exponents_.empty() && coefficient_ == 1; }
  bool is_constant() const { return exponents_.empty(); }

  ScalarMonomial operator*(const ScalarMonomial& other) const {
    ScalarMonomial out(coefficient_ * other.coefficient_);
    out.exponents_ = exponents_;
    for (const auto& [name, e] : other.exponents_) {
      Rational sum = out.exponent(name) + e;
      if (is_zero(sum)) {
        out.exponents_.erase(name);
      } else {
        out.exponents_[name] = sum;
      }
    }
    return out;
  }

  ScalarMonomial inverse() const {
    ScalarMonomial out(Rational(1) / coefficient_);
    for (const auto& [name, e] : exponents_) out.exponents_.emplace(name, -e);
    return out;
  }

  ScalarMonomial operator/(const ScalarMonomial& other) const { return *this * other.inverse(); }

  /// Raises to a rational power. A non-integral power requires coefficient 1,
  /// since radicals of constants are not represented.
  ScalarMonomial pow(const Rational& power) const {
    Rational coef = 1;
    if (power.get_den() == 1) {
      long n = power.get_num().get_si();
      Rational base = n >= 0 ? coefficient_ : Rational(1) / coefficient_;
      for (long i = 0; i < (n >= 0 ? n : -n); ++i) coef *= base;
    } else if (coefficient_ != 1) {
      throw std::domain_error("fractional power of a monomial with coefficient " + sbcert::to_string(coefficient_));
    }
    ScalarMonomial out(coef);
    if (is_zero(power)) return out;
    for (const auto& [name, e] : exponents_) out.exponents_.emplace(name, e * power);
    return out;
  }

  /// Value at a concrete assignment; nullopt when an exponent is not integral.
  /// Throws if an indeterminate is unassigned or assigned zero.
  std::optional<Rational> evaluate(const std::map<std::string, Rational>& assignment) const {
    Rational value = coefficient_;
    for (const auto& [name, e] : exponents_) {
      auto it = assignment.find(name);
      if (it == assignment.end()) throw std::out_of_range("no value for indeterminate " + name);
      if (is_zero(it->second)) throw std::domain_error("indeterminate " + name + " assigned zero");
      if (e.get_den() != 1) return std::nullopt;
      long n = e.get_num().get_si();
      Rational base = n >= 0 ? it->second : Rational(1) / it->second;
      for (long i = 0; i < (n >= 0 ? n : -n); ++i) value *= base;
    }
    return value;
  }

  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    if (coefficient_ != 1 || exponents_.empty()) {
      os << sbcert::to_string(coefficient_);
      first = false;
    }
    for (const auto& [name, e] : exponents_) {
      if (!first) os << '*';
      first = false;
      os << name;
      if (e != 1) {
        if (e.get_den() == 1) {
          os << '^' << sbcert::to_string(e);
        } else {
          os << "^(" << sbcert::to_string(e) << ')';
        }
      }
    }
    return os.str();
  }

  friend bool operator==(const ScalarMonomial& a, const ScalarMonomial& b) {
    return a.coefficient_ == b.coefficient_ && a.exponents_ == b.exponents_;
  }

 private:
  Rational coefficient_;
  ExponentMap exponents_;
};

/// Finite sums of Laurent monomials; the coefficient ring for symbolic algebra elements.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(const Rational& constant) {  // NOLINT(google-explicit-constructor)
    if (!sbcert::is_zero(constant)) terms_.emplace(ExponentMap{}, constant);
  }
  LaurentPolynomial(const ScalarMonomial& m) {  // NOLINT(google-explicit-constructor)
    terms_.emplace(m.exponents(), m.coefficient());
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<ExponentMap, Rational>& terms() const { return terms_; }

  std::optional<ScalarMonomial> as_monomial() const {
    if (terms_.size() != 1) return std::nullopt;
    const auto& [e, c] = *terms_.begin();
    return ScalarMonomial(c, e);
  }

  LaurentPolynomial& operator+=(const LaurentPolynomial& other) {
    for (const auto& [e, c] : other.terms_) {
      auto it = terms_.find(e);
      if (it == terms_.end()) {
        terms_.emplace(e, c);
      } else {
        it->second += c;
        if (sbcert::is_zero(it->second)) terms_.erase(it);
      }
    }
    return *this;
  }
  LaurentPolynomial operator+(const LaurentPolynomial& other) const {
    LaurentPolynomial out = *this;
    out += other;
    return out;
  }
  LaurentPolynomial operator-() const {
    LaurentPolynomial out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
  }
  LaurentPolynomial operator-(const LaurentPolynomial& other) const { return *this + (-other); }

  LaurentPolynomial operator*(const LaurentPolynomial& other) const {
    LaurentPolynomial out;
    for (const auto& [ea, ca] : terms_) {
      for (const auto& [eb, cb] : other.terms_) {
        ScalarMonomial prod = ScalarMonomial(ca, ea) * ScalarMonomial(cb, eb);
        out += LaurentPolynomial(prod);
      }
    }
    return out;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += ScalarMonomial(c, e).to_string();
    }
    return out;
  }

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.terms_ == b.terms_;
  }

 private:
  std::map<ExponentMap, Rational> terms_;
};

}  // namespace sbcert
