#pragma once

#include <cmath>
#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coercheck/exponent.hpp"
#include "coercheck/rational.hpp"

namespace coercheck {

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ExponentNotInSupport : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

using TermMap = std::map<Exponent, Rational, GrlexLess>;
using ExponentSet = std::set<Exponent, GrlexLess>;

/// Sparse multivariate polynomial with exact rational coefficients.
/// Canonical form: no zero coefficients, no duplicate exponents; the support
/// is the key set of the term map. Values are immutable after construction
/// and safe to share between threads.
class Polynomial {
 public:
  Polynomial() : n_vars_(0) {}

  static Polynomial zero(std::size_t n_vars, std::vector<std::string> var_names = {}) {
    return Polynomial(n_vars, std::move(var_names), {});
  }

  /// Canonicalizes: merges duplicate exponents, drops terms that cancel.
  static Polynomial from_terms(std::size_t n_vars,
                               std::vector<std::pair<Exponent, Rational>> terms,
                               std::vector<std::string> var_names = {}) {
    TermMap map;
    for (auto& [e, c] : terms) {
      if (e.size() != n_vars) throw DimensionMismatch("exponent length != variable count");
      auto [it, inserted] = map.emplace(e, c);
      if (!inserted) it->second += c;
    }
    for (auto it = map.begin(); it != map.end();)
      it = it->second == 0 ? map.erase(it) : std::next(it);
    return Polynomial(n_vars, std::move(var_names), std::move(map));
  }

  std::size_t n_vars() const { return n_vars_; }
  const std::vector<std::string>& var_names() const { return var_names_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_origin());
  }

  int total_degree() const {
    // Grlex order puts the highest-degree term last.
    return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
  }

  /// A(f): the exponent support.
  ExponentSet support() const {
    ExponentSet s;
    for (const auto& [e, c] : terms_) s.insert(e);
    return s;
  }

  /// Coefficient of an exponent, zero when absent.
  Rational coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Restriction of the term map to S; requires S to be part of the support.
  Polynomial subpolynomial(const ExponentSet& s) const {
    TermMap map;
    for (const Exponent& e : s) {
      auto it = terms_.find(e);
      if (it == terms_.end())
        throw ExponentNotInSupport("exponent " + e.to_string() + " not in support");
      map.emplace(*it);
    }
    return Polynomial(n_vars_, var_names_, std::move(map));
  }

  /// Floating-point evaluation; coefficients converted by nearest rounding.
  double evaluate(std::span<const double> point) const {
    if (point.size() != n_vars_) throw DimensionMismatch("point length != variable count");
    double sum = 0.0;
    for (const auto& [e, c] : terms_) {
      double term = to_double_nearest(c);
      for (std::size_t i = 0; i < n_vars_; ++i) term *= pow_int(point[i], e[i]);
      sum += term;
    }
    return sum;
  }

  /// Exact evaluation at a rational point.
  Rational evaluate_exact(const std::vector<Rational>& point) const {
    if (point.size() != n_vars_) throw DimensionMismatch("point length != variable count");
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
      Rational term = c;
      for (std::size_t i = 0; i < n_vars_; ++i)
        for (int k = 0; k < e[i]; ++k) term *= point[i];
      sum += term;
    }
    return sum;
  }

  Polynomial scaled(const Rational& factor) const {
    std::vector<std::pair<Exponent, Rational>> terms;
    for (const auto& [e, c] : terms_) terms.emplace_back(e, c * factor);
    return from_terms(n_vars_, std::move(terms), var_names_);
  }

  /// Applies a variable permutation: variable i of the result is variable
  /// perm[i] of the original.
  Polynomial permuted(const std::vector<std::size_t>& perm) const {
    if (perm.size() != n_vars_) throw DimensionMismatch("permutation length != variable count");
    std::vector<std::pair<Exponent, Rational>> terms;
    for (const auto& [e, c] : terms_) {
      std::vector<int> pe(n_vars_);
      for (std::size_t i = 0; i < n_vars_; ++i) pe[i] = e[perm[i]];
      terms.emplace_back(Exponent(std::move(pe)), c);
    }
    std::vector<std::string> names(n_vars_);
    for (std::size_t i = 0; i < n_vars_; ++i)
      names[i] = var_names_.empty() ? std::string() : var_names_[perm[i]];
    if (var_names_.empty()) names.clear();
    return from_terms(n_vars_, std::move(terms), std::move(names));
  }

  /// Deterministic pretty-printer: terms in descending grlex order, exact
  /// rational coefficients. Output re-parses to the same polynomial.
  std::string render() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      bool first = out.empty();
      bool negative = c < 0;
      Rational mag = negative ? Rational(-c) : c;
      if (first)
        out += negative ? "-" : "";
      else
        out += negative ? " - " : " + ";
      std::string mono = monomial_string(e);
      if (mono.empty()) {
        out += mag.get_str();
      } else if (mag == 1) {
        out += mono;
      } else {
        out += mag.get_str() + "*" + mono;
      }
    }
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.n_vars_ == b.n_vars_ && a.var_names_ == b.var_names_ && a.terms_ == b.terms_;
  }

 private:
  Polynomial(std::size_t n_vars, std::vector<std::string> var_names, TermMap terms)
      : n_vars_(n_vars), var_names_(std::move(var_names)), terms_(std::move(terms)) {
    if (!var_names_.empty() && var_names_.size() != n_vars_)
      throw DimensionMismatch("variable name count != variable count");
    if (var_names_.empty()) {
      var_names_.reserve(n_vars_);
      for (std::size_t i = 0; i < n_vars_; ++i) var_names_.push_back("x" + std::to_string(i + 1));
    }
  }

  static double pow_int(double base, int exp) {
    double r = 1.0;
    while (exp > 0) {
      if (exp & 1) r *= base;
      base *= base;
      exp >>= 1;
    }
    return r;
  }

  std::string monomial_string(const Exponent& e) const {
    std::string s;
    for (std::size_t i = 0; i < n_vars_; ++i) {
      if (e[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += var_names_[i];
      if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s;
  }

  std::size_t n_vars_;
  std::vector<std::string> var_names_;
  TermMap terms_;
};

}  // namespace coercheck
