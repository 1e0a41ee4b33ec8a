#pragma once

#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace coercheck {

/// Exponent vector of a monomial. Entries are non-negative integers; the
/// length is the ambient variable count of the owning polynomial.
class Exponent {
 public:
  Exponent() = default;

  explicit Exponent(std::vector<int> entries) : e_(std::move(entries)) {
    for (int v : e_)
      if (v < 0) throw std::invalid_argument("negative exponent entry");
  }

  Exponent(std::initializer_list<int> entries) : Exponent(std::vector<int>(entries)) {}

  static Exponent origin(std::size_t n_vars) { return Exponent(std::vector<int>(n_vars, 0)); }

  /// The axis power 2k*e_i.
  static Exponent axis_power(std::size_t n_vars, std::size_t axis, int half_degree) {
    std::vector<int> e(n_vars, 0);
    e.at(axis) = 2 * half_degree;
    return Exponent(std::move(e));
  }

  std::size_t size() const { return e_.size(); }
  int operator[](std::size_t i) const { return e_[i]; }
  const std::vector<int>& entries() const { return e_; }

  int degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }

  bool is_origin() const {
    for (int v : e_)
      if (v != 0) return false;
    return true;
  }

  bool all_even() const {
    for (int v : e_)
      if (v % 2 != 0) return false;
    return true;
  }

  /// (axis, k) when the exponent equals 2k*e_axis with k >= 1.
  std::optional<std::pair<std::size_t, int>> even_axis_power() const {
    std::optional<std::pair<std::size_t, int>> found;
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (e_[i] == 0) continue;
      if (found || e_[i] % 2 != 0) return std::nullopt;
      found = {i, e_[i] / 2};
    }
    return found;
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(e_[i]);
    }
    return s + ")";
  }

  friend bool operator==(const Exponent&, const Exponent&) = default;

 private:
  std::vector<int> e_;
};

/// Graded lexicographic order: total degree first, lexicographic tiebreak.
/// The canonical term order; every deterministic iteration uses it.
struct GrlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.entries() < b.entries();
  }
};

}  // namespace coercheck
