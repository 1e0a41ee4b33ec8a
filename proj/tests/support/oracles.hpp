#pragma once

// Test-only oracles. These deliberately avoid the library's LP kernel: hull
// membership is decided by exhaustive subset enumeration plus an independent
// Gaussian elimination, so agreement with the simplex-based implementation
// is meaningful evidence.

#include <cstddef>
#include <optional>
#include <vector>

#include "coercheck/exponent.hpp"
#include "coercheck/polynomial.hpp"
#include "coercheck/rational.hpp"

namespace test_support {

using coercheck::Exponent;
using coercheck::ExponentSet;
using coercheck::Rational;

using Matrix = std::vector<std::vector<Rational>>;

inline std::size_t gauss_rank(Matrix m) {
  if (m.empty()) return 0;
  std::size_t rows = m.size(), cols = m.front().size(), r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

// Unique solution of A x = b for full-column-rank A; nullopt if inconsistent.
inline std::optional<std::vector<Rational>> gauss_solve(Matrix a, std::vector<Rational> b) {
  std::size_t rows = a.size(), cols = rows ? a.front().size() : 0;
  std::vector<std::size_t> where(cols);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) return std::nullopt;  // dependent columns: caller filters these out
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    where[c] = r;
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (b[i] != 0) return std::nullopt;
  std::vector<Rational> x(cols);
  for (std::size_t c = 0; c < cols; ++c) x[c] = b[where[c]] / a[where[c]][c];
  return x;
}

inline Matrix lifted(const std::vector<Exponent>& pts, std::size_t n) {
  Matrix m(n + 1, std::vector<Rational>(pts.size()));
  for (std::size_t j = 0; j < pts.size(); ++j) {
    for (std::size_t i = 0; i < n; ++i) m[i][j] = pts[j][i];
    m[n][j] = 1;
  }
  return m;
}

inline std::vector<Rational> lifted_rhs(const Exponent& p, std::size_t n) {
  std::vector<Rational> rhs(n + 1);
  for (std::size_t i = 0; i < n; ++i) rhs[i] = p[i];
  rhs[n] = 1;
  return rhs;
}

inline bool affinely_independent(const std::vector<Exponent>& pts, std::size_t n) {
  return gauss_rank(lifted(pts, n)) == pts.size();
}

// Convex weights of p over an affinely independent subset, when they exist.
inline std::optional<std::vector<Rational>> convex_weights(const Exponent& p,
                                                           const std::vector<Exponent>& subset,
                                                           std::size_t n) {
  auto x = gauss_solve(lifted(subset, n), lifted_rhs(p, n));
  if (!x) return std::nullopt;
  for (const Rational& w : *x)
    if (w < 0) return std::nullopt;
  return x;
}

// p in conv(points), by Caratheodory: some affinely independent subset of at
// most n+1 points carries p with non-negative weights.
inline bool in_hull_bruteforce(const Exponent& p, const std::vector<Exponent>& points,
                               std::size_t n) {
  std::size_t count = points.size();
  for (std::size_t mask = 1; mask < (std::size_t(1) << count); ++mask) {
    if (std::size_t(__builtin_popcountll(mask)) > n + 1) continue;
    std::vector<Exponent> subset;
    for (std::size_t i = 0; i < count; ++i)
      if (mask & (std::size_t(1) << i)) subset.push_back(points[i]);
    if (!affinely_independent(subset, n)) continue;
    if (convex_weights(p, subset, n)) return true;
  }
  return false;
}

inline ExponentSet hull_vertices_bruteforce(const ExponentSet& points) {
  ExponentSet vertices;
  for (const Exponent& p : points) {
    std::vector<Exponent> others;
    for (const Exponent& q : points)
      if (!(q == p)) others.push_back(q);
    if (!in_hull_bruteforce(p, others, p.size())) vertices.insert(p);
  }
  return vertices;
}

// Whether some representation of alpha_star over v0 gives the origin a
// strictly positive weight. An optimal representation can be taken basic, so
// searching affinely independent subsets containing the origin is exhaustive.
inline bool origin_positive_representation_bruteforce(const Exponent& alpha_star,
                                                      const ExponentSet& v0) {
  std::size_t n = alpha_star.size();
  std::vector<Exponent> pts(v0.begin(), v0.end());
  std::size_t origin_index = pts.size();
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (pts[i].is_origin()) origin_index = i;
  if (origin_index == pts.size()) return false;

  std::size_t count = pts.size();
  for (std::size_t mask = 1; mask < (std::size_t(1) << count); ++mask) {
    if (!(mask & (std::size_t(1) << origin_index))) continue;
    if (std::size_t(__builtin_popcountll(mask)) > n + 1) continue;
    std::vector<Exponent> subset;
    std::size_t origin_pos = 0;
    for (std::size_t i = 0; i < count; ++i) {
      if (mask & (std::size_t(1) << i)) {
        if (i == origin_index) origin_pos = subset.size();
        subset.push_back(pts[i]);
      }
    }
    if (!affinely_independent(subset, n)) continue;
    auto weights = convex_weights(alpha_star, subset, n);
    if (weights && (*weights)[origin_pos] > 0) return true;
  }
  return false;
}

}  // namespace test_support
