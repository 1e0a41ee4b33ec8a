#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "coercheck/rational.hpp"

namespace coercheck::linalg {

using Matrix = std::vector<std::vector<Rational>>;

/// Rank by exact Gaussian elimination.
inline std::size_t rank(Matrix m) {
  if (m.empty()) return 0;
  std::size_t rows = m.size(), cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rational factor = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
    }
    ++r;
  }
  return r;
}

/// Solves A x = b for A with full column rank. Returns nullopt when the
/// system is inconsistent; throws when the columns are dependent.
inline std::optional<std::vector<Rational>> solve_unique(Matrix a, std::vector<Rational> b) {
  std::size_t rows = a.size(), cols = rows ? a.front().size() : 0;
  std::vector<std::size_t> pivot_row(cols);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) throw std::invalid_argument("columns are linearly dependent");
    std::swap(a[pivot], a[r]);
    std::swap(b[pivot], b[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational factor = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= factor * a[r][j];
      b[i] -= factor * b[r];
    }
    pivot_row[c] = r;
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (b[i] != 0) return std::nullopt;
  std::vector<Rational> x(cols);
  for (std::size_t c = 0; c < cols; ++c) x[c] = b[pivot_row[c]] / a[pivot_row[c]][c];
  return x;
}

}  // namespace coercheck::linalg
