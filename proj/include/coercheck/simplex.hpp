#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "coercheck/rational.hpp"

namespace coercheck {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational objective;       // c^T x at the optimum
  std::vector<Rational> x;  // primal solution, one entry per column
};

namespace detail {

/// Two-phase dense simplex over exact rationals, minimizing c^T x subject to
/// A x = b, x >= 0. Bland's anti-cycling rule with the caller's column order
/// makes every run deterministic and terminating.
class SimplexSolver {
 public:
  SimplexSolver(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                std::vector<Rational> c)
      : n_(c.size()), tableau_(std::move(a)), rhs_(std::move(b)), cost_(std::move(c)) {
    if (tableau_.size() != rhs_.size()) throw std::invalid_argument("row count mismatch");
    for (const auto& row : tableau_)
      if (row.size() != n_) throw std::invalid_argument("column count mismatch");
  }

  LpResult solve() {
    const std::size_t m = tableau_.size();
    for (std::size_t i = 0; i < m; ++i) {
      if (rhs_[i] < 0) {
        rhs_[i] = -rhs_[i];
        for (auto& v : tableau_[i]) v = -v;
      }
      // artificial columns form the identity start basis
      for (std::size_t k = 0; k < m; ++k) tableau_[i].push_back(Rational(i == k ? 1 : 0));
      basis_.push_back(n_ + i);
    }

    // Phase 1: minimize the sum of artificials.
    reduced_.assign(n_ + m, Rational(0));
    objective_ = 0;
    for (std::size_t i = 0; i < m; ++i) {
      objective_ += rhs_[i];
      for (std::size_t j = 0; j < n_; ++j) reduced_[j] -= tableau_[i][j];
    }
    run_pivots();
    if (objective_ > 0) return {LpStatus::Infeasible, Rational(0), {}};
    evict_artificials();

    // Phase 2: the real objective from the feasible basis.
    reduced_.assign(n_ + m, Rational(0));
    objective_ = 0;
    for (std::size_t j = 0; j < n_; ++j) reduced_[j] = cost_[j];
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (basis_[i] >= n_) continue;  // redundant-row artificial pinned at zero
      const Rational& cb = cost_[basis_[i]];
      if (cb == 0) continue;
      objective_ += cb * rhs_[i];
      for (std::size_t j = 0; j < n_; ++j) reduced_[j] -= cb * tableau_[i][j];
    }
    if (!run_pivots()) return {LpStatus::Unbounded, Rational(0), {}};

    LpResult result{LpStatus::Optimal, objective_, std::vector<Rational>(n_, Rational(0))};
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (basis_[i] < n_) result.x[basis_[i]] = rhs_[i];
    return result;
  }

 private:
  // Returns false when the problem is unbounded in the current phase.
  // Artificial columns never re-enter the basis once they leave.
  bool run_pivots() {
    while (true) {
      std::size_t entering = 0;
      bool found = false;
      for (std::size_t j = 0; j < n_; ++j) {
        if (reduced_[j] < 0) {
          entering = j;
          found = true;
          break;  // Bland: smallest eligible index
        }
      }
      if (!found) return true;

      std::size_t leaving = basis_.size();
      Rational best_ratio;
      for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (tableau_[i][entering] <= 0) continue;
        Rational ratio = rhs_[i] / tableau_[i][entering];
        if (leaving == basis_.size() || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (leaving == basis_.size()) return false;
      pivot(leaving, entering);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    Rational inv = 1 / tableau_[row][col];
    for (auto& v : tableau_[row]) v *= inv;
    rhs_[row] *= inv;
    tableau_[row][col] = 1;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (i == row || tableau_[i][col] == 0) continue;
      Rational factor = tableau_[i][col];
      for (std::size_t j = 0; j < tableau_[i].size(); ++j)
        tableau_[i][j] -= factor * tableau_[row][j];
      rhs_[i] -= factor * rhs_[row];
      tableau_[i][col] = 0;
    }
    if (reduced_[col] != 0) {
      Rational factor = reduced_[col];
      for (std::size_t j = 0; j < reduced_.size(); ++j)
        reduced_[j] -= factor * tableau_[row][j];
      objective_ += factor * rhs_[row];
      reduced_[col] = 0;
    }
    basis_[row] = col;
  }

  // After phase 1 every artificial is at zero; swap them for structural
  // columns where possible. A row with no structural pivot is redundant and
  // its artificial stays basic at zero, barred from re-entering.
  void evict_artificials() {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (basis_[i] < n_) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (tableau_[i][j] != 0) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  std::size_t n_;
  std::vector<std::vector<Rational>> tableau_;
  std::vector<Rational> rhs_;
  std::vector<Rational> cost_;
  std::vector<Rational> reduced_;
  std::vector<std::size_t> basis_;
  Rational objective_;
};

}  // namespace detail

/// Minimizes c^T x subject to A x = b, x >= 0.
inline LpResult solve_lp(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                         std::vector<Rational> c) {
  return detail::SimplexSolver(std::move(a), std::move(b), std::move(c)).solve();
}

/// Feasibility of A x = b, x >= 0; on success x is a basic feasible solution,
/// so the columns of its positive support are linearly independent.
inline LpResult solve_feasibility(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  std::vector<Rational> c(a.empty() ? 0 : a.front().size(), Rational(0));
  return solve_lp(std::move(a), std::move(b), std::move(c));
}

}  // namespace coercheck
