#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include "coercheck/polynomial.hpp"
#include "coercheck/simplex.hpp"

namespace coercheck {

/// Vertex structure of the Newton polytope at infinity and the induced
/// partition of the support into vertices, degenerate exponents (lying on a
/// hull face that misses the origin) and the rest.
struct NewtonAnalysis {
  ExponentSet v0;  // vertices of conv(A(f) ∪ {0}); always contains the origin
  ExponentSet v;   // v0 without the origin
  ExponentSet d;   // gem-degenerate exponents
  ExponentSet r;   // remaining exponents, A(f) \ (v ∪ d)
  bool c1 = false;  // every vertex at infinity has all-even entries
  bool c2 = false;  // every vertex at infinity has a positive coefficient
  bool c3 = false;  // every axis carries a vertex of the form 2k*e_i
  std::map<std::size_t, Exponent> v_ess;  // axis -> essential vertex, filled when c3 holds
  bool gem_regular = false;               // d empty
};

namespace detail {

// Columns are the lifted points (p; 1); the last row forces convex weights
// to sum to one.
inline std::vector<std::vector<Rational>> lifted_columns(const std::vector<Exponent>& points,
                                                         std::size_t n_vars) {
  std::vector<std::vector<Rational>> rows(n_vars + 1, std::vector<Rational>(points.size()));
  for (std::size_t j = 0; j < points.size(); ++j) {
    for (std::size_t i = 0; i < n_vars; ++i) rows[i][j] = points[j][i];
    rows[n_vars][j] = 1;
  }
  return rows;
}

inline std::vector<Rational> lifted_point(const Exponent& p, std::size_t n_vars) {
  std::vector<Rational> rhs(n_vars + 1);
  for (std::size_t i = 0; i < n_vars; ++i) rhs[i] = p[i];
  rhs[n_vars] = 1;
  return rhs;
}

}  // namespace detail

/// True when p lies in the convex hull of `points`, by exact-LP feasibility.
inline bool in_convex_hull(const Exponent& p, const std::vector<Exponent>& points) {
  if (points.empty()) return false;
  std::size_t n = p.size();
  auto result = solve_feasibility(detail::lifted_columns(points, n), detail::lifted_point(p, n));
  return result.status == LpStatus::Optimal;
}

/// Vertices of conv(points): p is a vertex iff it is not a convex combination
/// of the other points. One exact feasibility LP per point.
inline ExponentSet hull_vertices(const ExponentSet& points) {
  ExponentSet vertices;
  for (const Exponent& p : points) {
    std::vector<Exponent> others;
    others.reserve(points.size() - 1);
    for (const Exponent& q : points)
      if (!(q == p)) others.push_back(q);
    if (!in_convex_hull(p, others)) vertices.insert(p);
  }
  return vertices;
}

/// Vertices of the Newton polytope at infinity; callers pass A(f) ∪ {origin}.
inline ExponentSet vertex_set(const ExponentSet& a0) { return hull_vertices(a0); }

/// Largest weight the origin can take in a convex representation of p over
/// `v0`. Zero exactly when p lies on a face of the hull avoiding the origin.
inline Rational max_origin_weight(const Exponent& p, const ExponentSet& v0) {
  std::vector<Exponent> columns(v0.begin(), v0.end());
  std::size_t n = p.size();
  std::vector<Rational> cost(columns.size(), Rational(0));
  for (std::size_t j = 0; j < columns.size(); ++j)
    if (columns[j].is_origin()) cost[j] = -1;  // maximize via minimizing the negation
  auto result =
      solve_lp(detail::lifted_columns(columns, n), detail::lifted_point(p, n), std::move(cost));
  if (result.status != LpStatus::Optimal)
    throw std::logic_error("infeasible representation: point outside the hull of its vertices");
  return -result.objective;
}

/// Gem-degenerate exponents of f: non-vertex support points whose every
/// convex representation over v0 gives the origin weight zero.
inline ExponentSet gem_degenerate_set(const Polynomial& f, const ExponentSet& v0) {
  ExponentSet degenerate;
  for (const auto& [e, c] : f.terms()) {
    if (e.is_origin() || v0.contains(e)) continue;
    if (max_origin_weight(e, v0) == 0) degenerate.insert(e);
  }
  return degenerate;
}

/// Full Newton-polytope-at-infinity analysis of a polynomial.
inline NewtonAnalysis analyze(const Polynomial& f) {
  NewtonAnalysis out;
  ExponentSet a0 = f.support();
  a0.insert(Exponent::origin(f.n_vars()));
  out.v0 = vertex_set(a0);
  for (const Exponent& e : out.v0)
    if (!e.is_origin()) out.v.insert(e);
  out.d = gem_degenerate_set(f, out.v0);
  for (const auto& [e, c] : f.terms())
    if (!out.v.contains(e) && !out.d.contains(e)) out.r.insert(e);
  out.gem_regular = out.d.empty();

  if (out.v.empty()) return out;  // constant or zero: all condition flags stay false

  out.c1 = true;
  out.c2 = true;
  for (const Exponent& e : out.v) {
    if (!e.all_even()) out.c1 = false;
    if (f.coeff(e) <= 0) out.c2 = false;
  }
  std::map<std::size_t, Exponent> axis_vertices;
  for (const Exponent& e : out.v)
    if (auto axis = e.even_axis_power()) axis_vertices.emplace(axis->first, e);
  if (axis_vertices.size() == f.n_vars()) {
    out.c3 = true;
    out.v_ess = std::move(axis_vertices);
  }
  return out;
}

}  // namespace coercheck
