#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "coercheck/circuit.hpp"
#include "coercheck/polynomial.hpp"

namespace coercheck {

struct GeometryMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Sampled minimum of a polynomial over spheres of growing radius. A
/// heuristic divergence witness, never an input to verdicts.
struct RadialProfile {
  std::vector<double> radii;
  std::vector<double> minima;
};

namespace detail {

// Flattened term data so the scan avoids per-evaluation rational conversion.
struct CompiledPoly {
  std::size_t n_vars;
  std::vector<double> coeffs;
  std::vector<int> exponents;  // row-major, one row per term

  explicit CompiledPoly(const Polynomial& f) : n_vars(f.n_vars()) {
    for (const auto& [e, c] : f.terms()) {
      coeffs.push_back(to_double_nearest(c));
      for (std::size_t i = 0; i < n_vars; ++i) exponents.push_back(e[i]);
    }
  }

  double evaluate(const double* x) const {
    double sum = 0.0;
    const int* row = exponents.data();
    for (double c : coeffs) {
      double term = c;
      for (std::size_t i = 0; i < n_vars; ++i) {
        double base = x[i];
        for (int k = row[i]; k > 0; --k) term *= base;
      }
      sum += term;
      row += n_vars;
    }
    return sum;
  }
};

/// Unit directions: the coordinate axes, a deterministic uniform grid
/// (angle grid in the plane, Fibonacci-type spiral on the 2-sphere), and
/// seeded random directions to avoid structured blind spots.
inline std::vector<double> direction_set(std::size_t n, std::size_t samples,
                                         std::uint64_t seed) {
  std::vector<double> dirs;
  auto push = [&](const std::vector<double>& d) {
    double norm = 0;
    for (double v : d) norm += v * v;
    norm = std::sqrt(norm);
    if (norm == 0) return;
    for (double v : d) dirs.push_back(v / norm);
  };

  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> plus(n, 0.0), minus(n, 0.0);
    plus[i] = 1.0;
    minus[i] = -1.0;
    push(plus);
    push(minus);
  }

  std::size_t grid = (n == 2 || n == 3) ? samples / 2 : 0;
  if (n == 2) {
    for (std::size_t k = 0; k < grid; ++k) {
      double angle = 2.0 * M_PI * double(k) / double(grid);
      push({std::cos(angle), std::sin(angle)});
    }
  } else if (n == 3) {
    const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
    for (std::size_t k = 0; k < grid; ++k) {
      double z = 1.0 - 2.0 * (double(k) + 0.5) / double(grid);
      double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
      double angle = 2.0 * M_PI * double(k) / golden;
      push({rho * std::cos(angle), rho * std::sin(angle), z});
    }
  }

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  while (dirs.size() < samples * n) {
    std::vector<double> d(n);
    for (double& v : d) v = gauss(rng);
    push(d);
  }
  return dirs;
}

}  // namespace detail

/// Sampled sphere minima of f at each radius. Deterministic for a fixed seed;
/// the direction set is shared across radii.
inline RadialProfile radial_scan(const Polynomial& f, const std::vector<double>& radii,
                                 std::size_t samples = 4096, std::uint64_t seed = 0) {
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (radii[i] <= 0) throw std::invalid_argument("radii must be positive");
    if (i > 0 && radii[i] <= radii[i - 1])
      throw std::invalid_argument("radii must be strictly increasing");
  }
  RadialProfile profile;
  profile.radii = radii;
  std::size_t n = f.n_vars();
  if (n == 0) {
    double value = f.is_zero() ? 0.0 : to_double_nearest(f.terms().begin()->second);
    profile.minima.assign(radii.size(), value);
    return profile;
  }
  detail::CompiledPoly compiled(f);
  std::vector<double> dirs = detail::direction_set(n, samples, seed);
  std::size_t count = dirs.size() / n;
  std::vector<double> point(n);
  for (double radius : radii) {
    double minimum = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < count; ++k) {
      for (std::size_t i = 0; i < n; ++i) point[i] = radius * dirs[k * n + i];
      minimum = std::min(minimum, compiled.evaluate(point.data()));
    }
    profile.minima.push_back(minimum);
  }
  return profile;
}

/// Point on the zero manifold of a boundary circuit whose outer vertices are
/// axis powers 2k_i e_i: coordinate i is (t lambda_j / f_j)^(1/(2 k_i)) for
/// the outer term j sitting on axis i. The norm grows without bound in t.
inline std::vector<double> equality_manifold_point(const CircuitStructure& cs, double t) {
  if (t <= 0) throw std::invalid_argument("t must be positive");
  std::size_t n = cs.inner.first.size();
  if (cs.outer.size() != n)
    throw GeometryMismatch("need exactly n outer vertices (r = n-1)");
  struct AxisData {
    int half_degree;
    Rational scale;  // lambda_j / f_j
  };
  std::map<std::size_t, AxisData> axes;
  for (std::size_t j = 0; j < cs.outer.size(); ++j) {
    auto axis = cs.outer[j].first.even_axis_power();
    if (!axis) throw GeometryMismatch("outer vertex is not an axis power");
    if (!axes.emplace(axis->first, AxisData{axis->second, cs.lambdas[j] / cs.outer[j].second})
             .second)
      throw GeometryMismatch("two outer vertices on one axis");
  }
  if (axes.size() != n) throw GeometryMismatch("outer vertices do not cover every axis");

  std::vector<double> x(n);
  for (const auto& [axis, data] : axes)
    x[axis] = std::pow(t * to_double_nearest(data.scale), 1.0 / (2.0 * data.half_degree));
  return x;
}

}  // namespace coercheck
