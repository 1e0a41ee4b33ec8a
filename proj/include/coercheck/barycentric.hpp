#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "coercheck/linalg.hpp"
#include "coercheck/newton.hpp"
#include "coercheck/polynomial.hpp"
#include "coercheck/simplex.hpp"

namespace coercheck {

struct NotInHull : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One minimal vertex representation: an affinely independent support with
/// strictly positive weights summing to one.
struct BarycentricEntry {
  std::vector<Exponent> support;  // sorted grlex
  std::vector<Rational> weights;  // parallel to support, all > 0

  Rational weight_of(const Exponent& e) const {
    for (std::size_t i = 0; i < support.size(); ++i)
      if (support[i] == e) return weights[i];
    return Rational(0);
  }

  bool contains_origin() const {
    for (const Exponent& e : support)
      if (e.is_origin()) return true;
    return false;
  }
};

/// Minimal barycentric coordinates for every non-vertex support point.
/// Not unique in general; the seed records which column order produced it.
struct BarycentricMap {
  std::map<Exponent, BarycentricEntry, GrlexLess> entries;
  std::optional<std::uint64_t> seed;  // nullopt: canonical grlex column order

  const BarycentricEntry& at(const Exponent& alpha_star) const { return entries.at(alpha_star); }
};

/// Writes alpha_star as a convex combination of an affinely independent
/// subset of v0 with strictly positive weights. The positive support of a
/// basic feasible solution has linearly independent lifted columns, which is
/// exactly affine independence, so a phase-1 BFS realizes minimality.
/// Deterministic for a fixed column order.
inline BarycentricEntry minimal_barycentric(const Exponent& alpha_star, const ExponentSet& v0,
                                            std::optional<std::uint64_t> seed = std::nullopt) {
  if (v0.contains(alpha_star)) return {{alpha_star}, {Rational(1)}};

  std::vector<Exponent> columns(v0.begin(), v0.end());
  if (seed) {
    std::mt19937_64 rng(*seed);
    std::shuffle(columns.begin(), columns.end(), rng);
  }
  std::size_t n = alpha_star.size();
  auto result = solve_feasibility(detail::lifted_columns(columns, n),
                                  detail::lifted_point(alpha_star, n));
  if (result.status != LpStatus::Optimal)
    throw NotInHull("exponent " + alpha_star.to_string() + " outside the vertex hull");

  std::vector<std::pair<Exponent, Rational>> positive;
  for (std::size_t j = 0; j < columns.size(); ++j)
    if (result.x[j] > 0) positive.emplace_back(columns[j], result.x[j]);
  std::sort(positive.begin(), positive.end(),
            [](const auto& a, const auto& b) { return GrlexLess{}(a.first, b.first); });

  BarycentricEntry entry;
  for (auto& [e, w] : positive) {
    entry.support.push_back(e);
    entry.weights.push_back(w);
  }
  return entry;
}

/// Entries for every support point of f that is not a hull vertex.
inline BarycentricMap build_map(const Polynomial& f, const NewtonAnalysis& analysis,
                                std::optional<std::uint64_t> pivot_seed = std::nullopt) {
  BarycentricMap map;
  map.seed = pivot_seed;
  for (const auto& [e, c] : f.terms()) {
    if (analysis.v0.contains(e)) continue;
    map.entries.emplace(e, minimal_barycentric(e, analysis.v0, pivot_seed));
  }
  return map;
}

/// Exact check of the minimal-representation conditions: positive weights on
/// an affinely independent support, summing to one, reproducing alpha_star.
inline bool is_valid_barycentric_entry(const Exponent& alpha_star, const BarycentricEntry& entry,
                                       const ExponentSet& v0) {
  if (entry.support.empty() || entry.support.size() != entry.weights.size()) return false;
  std::size_t n = alpha_star.size();
  Rational weight_sum(0);
  std::vector<Rational> combo(n, Rational(0));
  for (std::size_t i = 0; i < entry.support.size(); ++i) {
    if (!v0.contains(entry.support[i])) return false;
    if (entry.weights[i] <= 0) return false;
    weight_sum += entry.weights[i];
    for (std::size_t k = 0; k < n; ++k) combo[k] += entry.weights[i] * entry.support[i][k];
  }
  if (weight_sum != 1) return false;
  for (std::size_t k = 0; k < n; ++k)
    if (combo[k] != alpha_star[k]) return false;
  // Affine independence: the lifted support matrix has full column rank.
  linalg::Matrix lifted(n + 1, std::vector<Rational>(entry.support.size()));
  for (std::size_t j = 0; j < entry.support.size(); ++j) {
    for (std::size_t k = 0; k < n; ++k) lifted[k][j] = entry.support[j][k];
    lifted[n][j] = 1;
  }
  return linalg::rank(lifted) == entry.support.size();
}

}  // namespace coercheck
