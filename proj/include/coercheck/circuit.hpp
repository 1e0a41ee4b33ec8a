#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coercheck/barycentric.hpp"
#include "coercheck/interval.hpp"
#include "coercheck/linalg.hpp"
#include "coercheck/newton.hpp"
#include "coercheck/polynomial.hpp"
#include "coercheck/verdict.hpp"

namespace coercheck {

struct NonpositiveVertexCoefficient : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A circuit polynomial: affinely independent even vertex exponents with
/// positive coefficients, plus one interior exponent with a unique strictly
/// positive barycentric representation over them.
struct CircuitStructure {
  std::vector<std::pair<Exponent, Rational>> outer;  // (vertex, coefficient), grlex-sorted
  std::pair<Exponent, Rational> inner;               // (interior exponent, coefficient)
  std::vector<Rational> lambdas;                     // barycentric weights, parallel to outer
  int r = 0;                                         // outer.size() - 1
};

/// Circuit number with a certified enclosure. `exact` is set when the value
/// is provably rational (the weighted product collapses to a perfect root).
struct CircuitNumber {
  LogValue enclosure;
  std::optional<Rational> exact;
  mpfr_prec_t precision = kDefaultPrecision;

  const Interval& value() const { return enclosure.value; }
};

namespace detail {

// Largest exponent sum we are willing to feed the perfect-root test.
inline constexpr unsigned long kExactThetaRootLimit = 64;
inline constexpr std::size_t kExactThetaBitLimit = 1 << 14;

/// If prod (base_j)^(p_j/q) is rational, returns it. The product equals
/// s^(1/q) with s = prod base_j^(p_j) rational, and s^(1/q) is rational iff
/// numerator and denominator of s are perfect q-th powers.
inline std::optional<Rational> exact_weighted_product(
    const std::vector<std::pair<Rational, Rational>>& base_and_weight) {
  Integer q(1);
  for (const auto& [base, weight] : base_and_weight)
    mpz_lcm(q.get_mpz_t(), q.get_mpz_t(), weight.get_den().get_mpz_t());
  if (q > kExactThetaRootLimit) return std::nullopt;
  unsigned long root = q.get_ui();

  Rational s(1);
  std::size_t bits = 0;
  for (const auto& [base, weight] : base_and_weight) {
    Rational p = weight * Rational(q);
    if (!mpz_fits_ulong_p(mpq_numref(p.get_mpq_t()))) return std::nullopt;
    unsigned long power = mpz_get_ui(mpq_numref(p.get_mpq_t()));
    Integer base_num = base.get_num(), base_den = base.get_den();
    bits += power * (mpz_sizeinbase(base_num.get_mpz_t(), 2) +
                     mpz_sizeinbase(base_den.get_mpz_t(), 2));
    if (bits > kExactThetaBitLimit) return std::nullopt;
    Rational factor;
    mpz_pow_ui(mpq_numref(factor.get_mpq_t()), base_num.get_mpz_t(), power);
    mpz_pow_ui(mpq_denref(factor.get_mpq_t()), base_den.get_mpz_t(), power);
    factor.canonicalize();
    s *= factor;
  }
  Integer s_num = s.get_num(), s_den = s.get_den();
  Integer num_root, den_root;
  if (!mpz_root(num_root.get_mpz_t(), s_num.get_mpz_t(), root)) return std::nullopt;
  if (!mpz_root(den_root.get_mpz_t(), s_den.get_mpz_t(), root)) return std::nullopt;
  Rational theta(num_root, den_root);
  theta.canonicalize();
  return theta;
}

/// Enclosure of prod (coeff_j / lambda_j)^(lambda_j) for positive inputs,
/// computed as exp of the weighted log sum with directed rounding.
inline CircuitNumber weighted_product(const std::vector<std::pair<Rational, Rational>>& terms,
                                      mpfr_prec_t prec) {
  Interval log_sum = Interval::zero(prec);
  std::vector<std::pair<Rational, Rational>> bases;
  bases.reserve(terms.size());
  for (const auto& [coeff, lambda] : terms) {
    if (coeff <= 0)
      throw NonpositiveVertexCoefficient("circuit number undefined: coefficient not positive");
    if (lambda <= 0) throw std::domain_error("barycentric weight not positive");
    Rational base = coeff / lambda;
    bases.emplace_back(base, lambda);
    Interval term = Interval::log_of_rational(base, prec).mul_positive_rational(lambda);
    log_sum = log_sum.add(term);
  }
  Interval value = log_sum.exp();
  return {LogValue{std::move(log_sum), std::move(value)}, exact_weighted_product(bases), prec};
}

}  // namespace detail

/// Circuit number of a non-vertex exponent with respect to a barycentric map.
inline CircuitNumber circuit_number(const Polynomial& f, const BarycentricMap& map,
                                    const Exponent& alpha_star,
                                    mpfr_prec_t prec = kDefaultPrecision) {
  auto it = map.entries.find(alpha_star);
  if (it == map.entries.end())
    throw std::invalid_argument("exponent " + alpha_star.to_string() + " not in the map");
  const BarycentricEntry& entry = it->second;
  std::vector<std::pair<Rational, Rational>> terms;
  terms.reserve(entry.support.size());
  for (std::size_t j = 0; j < entry.support.size(); ++j)
    terms.emplace_back(f.coeff(entry.support[j]), entry.weights[j]);
  return detail::weighted_product(terms, prec);
}

/// Circuit number from the structure's own barycentric data.
inline CircuitNumber circuit_number(const CircuitStructure& cs,
                                    mpfr_prec_t prec = kDefaultPrecision) {
  std::vector<std::pair<Rational, Rational>> terms;
  terms.reserve(cs.outer.size());
  for (std::size_t j = 0; j < cs.outer.size(); ++j)
    terms.emplace_back(cs.outer[j].second, cs.lambdas[j]);
  return detail::weighted_product(terms, prec);
}

struct RecognitionResult {
  std::optional<CircuitStructure> circuit;
  std::string reason;  // first violated condition when not a circuit

  explicit operator bool() const { return circuit.has_value(); }
};

/// Decides whether f is a circuit polynomial; all conditions checked exactly.
inline RecognitionResult recognize_circuit(const Polynomial& f) {
  ExponentSet support = f.support();
  if (support.size() < 2) return {std::nullopt, "fewer than two terms"};

  ExponentSet vertices = hull_vertices(support);
  if (support.size() != vertices.size() + 1)
    return {std::nullopt, "support is not the vertex set plus exactly one interior exponent"};

  CircuitStructure cs;
  for (const Exponent& e : support) {
    if (vertices.contains(e))
      cs.outer.emplace_back(e, f.coeff(e));
    else
      cs.inner = {e, f.coeff(e)};
  }
  cs.r = static_cast<int>(cs.outer.size()) - 1;
  if (cs.outer.size() > f.n_vars() + 1)
    return {std::nullopt, "more than n+1 vertices"};

  for (const auto& [e, c] : cs.outer) {
    if (!e.all_even()) return {std::nullopt, "vertex exponent with an odd entry"};
  }
  for (const auto& [e, c] : cs.outer) {
    if (c <= 0) return {std::nullopt, "vertex coefficient not positive"};
  }

  std::size_t n = f.n_vars();
  linalg::Matrix lifted(n + 1, std::vector<Rational>(cs.outer.size()));
  for (std::size_t j = 0; j < cs.outer.size(); ++j) {
    for (std::size_t i = 0; i < n; ++i) lifted[i][j] = cs.outer[j].first[i];
    lifted[n][j] = 1;
  }
  if (linalg::rank(lifted) != cs.outer.size())
    return {std::nullopt, "vertices affinely dependent"};

  auto lambdas = linalg::solve_unique(lifted, detail::lifted_point(cs.inner.first, n));
  if (!lambdas)
    return {std::nullopt, "interior exponent outside the affine span of the vertices"};
  for (const Rational& l : *lambdas)
    if (l <= 0) return {std::nullopt, "barycentric representation not strictly positive"};
  cs.lambdas = std::move(*lambdas);
  return {std::move(cs), ""};
}

enum class NonnegStatus { Nonnegative, NotNonnegative, Borderline };

inline std::string to_string(NonnegStatus s) {
  switch (s) {
    case NonnegStatus::Nonnegative: return "Nonnegative";
    case NonnegStatus::NotNonnegative: return "NotNonnegative";
    case NonnegStatus::Borderline: return "Borderline";
  }
  return "Borderline";
}

struct NonnegResult {
  NonnegStatus status = NonnegStatus::Borderline;
  CircuitNumber theta;
  bool exact = false;  // decided in rational arithmetic
};

/// Global nonnegativity of a circuit polynomial: the inner coefficient is
/// compared against the circuit number (non-strict inequalities; the sign
/// matters only for an all-even inner exponent).
inline NonnegResult circuit_nonnegative(const CircuitStructure& cs,
                                        mpfr_prec_t prec = kDefaultPrecision) {
  CircuitNumber theta = circuit_number(cs, prec);
  const Rational& inner = cs.inner.second;
  bool inner_even = cs.inner.first.all_even();

  if (inner_even && inner > 0) return {NonnegStatus::Nonnegative, std::move(theta), true};

  Rational magnitude = rational_abs(inner);
  if (theta.exact) {
    bool ok = magnitude <= *theta.exact;
    return {ok ? NonnegStatus::Nonnegative : NonnegStatus::NotNonnegative, std::move(theta), true};
  }
  if (theta.value().certainly_at_least(magnitude))
    return {NonnegStatus::Nonnegative, std::move(theta), false};
  if (theta.value().certainly_less_than(magnitude))
    return {NonnegStatus::NotNonnegative, std::move(theta), false};
  return {NonnegStatus::Borderline, std::move(theta), false};
}

struct CircuitDecision {
  Verdict verdict = Verdict::Borderline;
  bool exact = false;
  std::string detail;  // which case decided
  std::optional<CircuitNumber> theta;
};

/// Coercivity characterization for circuit polynomials. The verdict is exact
/// except when a strict comparison lands inside the circuit-number enclosure.
inline CircuitDecision circuit_coercive(const Polynomial& f, const CircuitStructure& cs,
                                        const NewtonAnalysis& analysis,
                                        mpfr_prec_t prec = kDefaultPrecision) {
  if (!analysis.c1) return {Verdict::NotCoercive, true, "necessary condition C1 fails", {}};
  if (!analysis.c2) return {Verdict::NotCoercive, true, "necessary condition C2 fails", {}};
  if (!analysis.c3) return {Verdict::NotCoercive, true, "necessary condition C3 fails", {}};

  int n = static_cast<int>(f.n_vars());
  if (cs.r <= n - 2)
    return {Verdict::NotCoercive, true, "vertex-count necessary condition: r <= n-2", {}};
  if (cs.r == n) return {Verdict::Coercive, true, "full-dimensional simplex (r = n)", {}};

  // r = n-1: strict comparison of the inner coefficient with the circuit
  // number decides.
  const Rational& inner = cs.inner.second;
  bool inner_even = cs.inner.first.all_even();
  CircuitNumber theta = circuit_number(cs, prec);

  if (inner_even && inner > 0)
    return {Verdict::Coercive, true, "inner coefficient positive on an even exponent",
            std::move(theta)};

  Rational magnitude = rational_abs(inner);
  if (theta.exact) {
    bool strict = magnitude < *theta.exact;
    return {strict ? Verdict::Coercive : Verdict::NotCoercive, true,
            strict ? "strict circuit-number inequality holds (exact)"
                   : "circuit-number inequality violated or tight (exact)",
            std::move(theta)};
  }
  if (theta.value().certainly_greater_than(magnitude))
    return {Verdict::Coercive, false, "strict circuit-number inequality holds", std::move(theta)};
  if (theta.value().certainly_at_most(magnitude))
    return {Verdict::NotCoercive, false, "circuit-number inequality violated", std::move(theta)};
  return {Verdict::Borderline, false, "comparison inside the circuit-number enclosure",
          std::move(theta)};
}

}  // namespace coercheck
