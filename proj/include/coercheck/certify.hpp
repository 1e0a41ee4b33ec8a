#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coercheck/barycentric.hpp"
#include "coercheck/circuit.hpp"
#include "coercheck/interval.hpp"
#include "coercheck/newton.hpp"
#include "coercheck/polynomial.hpp"
#include "coercheck/verdict.hpp"

namespace coercheck {

enum class TheoremId {
  NecessaryConditions,
  GemRegularChar,
  CircuitChar,
  TheoremMain,
  Posynomial,
  None
};

inline std::string to_string(TheoremId id) {
  switch (id) {
    case TheoremId::NecessaryConditions: return "NecessaryConditions";
    case TheoremId::GemRegularChar: return "GemRegularChar";
    case TheoremId::CircuitChar: return "CircuitChar";
    case TheoremId::TheoremMain: return "TheoremMain";
    case TheoremId::Posynomial: return "Posynomial";
    case TheoremId::None: return "None";
  }
  return "None";
}

/// Pass/fail of the necessary conditions; names the first failing one.
inline std::optional<std::string> check_necessary(const NewtonAnalysis& analysis) {
  if (!analysis.c1) return "C1";
  if (!analysis.c2) return "C2";
  if (!analysis.c3) return "C3";
  return std::nullopt;
}

/// Per-vertex affine-linear bounds and margins, all in exact rationals.
struct MainCheckResult {
  bool holds = false;
  std::map<Exponent, Rational, GrlexLess> h;       // bound per vertex at infinity
  std::map<Exponent, Rational, GrlexLess> margin;  // coefficient minus bound
};

/// Affine-linear sufficiency test: every vertex coefficient must strictly
/// dominate the weighted magnitudes that the degenerate exponents push onto
/// it through the barycentric map. Exact rational arithmetic throughout; the
/// result is independent of any floating-point precision.
inline MainCheckResult theorem_main_check(const Polynomial& f, const NewtonAnalysis& analysis,
                                          const BarycentricMap& map) {
  MainCheckResult out;
  out.holds = true;
  for (const Exponent& alpha : analysis.v) {
    Rational h(0);
    for (const Exponent& alpha_star : analysis.d) {
      const Rational& coeff = f.terms().at(alpha_star);
      const BarycentricEntry& entry = map.at(alpha_star);
      if (!alpha_star.all_even())
        h += rational_abs(coeff) * entry.weight_of(alpha);
      else if (coeff < 0)
        h -= coeff * entry.weight_of(alpha);
    }
    Rational margin = f.terms().at(alpha) - h;
    if (margin <= 0) out.holds = false;
    out.h.emplace(alpha, std::move(h));
    out.margin.emplace(alpha, std::move(margin));
  }
  return out;
}

enum class CheckStatus { Holds, Fails, Borderline };

inline std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Holds: return "holds";
    case CheckStatus::Fails: return "fails";
    case CheckStatus::Borderline: return "borderline";
  }
  return "borderline";
}

/// Result of the posynomial sufficiency test: the ratio sum over degenerate
/// exponents with its certified enclosure (exact when every circuit number
/// is rational), plus the per-exponent data needed for weight certificates.
struct PosynomialResult {
  CheckStatus status = CheckStatus::Borderline;
  Interval ratio_sum;
  std::optional<Rational> exact;
  std::map<Exponent, CircuitNumber, GrlexLess> thetas;
  std::map<Exponent, Interval, GrlexLess> ratios;

  PosynomialResult() : ratio_sum(Interval::zero(kDefaultPrecision)) {}
};

/// Magnitude a degenerate exponent contributes to the ratio sum: the absolute
/// coefficient for a non-even exponent, the negative part otherwise.
inline Rational degenerate_contribution(const Exponent& alpha_star, const Rational& coeff) {
  if (!alpha_star.all_even()) return rational_abs(coeff);
  return coeff < 0 ? Rational(-coeff) : Rational(0);
}

/// Posynomial sufficiency test: the sum over degenerate exponents of their
/// contribution divided by the circuit number must fall strictly below one.
inline PosynomialResult posynomial_check(const Polynomial& f, const NewtonAnalysis& analysis,
                                         const BarycentricMap& map,
                                         mpfr_prec_t prec = kDefaultPrecision) {
  PosynomialResult out;
  out.ratio_sum = Interval::zero(prec);
  Rational exact_sum(0);
  bool all_exact = true;
  for (const Exponent& alpha_star : analysis.d) {
    Rational contribution = degenerate_contribution(alpha_star, f.terms().at(alpha_star));
    if (contribution == 0) continue;
    CircuitNumber theta = circuit_number(f, map, alpha_star, prec);
    Interval ratio = Interval::div_rational(contribution, theta.value(), prec);
    out.ratio_sum = out.ratio_sum.add(ratio);
    if (theta.exact)
      exact_sum += contribution / *theta.exact;
    else
      all_exact = false;
    out.ratios.emplace(alpha_star, std::move(ratio));
    out.thetas.emplace(alpha_star, std::move(theta));
  }
  if (all_exact) {
    out.exact = exact_sum;
    out.status = exact_sum < 1 ? CheckStatus::Holds : CheckStatus::Fails;
  } else if (out.ratio_sum.certainly_less_than(Rational(1))) {
    out.status = CheckStatus::Holds;
  } else if (out.ratio_sum.certainly_at_least(Rational(1))) {
    out.status = CheckStatus::Fails;
  } else {
    out.status = CheckStatus::Borderline;
  }
  return out;
}

struct SlackNonpositive : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Weights witnessing the posynomial test. All weights are exact rationals;
/// their sum is verifiably at most one and each dominates its ratio.
struct WeightCertificate {
  std::map<Exponent, Rational, GrlexLess> weights;
  Rational epsilon;  // rigorous lower bound on the slack 1 - ratio sum
};

/// Builds weights from a successful posynomial check. Degenerate exponents
/// split into those that need strict domination (non-even, or even with a
/// negative coefficient) and the benign rest; the slack is distributed
/// accordingly. Every emitted certificate is re-verified before returning.
inline WeightCertificate construct_weights(const Polynomial& f, const NewtonAnalysis& analysis,
                                           const BarycentricMap& map,
                                           const PosynomialResult& check) {
  if (check.status != CheckStatus::Holds)
    throw SlackNonpositive("posynomial test did not hold; no positive slack available");

  std::vector<Exponent> delta1, delta2;
  for (const Exponent& alpha_star : analysis.d) {
    const Rational& coeff = f.terms().at(alpha_star);
    if (!alpha_star.all_even() || coeff < 0)
      delta1.push_back(alpha_star);
    else
      delta2.push_back(alpha_star);
  }

  WeightCertificate out;
  bool exact = check.exact.has_value();
  out.epsilon = exact ? Rational(1) - *check.exact
                      : Rational(1) - check.ratio_sum.hi().to_rational();
  if (out.epsilon <= 0)
    throw SlackNonpositive("slack not positive at the working precision");

  // Upper bound on a member's ratio; tight in the exact case. Summing these
  // bounds never exceeds the ratio-sum upper bound used for the slack.
  auto ratio_bound = [&](const Exponent& alpha_star) -> Rational {
    if (exact) {
      Rational contribution = degenerate_contribution(alpha_star, f.terms().at(alpha_star));
      return contribution / *check.thetas.at(alpha_star).exact;
    }
    return check.ratios.at(alpha_star).hi().to_rational();
  };

  if (delta1.empty()) {
    for (const Exponent& alpha_star : analysis.d)
      out.weights.emplace(alpha_star, Rational(1) / Rational(int(analysis.d.size())));
  } else if (delta2.empty()) {
    Rational bump = out.epsilon / Rational(int(delta1.size()));
    for (const Exponent& alpha_star : delta1)
      out.weights.emplace(alpha_star, ratio_bound(alpha_star) + bump);
  } else {
    Rational bump1 = out.epsilon / (2 * Rational(int(delta1.size())));
    Rational bump2 = out.epsilon / (2 * Rational(int(delta2.size())));
    for (const Exponent& alpha_star : delta1)
      out.weights.emplace(alpha_star, ratio_bound(alpha_star) + bump1);
    for (const Exponent& alpha_star : delta2) out.weights.emplace(alpha_star, bump2);
  }

  // Verification against the circuit-number enclosures.
  Rational total(0);
  for (const auto& [alpha_star, weight] : out.weights) {
    if (weight <= 0) throw std::logic_error("weight certificate: non-positive weight");
    total += weight;
    const Rational& coeff = f.terms().at(alpha_star);
    if (alpha_star.all_even() && coeff > 0) continue;
    CircuitNumber theta = circuit_number(f, map, alpha_star, check.ratio_sum.precision());
    Rational magnitude = rational_abs(coeff);
    bool dominated = theta.exact ? (magnitude < weight * *theta.exact)
                                 : theta.value()
                                       .mul_positive_rational(weight)
                                       .certainly_greater_than(magnitude);
    if (!dominated) throw std::logic_error("weight certificate: domination check failed");
  }
  if (total > 1) throw std::logic_error("weight certificate: weights sum above one");
  return out;
}

/// Auditable outcome of the certification cascade. A Coercive or NotCoercive
/// verdict always names the deciding result and carries enough witness data
/// to re-check it independently.
struct Certificate {
  Verdict verdict = Verdict::Unknown;
  TheoremId theorem = TheoremId::None;
  bool exact = false;
  std::optional<std::string> failed_condition;
  std::optional<MainCheckResult> h_alpha;
  std::optional<PosynomialResult> ratio_sum;
  std::optional<WeightCertificate> weights;
  std::optional<CircuitDecision> circuit;
  std::optional<BarycentricMap> map;
  mpfr_prec_t precision_bits = kDefaultPrecision;
};

struct CertifyOptions {
  mpfr_prec_t precision = kDefaultPrecision;
  /// Seeds for alternative barycentric maps; the canonical map runs first.
  std::vector<std::uint64_t> map_seeds = {1, 2, 3, 4};
  /// Margin policy: precision doublings to try before reporting Borderline.
  int borderline_retries = 0;
};

/// Decision cascade. Exact decisions run before enclosure-based ones, so a
/// Borderline verdict can only arise from a genuinely transcendental
/// comparison; Unknown is an honest outcome outside the decided classes.
inline Certificate certify(const Polynomial& f, const CertifyOptions& options = {}) {
  Certificate cert;
  cert.precision_bits = options.precision;
  NewtonAnalysis analysis = analyze(f);

  if (auto failed = check_necessary(analysis)) {
    cert.verdict = Verdict::NotCoercive;
    cert.theorem = TheoremId::NecessaryConditions;
    cert.exact = true;
    cert.failed_condition = std::move(failed);
    return cert;
  }

  if (analysis.gem_regular) {
    cert.verdict = Verdict::Coercive;
    cert.theorem = TheoremId::GemRegularChar;
    cert.exact = true;
    return cert;
  }

  if (auto recognized = recognize_circuit(f)) {
    mpfr_prec_t prec = options.precision;
    CircuitDecision decision = circuit_coercive(f, *recognized.circuit, analysis, prec);
    for (int retry = 0; retry < options.borderline_retries &&
                        decision.verdict == Verdict::Borderline;
         ++retry) {
      prec *= 2;
      decision = circuit_coercive(f, *recognized.circuit, analysis, prec);
    }
    cert.verdict = decision.verdict;
    cert.theorem = TheoremId::CircuitChar;
    cert.exact = decision.exact;
    cert.circuit = std::move(decision);
    return cert;
  }

  std::vector<BarycentricMap> maps;
  maps.push_back(build_map(f, analysis));
  for (std::uint64_t seed : options.map_seeds) maps.push_back(build_map(f, analysis, seed));

  for (const BarycentricMap& map : maps) {
    MainCheckResult mc = theorem_main_check(f, analysis, map);
    if (mc.holds) {
      cert.verdict = Verdict::Coercive;
      cert.theorem = TheoremId::TheoremMain;
      cert.exact = true;
      cert.h_alpha = std::move(mc);
      cert.map = map;
      return cert;
    }
  }

  std::optional<PosynomialResult> borderline;
  std::optional<BarycentricMap> borderline_map;
  for (const BarycentricMap& map : maps) {
    mpfr_prec_t prec = options.precision;
    PosynomialResult pc = posynomial_check(f, analysis, map, prec);
    for (int retry = 0; retry < options.borderline_retries &&
                        pc.status == CheckStatus::Borderline;
         ++retry) {
      prec *= 2;
      pc = posynomial_check(f, analysis, map, prec);
    }
    if (pc.status == CheckStatus::Holds) {
      cert.verdict = Verdict::Coercive;
      cert.theorem = TheoremId::Posynomial;
      cert.exact = pc.exact.has_value();
      cert.weights = construct_weights(f, analysis, map, pc);
      cert.ratio_sum = std::move(pc);
      cert.map = map;
      return cert;
    }
    if (pc.status == CheckStatus::Borderline && !borderline) {
      borderline = std::move(pc);
      borderline_map = map;
    }
  }

  if (borderline) {
    cert.verdict = Verdict::Borderline;
    cert.theorem = TheoremId::Posynomial;
    cert.ratio_sum = std::move(borderline);
    cert.map = std::move(borderline_map);
  }
  return cert;
}

}  // namespace coercheck
