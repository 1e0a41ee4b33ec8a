#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "coercheck/certify.hpp"
#include "coercheck/json_io.hpp"
#include "coercheck/parse.hpp"
#include "support/generators.hpp"

using namespace coercheck;

namespace {
std::vector<std::string> xy() { return {"x", "y"}; }

Polynomial symmetric_quartic(const Rational& a, const Rational& b) {
  return Polynomial::from_terms(
      2,
      {{Exponent{4, 0}, Rational(1)}, {Exponent{3, 1}, a}, {Exponent{1, 3}, b},
       {Exponent{0, 4}, Rational(1)}},
      xy());
}
}  // namespace

TEST_CASE("necessary conditions name the first failure") {
  CHECK_FALSE(check_necessary(analyze(parse_polynomial("x^2 + y^2", xy()))));
  CHECK(check_necessary(analyze(parse_polynomial("x^4*y^2 + x^2*y^4 - 3*x^2*y^2 + 1", xy()))) ==
        "C3");
  CHECK(check_necessary(analyze(parse_polynomial("-x^2 + y^2", xy()))) == "C2");
  CHECK(check_necessary(analyze(parse_polynomial("x^3 + y^2", xy()))) == "C1");
  CHECK(check_necessary(analyze(parse_polynomial("x^2 - x^2", {{"x"}}))) == "C1");
}

TEST_CASE("affine-linear test on the symmetric quartic family") {
  SECTION("inside the hexagon but outside the rhombus") {
    Polynomial g = symmetric_quartic(parse_rational("0.95"), parse_rational("0.95"));
    NewtonAnalysis analysis = analyze(g);
    MainCheckResult mc = theorem_main_check(g, analysis, build_map(g, analysis));
    CHECK(mc.holds);
    CHECK(mc.h.at(Exponent{4, 0}) == make_rational(19, 20));
    CHECK(mc.h.at(Exponent{0, 4}) == make_rational(19, 20));
    CHECK(mc.margin.at(Exponent{4, 0}) == make_rational(1, 20));
  }
  SECTION("outside the hexagon") {
    Polynomial g = Polynomial::from_terms(2, {{Exponent{4, 0}, Rational(1)},
                                              {Exponent{3, 1}, parse_rational("1.6")},
                                              {Exponent{0, 4}, Rational(1)}},
                                          xy());
    NewtonAnalysis analysis = analyze(g);
    MainCheckResult mc = theorem_main_check(g, analysis, build_map(g, analysis));
    CHECK_FALSE(mc.holds);
    CHECK(mc.h.at(Exponent{4, 0}) == make_rational(6, 5));
    CHECK(mc.margin.at(Exponent{4, 0}) == make_rational(-1, 5));
    CHECK(mc.h.at(Exponent{0, 4}) == make_rational(2, 5));
  }
  SECTION("gem regular polynomials have zero bounds") {
    Polynomial f = parse_polynomial("x^2 + 7*y^4", xy());
    NewtonAnalysis analysis = analyze(f);
    MainCheckResult mc = theorem_main_check(f, analysis, build_map(f, analysis));
    CHECK(mc.holds);
    for (const auto& [alpha, h] : mc.h) CHECK(h == 0);
  }
}

TEST_CASE("posynomial test on the symmetric quartic family") {
  SECTION("ratio sum above one") {
    Polynomial g = symmetric_quartic(parse_rational("0.95"), parse_rational("0.95"));
    NewtonAnalysis analysis = analyze(g);
    PosynomialResult pc = posynomial_check(g, analysis, build_map(g, analysis));
    CHECK(pc.status == CheckStatus::Fails);
    CHECK(pc.ratio_sum.certainly_greater_than(parse_rational("1.0827")));
    CHECK(pc.ratio_sum.certainly_less_than(parse_rational("1.0828")));
  }
  SECTION("ratio sum below one") {
    Polynomial g = Polynomial::from_terms(2, {{Exponent{4, 0}, Rational(1)},
                                              {Exponent{3, 1}, parse_rational("1.6")},
                                              {Exponent{0, 4}, Rational(1)}},
                                          xy());
    NewtonAnalysis analysis = analyze(g);
    PosynomialResult pc = posynomial_check(g, analysis, build_map(g, analysis));
    CHECK(pc.status == CheckStatus::Holds);
    CHECK(pc.ratio_sum.certainly_greater_than(parse_rational("0.9117")));
    CHECK(pc.ratio_sum.certainly_less_than(parse_rational("0.9118")));
  }
  SECTION("empty degenerate set holds exactly") {
    Polynomial f = parse_polynomial("x^2 + y^2", xy());
    NewtonAnalysis analysis = analyze(f);
    PosynomialResult pc = posynomial_check(f, analysis, build_map(f, analysis));
    CHECK(pc.status == CheckStatus::Holds);
    REQUIRE(pc.exact.has_value());
    CHECK(*pc.exact == 0);
  }
  SECTION("exact boundary fails, not borderline") {
    // theta = 2 exactly and the contribution is 2: the sum is exactly one.
    Polynomial f = parse_polynomial("x^4 + y^4 - 2*x^2*y^2", xy());
    NewtonAnalysis analysis = analyze(f);
    PosynomialResult pc = posynomial_check(f, analysis, build_map(f, analysis));
    CHECK(pc.status == CheckStatus::Fails);
    REQUIRE(pc.exact.has_value());
    CHECK(*pc.exact == 1);
  }
}

TEST_CASE("weight certificates") {
  SECTION("two odd degenerate exponents split the slack") {
    Polynomial g = symmetric_quartic(parse_rational("0.4"), parse_rational("0.4"));
    NewtonAnalysis analysis = analyze(g);
    BarycentricMap map = build_map(g, analysis);
    PosynomialResult pc = posynomial_check(g, analysis, map);
    REQUIRE(pc.status == CheckStatus::Holds);
    WeightCertificate wc = construct_weights(g, analysis, map, pc);
    REQUIRE(wc.weights.size() == 2);
    Rational total(0);
    for (const auto& [alpha_star, omega] : wc.weights) {
      CHECK(omega > parse_rational("0.49"));
      CHECK(omega < parse_rational("0.51"));
      total += omega;
    }
    CHECK(total <= 1);
    CHECK(wc.epsilon > parse_rational("0.544"));
    CHECK(wc.epsilon < parse_rational("0.545"));
  }
  SECTION("single benign degenerate exponent gets weight one") {
    Polynomial f = parse_polynomial("x^4 + x^2*y^2 + y^4", xy());
    NewtonAnalysis analysis = analyze(f);
    BarycentricMap map = build_map(f, analysis);
    PosynomialResult pc = posynomial_check(f, analysis, map);
    REQUIRE(pc.status == CheckStatus::Holds);
    WeightCertificate wc = construct_weights(f, analysis, map, pc);
    REQUIRE(wc.weights.size() == 1);
    CHECK(wc.weights.at(Exponent{2, 2}) == 1);
  }
  SECTION("mixed strict and benign members") {
    Polynomial f = parse_polynomial("x^6 + y^6 + x^4*y^2 - 0.1*x^2*y^4", xy());
    NewtonAnalysis analysis = analyze(f);
    REQUIRE(analysis.d.size() == 2);
    BarycentricMap map = build_map(f, analysis);
    PosynomialResult pc = posynomial_check(f, analysis, map);
    REQUIRE(pc.status == CheckStatus::Holds);
    WeightCertificate wc = construct_weights(f, analysis, map, pc);
    REQUIRE(wc.weights.size() == 2);
    Rational total(0);
    for (const auto& [alpha_star, omega] : wc.weights) {
      CHECK(omega > 0);
      total += omega;
    }
    CHECK(total <= 1);
  }
  SECTION("construction requires a successful check") {
    Polynomial g = symmetric_quartic(Rational(1), Rational(1));
    NewtonAnalysis analysis = analyze(g);
    BarycentricMap map = build_map(g, analysis);
    PosynomialResult pc = posynomial_check(g, analysis, map);
    REQUIRE(pc.status == CheckStatus::Fails);
    CHECK_THROWS_AS(construct_weights(g, analysis, map, pc), SlackNonpositive);
  }
}

TEST_CASE("certification cascade") {
  SECTION("necessary-condition failures are exact") {
    Certificate c = certify(parse_polynomial("x^4*y^2 + x^2*y^4 - 3*x^2*y^2 + 1", xy()));
    CHECK(c.verdict == Verdict::NotCoercive);
    CHECK(c.theorem == TheoremId::NecessaryConditions);
    CHECK(c.exact);
    CHECK(c.failed_condition == "C3");
  }
  SECTION("gem regular inputs close immediately") {
    Certificate c = certify(parse_polynomial("x^2 + y^2", xy()));
    CHECK(c.verdict == Verdict::Coercive);
    CHECK(c.theorem == TheoremId::GemRegularChar);
    CHECK(c.exact);
  }
  SECTION("circuits use the characterization") {
    Certificate inside = certify(parse_polynomial("x^4 + 1.6*x^3*y + y^4", xy()));
    CHECK(inside.verdict == Verdict::Coercive);
    CHECK(inside.theorem == TheoremId::CircuitChar);

    Certificate outside = certify(parse_polynomial("x^4 + 2*x^3*y + y^4", xy()));
    CHECK(outside.verdict == Verdict::NotCoercive);
    CHECK(outside.theorem == TheoremId::CircuitChar);
  }
  SECTION("affine-linear certificate where the posynomial fails") {
    Certificate c = certify(parse_polynomial("x^4 + 0.95*x^3*y + 0.95*x*y^3 + y^4", xy()));
    CHECK(c.verdict == Verdict::Coercive);
    CHECK(c.theorem == TheoremId::TheoremMain);
    CHECK(c.exact);
    REQUIRE(c.h_alpha.has_value());
    CHECK(c.h_alpha->holds);
    REQUIRE(c.map.has_value());
  }
  SECTION("posynomial certificate where the affine-linear test fails") {
    // Rhombus minus hexagon: |a| + |b| < theta but 3|a| + |b| > 4.
    Certificate c = certify(parse_polynomial("x^4 + 1.5*x^3*y + 0.2*x*y^3 + y^4", xy()));
    CHECK(c.verdict == Verdict::Coercive);
    CHECK(c.theorem == TheoremId::Posynomial);
    REQUIRE(c.weights.has_value());
    REQUIRE(c.ratio_sum.has_value());
  }
  SECTION("unknown is an honest outcome") {
    Certificate c = certify(symmetric_quartic(parse_rational("1.9"), parse_rational("1.9")));
    CHECK(c.verdict == Verdict::Unknown);
    CHECK(c.theorem == TheoremId::None);
  }
  SECTION("constants and the zero polynomial are never coercive") {
    CHECK(certify(parse_polynomial("x^2 - x^2", {{"x"}})).verdict == Verdict::NotCoercive);
    CHECK(certify(parse_polynomial("5", {{"x"}})).verdict == Verdict::NotCoercive);
  }
}

TEST_CASE("verdicts are invariant under scaling and permutation") {
  std::mt19937_64 rng(5511);
  CertifyOptions options;
  options.map_seeds = {1, 2};
  for (int trial = 0; trial < 12; ++trial) {
    Polynomial f = test_support::random_polynomial(rng);
    Certificate base = certify(f, options);
    for (const Rational& c : {make_rational(1, 3), Rational(7)}) {
      Certificate scaled = certify(f.scaled(c), options);
      CAPTURE(f.render(), c.get_str());
      CHECK(scaled.verdict == base.verdict);
    }
    std::vector<std::size_t> perm(f.n_vars());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = perm.size() - 1 - i;
    Certificate permuted = certify(f.permuted(perm), options);
    CHECK(permuted.verdict == base.verdict);
  }
}

TEST_CASE("decided classes never report unknown") {
  std::mt19937_64 rng(616);
  for (int trial = 0; trial < 10; ++trial) {
    auto instance = test_support::random_circuit(rng, make_rational(1, 2));
    if (!instance) continue;
    Certificate c = certify(instance->poly);
    CHECK(c.verdict != Verdict::Unknown);
  }
}

TEST_CASE("certificate JSON carries the stable field names") {
  Certificate c = certify(parse_polynomial("x^4 + 0.95*x^3*y + 0.95*x*y^3 + y^4", xy()));
  Json j = certificate_to_json(c);
  CHECK(j.contains("verdict"));
  CHECK(j.contains("theorem"));
  CHECK(j.contains("exact"));
  CHECK(j.contains("witness"));
  CHECK(j["witness"].contains("h_alpha_table"));
  CHECK(j["witness"].contains("map"));
  CHECK(j["meta"]["tool_version"] == kToolVersion);
  CHECK(j["meta"].contains("precision_bits"));

  Certificate posy = certify(parse_polynomial("x^4 + 1.5*x^3*y + 0.2*x*y^3 + y^4", xy()));
  Json jp = certificate_to_json(posy);
  CHECK(jp["witness"].contains("ratio_sum"));
  CHECK(jp["witness"].contains("weights"));
  CHECK(jp["witness"].contains("epsilon"));
  CHECK(jp["witness"]["ratio_sum"].contains("lo"));
  CHECK(jp["witness"]["ratio_sum"].contains("hi"));

  Certificate nc = certify(parse_polynomial("-x^2 + y^2", xy()));
  Json jn = certificate_to_json(nc);
  CHECK(jn["witness"]["failed_condition"] == "C2");
}
