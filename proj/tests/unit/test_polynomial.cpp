#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "coercheck/newton.hpp"
#include "coercheck/parse.hpp"
#include "coercheck/polynomial.hpp"
#include "support/generators.hpp"

using namespace coercheck;

namespace {
std::vector<std::string> xy() { return {"x", "y"}; }
}  // namespace

TEST_CASE("parsing the reference examples") {
  Polynomial f = parse_polynomial("x^4 + 2*x^3*y - y^4", xy());
  REQUIRE(f.terms().size() == 3);
  CHECK(f.coeff(Exponent{4, 0}) == 1);
  CHECK(f.coeff(Exponent{3, 1}) == 2);
  CHECK(f.coeff(Exponent{0, 4}) == -1);

  Polynomial zero = parse_polynomial("x^2 - x^2", {{"x"}});
  CHECK(zero.is_zero());
  CHECK(zero.n_vars() == 1);

  Polynomial g = parse_polynomial("3/4*x1^2*x2^4");
  REQUIRE(g.terms().size() == 1);
  CHECK(g.coeff(Exponent{2, 4}) == make_rational(3, 4));
  CHECK(g.var_names() == std::vector<std::string>{"x1", "x2"});
}

TEST_CASE("decimals convert exactly") {
  Polynomial f = parse_polynomial("0.25*x^2 + 1.5*y", xy());
  CHECK(f.coeff(Exponent{2, 0}) == make_rational(1, 4));
  CHECK(f.coeff(Exponent{0, 1}) == make_rational(3, 2));
}

TEST_CASE("like terms merge and cancel") {
  Polynomial f = parse_polynomial("x*y + x*y + y*x - 3*x*y", xy());
  CHECK(f.is_zero());
  Polynomial g = parse_polynomial("x^2*x + x^3", {{"x"}});
  CHECK(g.coeff(Exponent{3}) == 2);
}

TEST_CASE("parser error reporting") {
  SECTION("syntax error carries a position") {
    try {
      parse_polynomial("x^4 + + + y", xy());
      FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
      CHECK(e.position >= 6);
    }
  }
  SECTION("negative exponents are a dedicated error") {
    CHECK_THROWS_AS(parse_polynomial("x^-2", xy()), NegativeExponent);
  }
  SECTION("unknown variable with an explicit list") {
    CHECK_THROWS_AS(parse_polynomial("x + z", xy()), UnknownVariable);
  }
  SECTION("implicit multiplication is rejected") {
    CHECK_THROWS_AS(parse_polynomial("2x", xy()), SyntaxError);
    CHECK_THROWS_AS(parse_polynomial("2*3", xy()), SyntaxError);
  }
  SECTION("exponent must be a positive integer") {
    CHECK_THROWS_AS(parse_polynomial("x^0", xy()), SyntaxError);
    CHECK_THROWS_AS(parse_polynomial("x^", xy()), SyntaxError);
  }
  SECTION("empty input") { CHECK_THROWS_AS(parse_polynomial("", xy()), SyntaxError); }
  SECTION("zero denominator") { CHECK_THROWS_AS(parse_polynomial("1/0*x", xy()), SyntaxError); }
}

TEST_CASE("evaluation") {
  Polynomial f = parse_polynomial("x^2 + y^2", xy());
  CHECK(f.evaluate(std::vector<double>{3, 4}) == 25.0);

  Polynomial zero = Polynomial::zero(2, xy());
  CHECK(zero.evaluate(std::vector<double>{5, -7}) == 0.0);

  Polynomial h = parse_polynomial("x^4 + x^3*y + y^4", xy());
  CHECK(h.evaluate(std::vector<double>{1, 1}) == 3.0);

  CHECK_THROWS_AS(f.evaluate(std::vector<double>{1}), DimensionMismatch);
}

TEST_CASE("evaluation is exact on small integer points") {
  std::mt19937_64 rng(1234);
  int exercised = 0;
  for (int trial = 0; trial < 80; ++trial) {
    Polynomial f = test_support::random_polynomial(rng, 4, 5);
    bool coeffs_integral = true;
    for (const auto& [e, c] : f.terms())
      if (c.get_den() != 1) coeffs_integral = false;
    if (!coeffs_integral) continue;  // non-dyadic coefficients already round
    std::vector<Rational> point;
    std::vector<double> dpoint;
    for (std::size_t i = 0; i < f.n_vars(); ++i) {
      int v = test_support::uniform_int(rng, -3, 3);
      point.emplace_back(v);
      dpoint.push_back(v);
    }
    // Integer data well below 2^53: the float path must be exact.
    CHECK(f.evaluate(dpoint) == to_double_nearest(f.evaluate_exact(point)));
    ++exercised;
  }
  CHECK(exercised > 5);
}

TEST_CASE("subpolynomial restriction") {
  Polynomial f = parse_polynomial("x^4 + x^3*y + y^4", xy());
  ExponentSet s{Exponent{4, 0}, Exponent{0, 4}};
  Polynomial sub = f.subpolynomial(s);
  CHECK(sub == parse_polynomial("x^4 + y^4", xy()));
  CHECK(f.subpolynomial(f.support()) == f);
  CHECK(f.subpolynomial({}).is_zero());
  CHECK_THROWS_AS(f.subpolynomial({Exponent{1, 1}}), ExponentNotInSupport);
}

TEST_CASE("render round-trips through the parser") {
  CHECK(Polynomial::zero(2, xy()).render() == "0");
  CHECK(parse_polynomial("x^4 + 1/2*x^3*y - y^4", xy()).render() == "x^4 + 1/2*x^3*y - y^4");

  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    Polynomial f = test_support::random_polynomial(rng);
    CAPTURE(f.render());
    CHECK(parse_polynomial(f.render(), f.var_names()) == f);
  }
}

TEST_CASE("support partition reassembles the polynomial") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 25; ++trial) {
    Polynomial f = test_support::random_polynomial(rng);
    NewtonAnalysis analysis = analyze(f);
    Polynomial fv = f.subpolynomial(analysis.v);
    Polynomial fd = f.subpolynomial(analysis.d);
    Polynomial fr = f.subpolynomial(analysis.r);
    TermMap combined;
    for (const Polynomial* part : {&fv, &fd, &fr})
      for (const auto& [e, c] : part->terms()) {
        REQUIRE(!combined.contains(e));  // the partition must be disjoint
        combined.emplace(e, c);
      }
    CHECK(combined == f.terms());
  }
}

TEST_CASE("scaling and permutation helpers") {
  Polynomial f = parse_polynomial("x^2*y + 3*y^4", xy());
  Polynomial scaled = f.scaled(make_rational(-1, 3));
  CHECK(scaled.coeff(Exponent{2, 1}) == make_rational(-1, 3));
  CHECK(scaled.coeff(Exponent{0, 4}) == -1);
  CHECK(f.scaled(Rational(0)).is_zero());

  Polynomial swapped = f.permuted({1, 0});
  CHECK(swapped.coeff(Exponent{1, 2}) == 1);
  CHECK(swapped.coeff(Exponent{4, 0}) == 3);
  CHECK(swapped.var_names() == std::vector<std::string>{"y", "x"});
}
