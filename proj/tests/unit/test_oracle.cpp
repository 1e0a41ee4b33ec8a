#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "coercheck/oracle.hpp"
#include "coercheck/parse.hpp"

using namespace coercheck;

namespace {
std::vector<std::string> xy() { return {"x", "y"}; }

double largest_term_at(const Polynomial& f, const std::vector<double>& x) {
  double largest = 0.0;
  for (const auto& [e, c] : f.terms()) {
    double term = std::abs(to_double_nearest(c));
    for (std::size_t i = 0; i < x.size(); ++i) term *= std::pow(std::abs(x[i]), e[i]);
    largest = std::max(largest, term);
  }
  return largest;
}
}  // namespace

TEST_CASE("radial scan of a diagonal-minimized quartic") {
  Polynomial f = parse_polynomial("x^4 + y^4", xy());
  RadialProfile profile = radial_scan(f, {1, 10, 100}, 4096, 0);
  REQUIRE(profile.minima.size() == 3);
  // The sphere minimum is R^4/2 on the diagonals; the angle grid hits them.
  CHECK(profile.minima[0] == Catch::Approx(0.5).epsilon(1e-9));
  CHECK(profile.minima[1] == Catch::Approx(5e3).epsilon(1e-9));
  CHECK(profile.minima[2] == Catch::Approx(5e7).epsilon(1e-9));
}

TEST_CASE("radial scan sees the bounded direction of the Motzkin polynomial") {
  Polynomial f = parse_polynomial("x^4*y^2 + x^2*y^4 - 3*x^2*y^2 + 1", xy());
  RadialProfile profile = radial_scan(f, {1, 10, 100, 1000}, 4096, 0);
  // f(x, 0) = 1 identically and the axes are always sampled.
  for (double m : profile.minima) CHECK(m <= 1.0 + 1e-12);
}

TEST_CASE("radial scan of the zero polynomial") {
  RadialProfile profile = radial_scan(Polynomial::zero(2, xy()), {1, 10}, 64, 0);
  CHECK(profile.minima == std::vector<double>{0.0, 0.0});
}

TEST_CASE("radial scan is deterministic and validates radii") {
  Polynomial f = parse_polynomial("x^4 - 3*x^2*y^2 + y^4", xy());
  RadialProfile a = radial_scan(f, {1, 10}, 512, 42);
  RadialProfile b = radial_scan(f, {1, 10}, 512, 42);
  CHECK(a.minima == b.minima);
  CHECK_THROWS_AS(radial_scan(f, {10, 1}, 64, 0), std::invalid_argument);
  CHECK_THROWS_AS(radial_scan(f, {-1, 1}, 64, 0), std::invalid_argument);
}

TEST_CASE("equality manifold of a boundary circuit") {
  Polynomial f = parse_polynomial("3/4*x^4 + 1/4*y^4 - x^3*y", xy());
  auto rec = recognize_circuit(f);
  REQUIRE(rec);

  SECTION("the curve parameterization collapses to t^(1/4) on both axes") {
    std::vector<double> x1 = equality_manifold_point(*rec.circuit, 1.0);
    CHECK(x1[0] == Catch::Approx(1.0));
    CHECK(x1[1] == Catch::Approx(1.0));
    std::vector<double> x16 = equality_manifold_point(*rec.circuit, 16.0);
    CHECK(x16[0] == Catch::Approx(2.0));
    CHECK(x16[1] == Catch::Approx(2.0));
  }
  SECTION("the polynomial vanishes along the curve") {
    for (double t : {1.0, 10.0, 100.0}) {
      std::vector<double> x = equality_manifold_point(*rec.circuit, t);
      double value = f.evaluate(x);
      CHECK(std::abs(value) <= 1e-9 * (1.0 + largest_term_at(f, x)));
    }
  }
  SECTION("the sign-flipped variant vanishes for the positive inner sign") {
    Polynomial g = parse_polynomial("3/4*x^4 + 1/4*y^4 + x^3*y", xy());
    auto rec_g = recognize_circuit(g);
    REQUIRE(rec_g);
    // The inner exponent (3,1) is odd in x: flip that coordinate.
    for (double t : {1.0, 10.0, 100.0}) {
      std::vector<double> x = equality_manifold_point(*rec_g.circuit, t);
      x[0] = -x[0];
      double value = g.evaluate(x);
      CHECK(std::abs(value) <= 1e-9 * (1.0 + largest_term_at(g, x)));
    }
  }
}

TEST_CASE("manifold construction rejects non-axis geometry") {
  Polynomial motzkin = parse_polynomial("x^4*y^2 + x^2*y^4 - 3*x^2*y^2 + 1", xy());
  auto rec = recognize_circuit(motzkin);
  REQUIRE(rec);
  CHECK_THROWS_AS(equality_manifold_point(*rec.circuit, 10.0), GeometryMismatch);

  Polynomial full = parse_polynomial("1 + x^4 + y^4 - x*y^2", xy());
  auto rec_full = recognize_circuit(full);
  REQUIRE(rec_full);
  CHECK_THROWS_AS(equality_manifold_point(*rec_full.circuit, 10.0), GeometryMismatch);
}
