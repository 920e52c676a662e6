#include <cmath>
#include <string>

#include "doctest.h"
#include "spirallike/boundary_measure.hpp"
#include "spirallike/errors.hpp"
#include "support.hpp"

using namespace spirallike;

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

BoundaryMeasure mixed_measure() {
  // atoms (0, pi), (pi/2, pi/2) and uniform density of mass pi/2
  return BoundaryMeasure({{0.0, M_PI}, {M_PI / 2, M_PI / 2}}, {{0.0, 0.25}});
}

// beta_at by brute-force trapezoid integration of the density.
double beta_reference(const BoundaryMeasure& m, double t) {
  double v = 0.0;
  for (const Atom& a : m.atoms()) {
    if (a.position < t) v += a.jump;
    if (a.position == t) v += 0.5 * a.jump;
  }
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double s0 = t * i / n;
    const double s1 = t * (i + 1) / n;
    v += 0.5 * (s1 - s0) * (m.density_at(s0) + m.density_at(s1));
  }
  return v;
}

}  // namespace

TEST_CASE("factories are valid and carry mass 2 pi") {
  for (const BoundaryMeasure& m : {BoundaryMeasure::uniform(), BoundaryMeasure::single_atom(1.0),
                                   mixed_measure()}) {
    CHECK(m.valid());
    CHECK(m.total_mass() == doctest::Approx(kTwoPi).epsilon(1e-14));
    CHECK_NOTHROW(m.require_valid());
  }
}

TEST_CASE("violations are itemized") {
  const BoundaryMeasure bad({{7.0, 1.0}, {1.0, -1.0}}, {{0.0, -0.5}});
  const auto v = validate(bad);
  CHECK(v.size() >= 4);
  try {
    bad.require_valid();
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("atom 0") != std::string::npos);
    CHECK(msg.find("total mass") != std::string::npos);
  }
  const BoundaryMeasure wrong_mass({{0.0, 1.0}}, {});
  CHECK_FALSE(wrong_mass.valid());
}

TEST_CASE("beta_at matches brute-force integration and is periodic") {
  const BoundaryMeasure m({{0.5, 1.0}, {3.0, 2.0}},
                          {{0.0, 0.2}, {2.0, 0.6}, {4.0, 0.1}});
  // rescale the density so the total mass is 2 pi
  const double dm = m.density_mass();
  const double k = (kTwoPi - 3.0) / dm;
  const BoundaryMeasure scaled({{0.5, 1.0}, {3.0, 2.0}},
                               {{0.0, 0.2 * k}, {2.0, 0.6 * k}, {4.0, 0.1 * k}});
  REQUIRE(scaled.valid());
  for (double t : {0.1, 0.5, 1.3, 3.0, 4.4, 6.2}) {
    CHECK(beta_at(scaled, t) == doctest::Approx(beta_reference(scaled, t)).epsilon(1e-9));
    CHECK(beta_at(scaled, t + kTwoPi) == doctest::Approx(beta_at(scaled, t) + kTwoPi));
    CHECK(beta_at(scaled, t - kTwoPi) == doctest::Approx(beta_at(scaled, t) - kTwoPi));
  }
  CHECK(beta_at(scaled, kTwoPi - 1e-12) == doctest::Approx(kTwoPi).epsilon(1e-9));
}

TEST_CASE("beta_at is non-decreasing with midpoint values at atoms") {
  const BoundaryMeasure m = mixed_measure();
  double prev = beta_at(m, -1e-9);
  for (int i = 0; i <= 2000; ++i) {
    const double v = beta_at(m, kTwoPi * i / 2000.0);
    CHECK(v >= prev - 1e-12);
    prev = v;
  }
  CHECK(beta_at(m, 0.0) == doctest::Approx(M_PI / 2));
  CHECK(beta_at(m, M_PI / 2) == doctest::Approx(M_PI + M_PI / 8 + M_PI / 4));
  CHECK(max_jump(m) == doctest::Approx(M_PI));
  CHECK(max_jump(BoundaryMeasure::uniform()) == 0.0);
}

TEST_CASE("harmonic offset makes the mean of beta equal pi") {
  CHECK(harmonic_offset(BoundaryMeasure::uniform()) == doctest::Approx(0.0).scale(1.0));
  CHECK(harmonic_offset(BoundaryMeasure::single_atom(0.0)) == doctest::Approx(M_PI));
  const BoundaryMeasure m = mixed_measure();
  double mean = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) mean += beta_at(m, kTwoPi * (i + 0.5) / n);
  mean /= n;
  CHECK(mean - harmonic_offset(m) == doctest::Approx(M_PI).epsilon(1e-6));
}

TEST_CASE("json round trip and strict parsing") {
  const BoundaryMeasure m = mixed_measure();
  const BoundaryMeasure back = parse_measure_json(to_json(m));
  REQUIRE(back.atoms().size() == 2);
  CHECK(back.atoms()[1].position == m.atoms()[1].position);
  CHECK(back.knots()[0].value == m.knots()[0].value);

  CHECK_THROWS_AS(parse_measure_json("not json"), ValidationError);
  CHECK_THROWS_AS(parse_measure_json("[]"), ValidationError);
  CHECK_THROWS_AS(parse_measure_json(R"({"atoms": 3})"), ValidationError);
  CHECK_THROWS_AS(parse_measure_json(R"({"atomz": []})"), ValidationError);
  CHECK_THROWS_AS(parse_measure_json(R"({"atoms": [{"t": 0}]})"), ValidationError);
  CHECK_THROWS_AS(parse_measure_json(R"({"atoms": [{"t": 0, "jump": 1}]})"), ValidationError);
  CHECK_NOTHROW(parse_measure_json(R"({"atoms": [{"t": 0, "jump": 6.283185307179586}]})"));
}

TEST_CASE("midpoint convention and max_jump bounds on random measures") {
  for (unsigned seed = 1; seed <= 20; ++seed) {
    const BoundaryMeasure m = test_support::random_measure(seed);
    REQUIRE(m.valid());
    for (const Atom& a : m.atoms()) {
      // left limit from the mass strictly below t
      const double left = beta_at(m, a.position - 1e-12);
      CHECK(beta_at(m, a.position) - 0.5 * a.jump == doctest::Approx(left).epsilon(1e-9));
    }
    CHECK(max_jump(m) < kTwoPi);
    double prev = beta_at(m, 0.0);
    for (int i = 1; i <= 500; ++i) {
      const double t = kTwoPi * i / 500.0 - 0.3;
      // t + 2 pi is itself rounded, so equality holds up to that rounding
      CHECK(std::abs(beta_at(m, t + kTwoPi) - beta_at(m, t) - kTwoPi) <= 1e-12);
      if (i > 1) CHECK(beta_at(m, t) >= prev - 1e-12);
      prev = beta_at(m, t);
    }
  }
  CHECK(max_jump(BoundaryMeasure::single_atom(2.0)) == kTwoPi);
}
