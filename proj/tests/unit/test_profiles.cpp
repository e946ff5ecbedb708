#include <doctest.h>

#include <cmath>
#include <random>

#include "indefmass/errors.hpp"
#include "indefmass/profiles.hpp"

using namespace indefmass;

TEST_CASE("geometry requires 0 < a < L") {
  CHECK_THROWS_AS(WellGeometry(1.0, 1.0), InvalidArgument);
  CHECK_THROWS_AS(WellGeometry(2.0, 0.0), InvalidArgument);
  CHECK_THROWS_AS(WellGeometry(2.0, -1.0), InvalidArgument);
  CHECK_THROWS_AS(WellGeometry(2.0, std::nan("")), InvalidArgument);
  const WellGeometry g(3.0, 0.5);
  CHECK(g.half_width() == 3.0);
  CHECK(g.outer_span() == 2.5);
  CHECK(WellGeometry(2.0).inner_half_width() == 1.0);
}

TEST_CASE("mass_at picks the region and inner law") {
  const WellGeometry g(2.0);
  CHECK(MassProfile::constant(g, -1.0).mass_at(1.5, 123.0) == 1.0);
  CHECK(MassProfile::constant(g, -1.0).mass_at(0.3, 123.0) == -1.0);
  CHECK(MassProfile::tanh(g).mass_at(0.0, 0.0) == 0.0);
  CHECK(MassProfile::step(g, -4.0).mass_at(0.0, -4.0) == -1.0);
  CHECK(MassProfile::step(g, -4.0).mass_at(0.0, -4.0000001) == 1.0);
  CHECK(MassProfile::scaled(g, 0.5).mass_at(0.2, 7.0) == doctest::Approx(-4.0).epsilon(1e-15));

  // the breakpoint itself is outer
  CHECK(MassProfile::constant(g, -1.0).mass_at(1.0, 5.0) == 1.0);
  CHECK(MassProfile::constant(g, -1.0).mass_at(-1.0, 5.0) == 1.0);

  CHECK_THROWS_AS(MassProfile::uniform(g).mass_at(2.0, 1.0), DomainError);
  CHECK_THROWS_AS(MassProfile::uniform(g).mass_at(-2.5, 1.0), DomainError);
}

TEST_CASE("local_q2 is m E") {
  const WellGeometry g(2.0);
  CHECK(MassProfile::constant(g, -1.0).local_q2(Region::outer, 4.0) == 4.0);
  const double lambda = 1.0 * std::sqrt(std::tanh(1.0));
  CHECK(MassProfile::tanh(g).local_q2(Region::inner, 1.0) == doctest::Approx(-lambda * lambda).epsilon(1e-15));
  CHECK(MassProfile::tanh(g).local_q2(Region::inner, 1.0) == doctest::Approx(-0.7615941559557649).epsilon(1e-15));
  const double kappa = 1.3, mu = kappa * std::sqrt(std::tanh(kappa * kappa));
  CHECK(MassProfile::tanh(g).local_q2(Region::inner, -kappa * kappa) == doctest::Approx(-mu * mu).epsilon(1e-14));
  CHECK(MassProfile::step(g, 0.0).local_q2(Region::inner, -1.0) == -1.0);
}

TEST_CASE("profiles are even in x") {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> xs(-1.999999, 1.999999), es(-200.0, 200.0);
  const WellGeometry g(2.0);
  const MassProfile profiles[] = {MassProfile::constant(g, -1.0), MassProfile::tanh(g),
                                  MassProfile::step(g, -4.0), MassProfile::scaled(g, 0.3),
                                  MassProfile::uniform(g)};
  for (const auto& p : profiles) {
    for (int i = 0; i < 10000; ++i) {
      const double x = xs(rng), e = es(rng);
      REQUIRE(p.mass_at(x, e) == p.mass_at(-x, e));
    }
  }
}

TEST_CASE("tanh inner mass saturates") {
  const auto p = MassProfile::tanh(WellGeometry(2.0));
  CHECK(std::fabs(p.mass_at(0.0, -50.0) - 1.0) <= 1e-15);
  CHECK(std::fabs(p.mass_at(0.0, 50.0) + 1.0) <= 1e-15);
}

TEST_CASE("step profile agrees with the constant ones on either side") {
  const WellGeometry g(2.0);
  const double thr = -2.25;
  const auto step = MassProfile::step(g, thr);
  const auto neg = MassProfile::constant(g, -1.0), pos = MassProfile::uniform(g);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> xs(-1.99, 1.99), es(-50.0, 50.0);
  for (int i = 0; i < 10000; ++i) {
    const double x = xs(rng), e = es(rng);
    const auto& ref = e >= thr ? neg : pos;
    REQUIRE(step.mass_at(x, e) == ref.mass_at(x, e));
  }
  CHECK(step.mass_at(0.0, thr) == -1.0);
  CHECK(step.discontinuity() == thr);
  CHECK_FALSE(neg.discontinuity().has_value());
  CHECK(MassProfile::step_beta(g, 1.5) == step);
}

TEST_CASE("profile equality and summary") {
  const WellGeometry g(2.0);
  CHECK(MassProfile::constant(g, -1.0) == MassProfile::constant(g, -1.0));
  CHECK_FALSE(MassProfile::constant(g, -1.0) == MassProfile::constant(g, -2.0));
  CHECK_FALSE(MassProfile::constant(g, 1.0) == MassProfile::uniform(WellGeometry(3.0)));
  CHECK(MassProfile::tanh(g).summary().find("tanh") != std::string::npos);
  CHECK_THROWS_AS(MassProfile::scaled(g, 0.0), InvalidArgument);
  CHECK(MassProfile::uniform(g).outer_mass() == 1.0);
}
