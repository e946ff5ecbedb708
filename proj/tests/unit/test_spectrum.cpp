#include <doctest.h>

#include <cmath>

#include "indefmass/errors.hpp"
#include "indefmass/secular.hpp"
#include "indefmass/spectrum.hpp"
#include "oracles.hpp"

using namespace indefmass;

namespace {
const WellGeometry kL2(2.0);
}

TEST_CASE("constant negative inner mass is unbounded below") {
  const auto r = run_scenario(MassProfile::constant(kL2, -1.0), {-100.0, 100.0});
  CHECK(r.verdict == Verdict::unbounded_below);
  CHECK(r.evidence.count1 == 3);
  CHECK(r.evidence.count2 == 32);
  CHECK(r.evidence.required == 27);
  CHECK(shows_unbounded_growth(r.evidence));
  CHECK(std::is_sorted(r.levels.begin(), r.levels.end(),
                       [](const Level& a, const Level& b) { return a.energy < b.energy; }));
  CHECK(r.levels.front().energy < 0.0);
}

TEST_CASE("tanh inner mass is bounded below") {
  for (double L : {1.5, 2.0, 3.0}) {
    const auto r = run_scenario(MassProfile::tanh(WellGeometry(L)), {-100.0, 100.0},
                                ScenarioOptions{"t", {Parity::even, Parity::odd}});
    CHECK(r.verdict == Verdict::bounded_below);
    REQUIRE_FALSE(r.levels.empty());
    for (const auto& l : r.levels) CHECK(l.energy > 0.0);
  }
}

TEST_CASE("empty verdict") {
  const auto r = run_scenario(MassProfile::uniform(kL2), {-5.0, 0.5});
  CHECK(r.levels.empty());
  CHECK(r.verdict == Verdict::empty);
  CHECK(to_string(Verdict::empty) == "empty");
}

TEST_CASE("shallow step keeps the positive set of the constant profile") {
  const double beta = 0.9 * critical_betas(kL2, 1).front();
  const auto step = run_scenario(MassProfile::step_beta(kL2, beta), {-beta * beta, 100.0});
  const auto ref = run_scenario(MassProfile::constant(kL2, -1.0), {0.0, 100.0});
  std::size_t negatives = 0;
  for (const auto& l : step.levels) negatives += l.energy < 0.0 ? 1 : 0;
  CHECK(negatives == 0);
  REQUIRE(step.levels.size() == ref.levels.size());
  for (std::size_t i = 0; i < ref.levels.size(); ++i)
    CHECK(oracle::rel_close(step.levels[i].energy, ref.levels[i].energy, 1e-12));
  // a window reaching below the threshold is clipped
  const auto wide = run_scenario(MassProfile::step_beta(kL2, beta), {-100.0, 100.0});
  CHECK(wide.window.lo == -beta * beta);
  CHECK(wide.levels.size() == step.levels.size());
}

TEST_CASE("step spectra are nested in beta") {
  std::vector<double> prev;
  for (double beta = 0.5; beta <= 12.0; beta += 0.5) {
    const auto r = run_scenario(MassProfile::step_beta(kL2, beta), {-200.0, 0.0});
    std::vector<double> cur;
    for (const auto& l : r.levels) cur.push_back(l.energy);
    for (double e : prev) {
      const bool found = std::any_of(cur.begin(), cur.end(), [&](double c) { return oracle::rel_close(c, e, 1e-10); });
      CHECK(found);
    }
    prev = cur;
  }
}

TEST_CASE("staircase jumps at the critical betas") {
  const auto betas = critical_betas(kL2, 5);
  const std::size_t steps = 2000;
  const double beta_max = 15.0, h = beta_max / steps;
  const auto rows = ground_state_staircase(kL2, beta_max, steps);
  REQUIRE(rows.size() == steps);
  std::vector<double> jumps;
  std::size_t count = 0;
  for (const auto& r : rows) {
    REQUIRE(r.negative_levels >= count);
    if (r.negative_levels > count) {
      CHECK(r.negative_levels == count + 1);
      jumps.push_back(r.beta);
    }
    count = r.negative_levels;
  }
  REQUIRE(jumps.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(jumps[i] >= betas[i]);
    CHECK(jumps[i] - betas[i] <= h);
  }
  CHECK(rows.front().negative_levels == 0);
  CHECK_THROWS_AS(ground_state_staircase(kL2, 0.0, 10), InvalidArgument);
}

TEST_CASE("new ground states gain nodes") {
  const auto rows = ground_state_staircase(kL2, 12.0, 1200);
  std::vector<int> nodes_at_jump;
  std::size_t count = 0;
  for (const auto& r : rows) {
    if (r.negative_levels > count) nodes_at_jump.push_back(r.ground_nodes);
    count = r.negative_levels;
  }
  REQUIRE(nodes_at_jump.size() >= 4);
  CHECK(nodes_at_jump[0] == 0);
  CHECK(nodes_at_jump[1] == 2);
  CHECK(nodes_at_jump[2] == 4);
  CHECK(nodes_at_jump[3] == 6);
}

TEST_CASE("delta-limit study") {
  const auto rows = delta_limit_study(1.0, 2.0, {1e-1, 1e-2, 1e-3});
  REQUIRE(rows.size() == 3);
  const double k1 = reduced_kappa1(1.0, 2.0);
  double prev_gap = 1.0;
  for (const auto& r : rows) {
    CHECK(r.b == doctest::Approx(r.nu));
    CHECK(r.a == doctest::Approx(r.nu * r.b));
    CHECK(r.reduced == k1);
    const double gap = std::fabs(r.leftmost - k1);
    CHECK(gap < prev_gap);
    prev_gap = gap;
    CHECK(r.escape_estimate == doctest::Approx(oracle::pi * r.b / r.a));
  }
  CHECK(std::fabs(rows[2].leftmost - k1) < 1e-2);
  CHECK(std::fabs(rows[2].second / rows[2].escape_estimate - 1.0) < 0.05);
  CHECK_THROWS_AS(delta_limit_study(1.0, 2.0, {}), InvalidArgument);
}
