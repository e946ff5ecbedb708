#include <doctest.h>

#include <cmath>
#include <random>

#include "indefmass/errors.hpp"
#include "indefmass/matching.hpp"
#include "indefmass/secular.hpp"
#include "oracles.hpp"

using namespace indefmass;

namespace {

const WellGeometry kL2(2.0);

std::vector<double> energies(const std::vector<Eigenstate>& states) {
  std::vector<double> e;
  for (const auto& s : states) e.push_back(s.energy);
  return e;
}

// First n even levels of the profile against E = +-t^2 of the closed-form roots.
void check_oracle(const MassProfile& profile, const SecularBranch& branch, std::size_t n) {
  const bool pos = branch.positive_energy();
  auto roots = find_roots(branch, {0.0, 40.0 * oracle::pi});
  REQUIRE(roots.size() >= n);
  roots.resize(n);
  const double emax = roots.back() * roots.back() * 1.01 + 1.0;
  auto states = eigenvalues(profile, pos ? EnergyWindow{0.0, emax} : EnergyWindow{-emax, 0.0}, Parity::even);
  auto e = energies(states);
  if (!pos) std::reverse(e.begin(), e.end());
  REQUIRE(e.size() >= n);
  for (std::size_t i = 0; i < n; ++i) {
    const double expected = branch.energy(roots[i]);
    INFO("level " << i + 1 << " expected " << expected << " got " << e[i]);
    CHECK(oracle::rel_close(e[i], expected, 1e-10));
  }
}

}  // namespace

TEST_CASE("eigenvalues reproduce the closed-form secular roots") {
  for (double L : {1.5, 2.0, 3.0}) {
    const WellGeometry g(L);
    CAPTURE(L);
    check_oracle(MassProfile::constant(g, -1.0), SecularBranch::constant_neg_pos(g), 10);
    check_oracle(MassProfile::constant(g, -1.0), SecularBranch::constant_neg_neg(g), 10);
    check_oracle(MassProfile::tanh(g), SecularBranch::tanh_pos(g), 10);
  }
}

TEST_CASE("odd levels match the hand-derived odd condition") {
  const auto profile = MassProfile::constant(kL2, -1.0);
  const auto e = energies(eigenvalues(profile, {0.0, 200.0}, Parity::odd));
  const auto ks = oracle::brute_roots([](double k) { return oracle::odd_neg_pos(k, 2.0); }, 1e-6,
                                      std::sqrt(200.0));
  REQUIRE(e.size() == ks.size());
  for (std::size_t i = 0; i < e.size(); ++i) CHECK(oracle::rel_close(e[i], ks[i] * ks[i], 1e-10));
}

TEST_CASE("uniform well recovers the textbook spectrum") {
  const auto profile = MassProfile::uniform(kL2);
  std::vector<std::pair<double, Parity>> all;
  for (Parity p : {Parity::even, Parity::odd})
    for (const auto& s : eigenvalues(profile, {0.0, 62.0}, p)) all.emplace_back(s.energy, p);
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  REQUIRE(all.size() == 10);
  for (std::size_t n = 1; n <= 10; ++n) {
    const double exact = std::pow(static_cast<double>(n) * oracle::pi / 4.0, 2);
    CHECK(oracle::rel_close(all[n - 1].first, exact, 1e-10));
    CHECK(all[n - 1].second == (n % 2 == 1 ? Parity::even : Parity::odd));
  }
  // the window (0, 20) holds the first five
  CHECK(eigenvalues(profile, {0.0, 20.0}, Parity::even).size() == 3);
  CHECK(eigenvalues(profile, {0.0, 20.0}, Parity::odd).size() == 2);
}

TEST_CASE("tanh profile has no negative even levels") {
  for (double L : {1.5, 2.0, 3.0})
    CHECK(eigenvalues(MassProfile::tanh(WellGeometry(L)), {-100.0, 0.0}, Parity::even).empty());
}

TEST_CASE("build_solution region shapes") {
  const auto profile = MassProfile::constant(kL2, -1.0);
  const double k1 = find_roots(SecularBranch::constant_neg_pos(kL2), {0.0, 3.0}).front();
  const auto psi = build_solution(profile, k1 * k1, Parity::even);
  // outer proportional to sin k(x + L), inner to cosh k x
  const double c_out = psi(-1.5) / std::sin(k1 * 0.5);
  for (double x : {-1.9, -1.7, -1.2, -1.0})
    CHECK(psi(x) == doctest::Approx(c_out * std::sin(k1 * (x + 2.0))).epsilon(1e-12));
  const double c_in = psi(0.0);
  for (double x : {-0.9, -0.5, -0.1, 0.4, 0.99})
    CHECK(psi(x) == doctest::Approx(c_in * std::cosh(k1 * x)).epsilon(1e-9));
  CHECK(std::fabs(mismatch(profile, k1 * k1, Parity::even)) <= 1e-9);

  const auto zero = build_solution(profile, 0.0, Parity::even);
  CHECK(zero.regions()[0].kind == RegionKind::linear);
  CHECK(zero.regions()[1].kind == RegionKind::linear);
  const double slope = zero(-1.5) / 0.5;
  CHECK(zero(-1.25) == doctest::Approx(slope * 0.75).epsilon(1e-14));

  const double kappa = 1.7, mu = kappa * std::sqrt(std::tanh(kappa * kappa));
  const auto th = build_solution(MassProfile::tanh(kL2), -kappa * kappa, Parity::even);
  const double c_sh = th(-1.5) / std::sinh(kappa * 0.5);
  CHECK(th(-1.2) == doctest::Approx(c_sh * std::sinh(kappa * 0.8)).epsilon(1e-12));
  CHECK(th.regions()[1].kind == RegionKind::hyper);
  CHECK(th.regions()[1].wavenumber == doctest::Approx(mu).epsilon(1e-14));
}

TEST_CASE("psi and psi' are continuous at the breakpoint") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> es(-400.0, 400.0);
  const WellGeometry g(2.0), h(3.0, 0.6);
  const MassProfile profiles[] = {MassProfile::constant(g, -1.0), MassProfile::tanh(g),
                                  MassProfile::step(g, -9.0), MassProfile::scaled(h, 0.4),
                                  MassProfile::uniform(h)};
  for (const auto& p : profiles) {
    const double a = p.geometry().inner_half_width();
    for (int i = 0; i < 500; ++i) {
      const double e = es(rng);
      for (Parity par : {Parity::even, Parity::odd}) {
        const auto psi = build_solution(p, e, par);
        const auto& out = psi.regions()[0];
        const auto& in = psi.regions()[1];
        const double scale = std::max(out.max_abs(out.left, out.right), in.max_abs(in.left, in.right));
        REQUIRE(std::fabs(out(-a) - in(-a)) <= 1e-13 * scale);
        const double dscale = scale * std::max({1.0, out.wavenumber, in.wavenumber});
        REQUIRE(std::fabs(out.derivative(-a) - in.derivative(-a)) <= 1e-13 * dscale);
      }
    }
  }
}

TEST_CASE("mismatch is amplitude normalised") {
  const auto profile = MassProfile::constant(kL2, -1.0);
  for (double e : {-30.0, -2.0, 0.5, 7.0, 60.0}) {
    const auto psi = build_solution(profile, e, Parity::even);
    for (double c : {1e-6, -3.0, 1e8}) {
      const auto out = psi.regions()[0].scaled(c), in = psi.regions()[1].scaled(c);
      const double amp = std::max(out.max_abs(out.left, out.right), in.max_abs(in.left, in.right));
      CHECK(in.derivative(0.0) / amp == doctest::Approx(mismatch(profile, e, Parity::even) * (c > 0 ? 1 : -1)).epsilon(1e-10));
    }
  }
}

TEST_CASE("step threshold splits the scan") {
  const double beta = 2.0;
  const auto step = MassProfile::step_beta(kL2, beta);
  const auto pos = MassProfile::uniform(kL2);
  // below the threshold the step profile is the uniform one
  for (double e : {-5.0, -9.0, -30.0})
    CHECK(mismatch(step, e, Parity::even) == mismatch(pos, e, Parity::even));

  const auto levels = energies(eigenvalues(step, {-4.0, 0.0}, Parity::even));
  const double k1 = critical_betas(kL2, 1).front();
  REQUIRE(levels.size() == 1);
  CHECK(oracle::rel_close(levels[0], -k1 * k1, 1e-10));

  // a threshold placed exactly on a root is itself an eigenvalue
  const auto at = MassProfile::step_beta(kL2, k1);
  const auto edge = energies(eigenvalues(at, {-k1 * k1, 0.0}, Parity::even));
  REQUIRE(edge.size() == 1);
  CHECK(edge[0] == -k1 * k1);
}

TEST_CASE("refinement diagnostic and argument checks") {
  const auto profile = MassProfile::uniform(kL2);
  EigenSettings coarse;
  // one cell over sigma in [0, 4] holding the even levels at pi/4, 3pi/4, 5pi/4
  coarse.samples = 2;
  coarse.max_depth = 1;
  CHECK_THROWS_AS(eigenvalues(profile, {0.0, 16.0}, Parity::even, coarse), RefinementError);
  CHECK_THROWS_AS(eigenvalues(profile, {1.0, 1.0}, Parity::even), InvalidArgument);
  EigenSettings bad;
  bad.tol = 0.0;
  CHECK_THROWS_AS(eigenvalues(profile, {0.0, 1.0}, Parity::even, bad), InvalidArgument);
  CHECK_THROWS_AS(mismatch(profile, std::nan(""), Parity::even), DomainError);
}
