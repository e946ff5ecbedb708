#include "indefmass/matching.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "indefmass/errors.hpp"
#include "indefmass/rootscan.hpp"

namespace indefmass {
namespace {

// Largest p * span for which cosh stays comfortably finite.
constexpr double kMaxHyperbolicExponent = 700.0;

struct HalfWell {
  RegionSolution outer;
  RegionSolution inner;
};

HalfWell half_well(const WellGeometry& g, double q2_outer, double q2_inner, double energy) {
  const double L = g.half_width(), a = g.inner_half_width(), d = g.outer_span();

  // Outer: psi = S(x + L) up to scale, anchored at the wall so psi(-L) = 0 exactly.
  // Inner: anchored at -a with (psi, psi')(-a) proportional to (S(d), C(d)).
  double wall_slope = 1.0, value, slope;
  if (q2_outer < -kLinearBand) {
    const double p = std::sqrt(-q2_outer);
    if (p * d > kMaxHyperbolicExponent) {
      throw DomainError(fmt::format("E={} is too large in magnitude for the outer region", energy));
    }
    wall_slope = 1.0 / std::cosh(p * d);
    value = std::tanh(p * d) / p;
    slope = 1.0;
  } else {
    const Basis b = basis(q2_outer, d);
    value = b.s;
    slope = b.c;
  }
  if (q2_inner < -kLinearBand && std::sqrt(-q2_inner) * a > kMaxHyperbolicExponent) {
    throw DomainError(fmt::format("E={} is too large in magnitude for the inner region", energy));
  }
  return {RegionSolution::make(q2_outer, 0.0, wall_slope, -L, -L, -a),
          RegionSolution::make(q2_inner, value, slope, -a, -a, 0.0)};
}

double half_well_mismatch(const HalfWell& hw, Parity parity) {
  const double at_centre = parity == Parity::even ? hw.inner.derivative(0.0) : hw.inner(0.0);
  const double amplitude = std::max(hw.outer.max_abs(hw.outer.left, hw.outer.right),
                                    hw.inner.max_abs(hw.inner.left, hw.inner.right));
  return at_centre / amplitude;
}

double signed_root(double e) { return e < 0.0 ? -std::sqrt(-e) : std::sqrt(e); }

}  // namespace

PiecewiseWavefunction build_solution(const MassProfile& profile, double energy, Parity parity) {
  if (!std::isfinite(energy)) throw DomainError("energy must be finite");
  const HalfWell hw = half_well(profile.geometry(), profile.local_q2(Region::outer, energy),
                                profile.local_q2(Region::inner, energy), energy);
  return PiecewiseWavefunction(hw.outer, hw.inner, parity, energy);
}

double mismatch(const MassProfile& profile, double energy, Parity parity) {
  if (!std::isfinite(energy)) throw DomainError("energy must be finite");
  const HalfWell hw = half_well(profile.geometry(), profile.local_q2(Region::outer, energy),
                                profile.local_q2(Region::inner, energy), energy);
  return half_well_mismatch(hw, parity);
}

std::vector<Eigenstate> eigenvalues(const MassProfile& profile, EnergyWindow window,
                                    Parity parity, const EigenSettings& settings) {
  if (!std::isfinite(window.lo) || !std::isfinite(window.hi) || !(window.lo < window.hi))
    throw InvalidArgument(
        fmt::format("energy window requires lo < hi (got ({}, {}))", window.lo, window.hi));
  if (!(settings.tol > 0.0)) throw InvalidArgument("eigenvalue tolerance must be positive");

  std::vector<double> cuts{window.lo, window.hi};
  if (window.lo < 0.0 && 0.0 < window.hi) cuts.push_back(0.0);
  const auto threshold = profile.discontinuity();
  if (threshold && window.lo < *threshold && *threshold < window.hi) cuts.push_back(*threshold);
  std::sort(cuts.begin(), cuts.end());

  const WellGeometry& g = profile.geometry();
  const ScanSettings scan{settings.samples, settings.refine_factor, settings.max_depth};

  std::vector<double> roots;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double e1 = cuts[i], e2 = cuts[i + 1];
    // Mass law of this segment, frozen so that a step at e2 does not leak in.
    const double seg_mass = profile.inner_mass(0.5 * (e1 + e2));
    const bool step = threshold.has_value();
    const auto f_energy = [&](double e) {
      const double m = step ? seg_mass : profile.inner_mass(e);
      return half_well_mismatch(half_well(g, profile.outer_mass() * e, m * e, e), parity);
    };
    const ScalarFunction f_sigma = [&](double s) { return f_energy(s * std::fabs(s)); };
    const ScalarFunction f_e = f_energy;

    for (const Bracket& br : isolate_sign_changes(f_sigma, signed_root(e1), signed_root(e2), scan)) {
      double lo = br.lo * std::fabs(br.lo), hi = br.hi * std::fabs(br.hi);
      // keep the segment's own endpoints exact
      if (br.lo == signed_root(e1)) lo = e1;
      if (br.hi == signed_root(e2)) hi = e2;
      const double e = bisect(f_e, Bracket{lo, hi}, settings.tol);
      if (e > window.lo && e < window.hi) roots.push_back(e);
    }
  }

  if (threshold && window.lo <= *threshold && *threshold < window.hi) {
    const double e = *threshold;
    if (std::fabs(mismatch(profile, e, parity)) <= settings.threshold_zero_tol) roots.push_back(e);
  }

  std::sort(roots.begin(), roots.end());
  const auto close = [&](double x, double y) {
    return y - x <= 4.0 * settings.tol + 1e-12 * std::max(std::fabs(x), std::fabs(y));
  };
  roots.erase(std::unique(roots.begin(), roots.end(), close), roots.end());
  if (threshold) {
    // a bisected root right next to the closed threshold is the threshold root
    for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
      if (roots[i] == *threshold && std::fabs(roots[i + 1] - roots[i]) <= 1e-9 * (1.0 + std::fabs(roots[i]))) {
        roots.erase(roots.begin() + static_cast<std::ptrdiff_t>(i + 1));
        break;
      }
    }
  }

  std::vector<Eigenstate> out;
  out.reserve(roots.size());
  for (double e : roots) out.push_back({e, build_solution(profile, e, parity)});
  return out;
}

}  // namespace indefmass
