#include "indefmass/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "indefmass/errors.hpp"
#include "indefmass/secular.hpp"

namespace indefmass {

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::bounded_below:
      return "bounded_below";
    case Verdict::unbounded_below:
      return "unbounded_below";
    case Verdict::empty:
      return "empty";
  }
  return "unknown";
}

bool shows_unbounded_growth(const BoundednessEvidence& e) {
  return e.count2 > e.count1 && e.count2 - e.count1 >= e.required;
}

namespace {

std::size_t negative_count(const MassProfile& profile, double kappa_max,
                           const ScenarioOptions& options) {
  double lo = -kappa_max * kappa_max;
  if (const auto thr = profile.discontinuity()) lo = std::max(lo, *thr);
  if (!(lo < 0.0)) return 0;
  std::size_t n = 0;
  for (Parity p : options.parities)
    n += eigenvalues(profile, EnergyWindow{lo, 0.0}, p, options.eigen).size();
  return n;
}

}  // namespace

SpectrumReport run_scenario(const MassProfile& profile, EnergyWindow window,
                            const ScenarioOptions& options) {
  if (options.parities.empty()) throw InvalidArgument("scenario needs at least one parity");
  if (!(options.evidence_k1 > 0.0) || !(options.evidence_k1 < options.evidence_k2))
    throw InvalidArgument("evidence windows need 0 < k1 < k2");

  EnergyWindow clipped = window;
  if (const auto thr = profile.discontinuity()) clipped.lo = std::max(clipped.lo, *thr);

  SpectrumReport report{options.id, profile.summary(), clipped, {}, Verdict::empty, {}};
  const double a = profile.geometry().inner_half_width();
  if (clipped.lo < clipped.hi) {
    for (Parity p : options.parities) {
      for (const auto& st : eigenvalues(profile, clipped, p, options.eigen)) {
        report.levels.push_back(
            {st.energy, p, count_nodes(st.state), localization_fraction(st.state, a)});
      }
    }
  }
  std::sort(report.levels.begin(), report.levels.end(), [](const Level& x, const Level& y) {
    return x.energy < y.energy || (x.energy == y.energy && x.parity < y.parity);
  });

  auto& ev = report.evidence;
  ev.k1 = options.evidence_k1;
  ev.k2 = options.evidence_k2;
  ev.count1 = negative_count(profile, ev.k1, options);
  ev.count2 = negative_count(profile, ev.k2, options);
  const double steps = std::floor((ev.k2 - ev.k1) / std::numbers::pi) - 1.0;
  ev.required = steps > 0.0 ? static_cast<std::size_t>(steps) : 0;

  if (shows_unbounded_growth(ev))
    report.verdict = Verdict::unbounded_below;
  else if (report.levels.empty())
    report.verdict = Verdict::empty;
  else
    report.verdict = Verdict::bounded_below;
  return report;
}

std::vector<StaircaseRow> ground_state_staircase(const WellGeometry& geometry, double beta_max,
                                                 std::size_t steps) {
  if (!(beta_max > 0.0) || !std::isfinite(beta_max))
    throw InvalidArgument("staircase needs beta_max > 0");
  if (steps == 0) throw InvalidArgument("staircase needs steps >= 1");

  const auto kappas =
      find_roots(SecularBranch::constant_neg_neg(geometry), RootWindow{0.0, beta_max});

  // Lowest positive even level, the ground state while no kappa is admissible.
  const MassProfile low = MassProfile::step_beta(geometry, beta_max);
  std::vector<double> kpos;
  for (double hi = 10.0; kpos.empty(); hi *= 2.0)
    kpos = find_roots(SecularBranch::constant_neg_pos(geometry), RootWindow{0.0, hi});
  const double e_pos = kpos.front() * kpos.front();
  const int nodes_pos = count_nodes(build_solution(low, e_pos, Parity::even));

  std::vector<StaircaseRow> rows;
  rows.reserve(steps);
  for (std::size_t i = 1; i <= steps; ++i) {
    const double beta = beta_max * static_cast<double>(i) / static_cast<double>(steps);
    const auto admitted = static_cast<std::size_t>(
        std::upper_bound(kappas.begin(), kappas.end(), beta) - kappas.begin());
    StaircaseRow row{beta, admitted, nodes_pos, e_pos};
    if (admitted > 0) {
      const double kappa = kappas[admitted - 1];
      const MassProfile profile = MassProfile::step_beta(geometry, beta);
      row.ground_energy = -kappa * kappa;
      row.ground_nodes = count_nodes(build_solution(profile, row.ground_energy, Parity::even));
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<DeltaLimitRow> delta_limit_study(double b_over_nu, double half_width,
                                             const std::vector<double>& nus) {
  if (!(b_over_nu > 0.0)) throw InvalidArgument("delta-limit study needs b/nu > 0");
  if (nus.empty()) throw InvalidArgument("delta-limit study needs at least one nu");
  const double kappa1 = reduced_kappa1(b_over_nu, half_width);
  std::vector<DeltaLimitRow> rows;
  rows.reserve(nus.size());
  for (double nu : nus) {
    if (!(nu > 0.0) || !std::isfinite(nu)) throw InvalidArgument("nu values must be positive");
    const double b = b_over_nu * nu;
    const double a = nu * b;
    const WellGeometry g(half_width, a);
    const auto branch = SecularBranch::two_param_neg(g, b, nu);
    // two tangent brackets: (0, pi/(2 nu)) and (pi/(2 nu), 3 pi/(2 nu))
    const double escape = std::numbers::pi * b / a;
    const auto roots = find_roots(branch, RootWindow{0.0, 1.5 * escape});
    if (roots.size() < 2) {
      throw RefinementError(
          fmt::format("delta-limit study found {} roots at nu={}, expected 2", roots.size(), nu));
    }
    rows.push_back({nu, a, b, roots[0], roots[1], kappa1, escape});
  }
  return rows;
}

}  // namespace indefmass
