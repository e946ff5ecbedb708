#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "indefmass/matching.hpp"
#include "indefmass/profiles.hpp"
#include "indefmass/wavefunction.hpp"

namespace indefmass {

struct Level {
  double energy;
  Parity parity;
  int nodes;
  double localization;
};

enum class Verdict { bounded_below, unbounded_below, empty };
std::string_view to_string(Verdict verdict);

/// Negative-level counts with kappa <= k1 and kappa <= k2 (E = -kappa^2).
/// No finite computation proves unboundedness; this is the recorded evidence.
struct BoundednessEvidence {
  double k1;
  double k2;
  std::size_t count1;
  std::size_t count2;
  std::size_t required;  // floor((k2 - k1) / pi) - 1
};

struct SpectrumReport {
  std::string scenario_id;
  std::string profile_summary;
  EnergyWindow window;
  std::vector<Level> levels;  // ascending in E
  Verdict verdict;
  BoundednessEvidence evidence;
};

struct ScenarioOptions {
  std::string id = "scenario";
  std::vector<Parity> parities{Parity::even};
  EigenSettings eigen{};
  double evidence_k1 = 10.0;
  double evidence_k2 = 100.0;
};

/// unbounded_below iff count2 - count1 >= required and count2 > count1.
bool shows_unbounded_growth(const BoundednessEvidence& evidence);

/// Levels of the profile in the window with node counts and localisation in
/// |x| < a. Step profiles have their window clipped to E >= E_thr.
SpectrumReport run_scenario(const MassProfile& profile, EnergyWindow window,
                            const ScenarioOptions& options = {});

struct StaircaseRow {
  double beta;
  std::size_t negative_levels;  // admissible kappa_n <= beta
  int ground_nodes;             // nodes of the lowest even state
  double ground_energy;
};

/// beta_i = beta_max * i / steps for i = 1..steps, for the step profile with
/// E_thr = -beta^2. Admissibility kappa_n <= beta includes the boundary.
std::vector<StaircaseRow> ground_state_staircase(const WellGeometry& geometry, double beta_max,
                                                 std::size_t steps);

struct DeltaLimitRow {
  double nu;
  double a;
  double b;
  double leftmost;       // first root of tan(kappa nu) tanh(kappa (L-a)) = b
  double second;         // second root, ~ pi b / a
  double reduced;        // fixed point of kappa = (b/nu) coth(kappa L)
  double escape_estimate;  // pi b / a
};

/// For each nu: b = (b/nu) * nu and a = nu * b, so b/nu stays fixed while
/// the inner region shrinks.
std::vector<DeltaLimitRow> delta_limit_study(double b_over_nu, double half_width,
                                             const std::vector<double>& nus);

}  // namespace indefmass
