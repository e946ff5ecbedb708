#pragma once

#include <vector>

#include "indefmass/profiles.hpp"
#include "indefmass/wavefunction.hpp"

namespace indefmass {

struct EnergyWindow {
  double lo;
  double hi;
};

struct EigenSettings {
  double tol = 1e-12;  // absolute, in E
  int samples = 512;   // per window segment, uniform in sign(E) sqrt|E|
  int refine_factor = 4;
  int max_depth = 4;
  /// |mismatch| at a closed step threshold below which the threshold itself
  /// is accepted as an eigenvalue.
  double threshold_zero_tol = 1e-9;
};

/// Solution that vanishes at x = -L with psi and psi' continuous at x = -a
/// (no 1/m weighting of the derivative), reflected by parity. The condition
/// at x = 0 is left free; its residual is the mismatch.
PiecewiseWavefunction build_solution(const MassProfile& profile, double energy, Parity parity);

/// psi'(0) (even) or psi(0) (odd) divided by max |psi| on [-L, 0]; zero
/// exactly at the eigenvalues.
double mismatch(const MassProfile& profile, double energy, Parity parity);

struct Eigenstate {
  double energy;
  PiecewiseWavefunction state;
};

/// All eigenvalues in (lo, hi) of the given parity, increasing, with their
/// normalised states. The window is split at E = 0 and at a step threshold;
/// a step threshold is a closed end (E >= E_thr belongs to the upper branch).
/// Throws RefinementError if isolation fails at maximum scan depth.
std::vector<Eigenstate> eigenvalues(const MassProfile& profile, EnergyWindow window,
                                    Parity parity, const EigenSettings& settings = {});

}  // namespace indefmass
