#pragma once

#include <functional>
#include <vector>

namespace indefmass {

/// Interval [lo, hi] with f(lo) * f(hi) <= 0. lo == hi marks an exact zero.
struct Bracket {
  double lo;
  double hi;
};

struct ScanSettings {
  int samples = 64;
  int refine_factor = 4;
  int max_depth = 4;
};

using ScalarFunction = std::function<double(double)>;

/// Samples f uniformly on [lo, hi] and returns one bracket per isolated
/// sign change, in increasing order.
///
/// Cells with a sign change are subdivided until each piece holds exactly
/// one change; cells without one are subdivided only where |f| has a sampled
/// local minimum, which is where a pair of close roots can hide. Throws
/// RefinementError when a cell still holds more than one sign change at
/// max_depth.
std::vector<Bracket> isolate_sign_changes(const ScalarFunction& f, double lo, double hi,
                                          const ScanSettings& settings);

/// Bisects a bracket down to width <= tol, or until the midpoint no longer
/// moves in double precision.
double bisect(const ScalarFunction& f, Bracket bracket, double tol);

}  // namespace indefmass
