#pragma once

#include <vector>

namespace indefmass {

/// |q^2| below this switches a region to straight-line solutions.
inline constexpr double kLinearBand = 1e-12;

enum class RegionKind { trig, hyper, linear };

/// Solution of psi'' = -q2 psi on [left, right], stored through its value and
/// slope at an anchor point x0:
///
///   psi(x) = value * C(x - x0) + slope * S(x - x0)
///
/// with C = cos(q u), cosh(p u) or 1 and S = sin(q u)/q, sinh(p u)/p or u.
struct RegionSolution {
  RegionKind kind;
  double q2;          // signed squared local wavenumber m * E
  double wavenumber;  // q, p or 0
  double value;
  double slope;
  double anchor;
  double left;
  double right;

  /// Builds a solution anchored at x0; kind follows the sign of q2.
  static RegionSolution make(double q2, double value, double slope, double x0, double left,
                             double right);

  double operator()(double x) const;
  double derivative(double x) const;

  /// Exact integral of psi^2 over [x1, x2] (inside the span).
  double integral_sq(double x1, double x2) const;
  /// Zeros of psi in [x1, x2], increasing.
  std::vector<double> zeros(double x1, double x2) const;
  /// Stationary points of psi in [x1, x2].
  std::vector<double> critical_points(double x1, double x2) const;
  /// max |psi| over [x1, x2].
  double max_abs(double x1, double x2) const;

  RegionSolution scaled(double factor) const;
  /// Image under x -> -x multiplied by parity_sign.
  RegionSolution reflected(double parity_sign) const;
};

/// The basis pair (C, S) at offset u for squared wavenumber q2.
struct Basis {
  double c;
  double s;
};
Basis basis(double q2, double u);

}  // namespace indefmass
