#pragma once

#include <optional>
#include <string>
#include <variant>

namespace indefmass {

/// Infinite square well on (-L, L) with an inner region |x| < a.
///
/// Units are fixed to hbar^2/2 = 1, so the Schroedinger equation in each
/// region reads -psi'' / m = E psi.
class WellGeometry {
 public:
  /// Throws InvalidArgument unless 0 < a < L.
  explicit WellGeometry(double half_width, double inner_half_width = 1.0);

  double half_width() const noexcept { return half_width_; }
  double inner_half_width() const noexcept { return inner_half_width_; }
  /// Width L - a of each outer region.
  double outer_span() const noexcept { return half_width_ - inner_half_width_; }

  bool operator==(const WellGeometry&) const = default;

 private:
  double half_width_;
  double inner_half_width_;
};

/// Energy-independent inner mass m0.
struct ConstantInner {
  double mass;
  bool operator==(const ConstantInner&) const = default;
};

/// Inner mass m0(E) = -tanh(E).
struct TanhInner {
  bool operator==(const TanhInner&) const = default;
};

/// Inner mass -1 for E >= threshold and +1 below it.
struct StepInner {
  double threshold;
  bool operator==(const StepInner&) const = default;
};

/// Inner mass -1/b^2 with constant b > 0.
struct ScaledInner {
  double b;
  bool operator==(const ScaledInner&) const = default;
};

using EnergyDependence = std::variant<ConstantInner, TanhInner, StepInner, ScaledInner>;

enum class Region { inner, outer };

/// Symmetric, piecewise-constant effective mass m(x, E) with a single
/// breakpoint at |x| = a. The outer mass is always 1.
class MassProfile {
 public:
  MassProfile(WellGeometry geometry, EnergyDependence inner);

  static MassProfile constant(WellGeometry geometry, double inner_mass);
  static MassProfile uniform(WellGeometry geometry) { return constant(geometry, 1.0); }
  static MassProfile tanh(WellGeometry geometry);
  static MassProfile step(WellGeometry geometry, double threshold);
  /// Step profile with threshold -beta^2.
  static MassProfile step_beta(WellGeometry geometry, double beta);
  static MassProfile scaled(WellGeometry geometry, double b);

  const WellGeometry& geometry() const noexcept { return geometry_; }
  const EnergyDependence& inner() const noexcept { return inner_; }
  double outer_mass() const noexcept { return outer_mass_; }

  /// m(x, E); throws DomainError for |x| >= L. |x| == a belongs to the outer region.
  double mass_at(double x, double energy) const;
  double mass(Region region, double energy) const;
  double inner_mass(double energy) const;

  /// Squared local wavenumber m * E. Positive selects oscillatory solutions,
  /// negative selects hyperbolic ones.
  double local_q2(Region region, double energy) const;

  /// Energy at which m jumps (StepInner only).
  std::optional<double> discontinuity() const;

  std::string summary() const;

  bool operator==(const MassProfile&) const = default;

 private:
  WellGeometry geometry_;
  double outer_mass_ = 1.0;
  EnergyDependence inner_;
};

}  // namespace indefmass
