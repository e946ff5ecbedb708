#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "indefmass/region.hpp"

namespace indefmass {

enum class Parity { even, odd };

std::string_view to_string(Parity parity);
std::optional<Parity> parse_parity(std::string_view name);
inline double parity_sign(Parity p) { return p == Parity::even ? 1.0 : -1.0; }

/// Unit-L2-normalised state on (-L, L) assembled from the half-well pieces
/// on [-L, -a] and [-a, 0] by parity reflection. Values for x > 0 are always
/// parity_sign * psi(-x), so the symmetry holds exactly.
class PiecewiseWavefunction {
 public:
  /// Takes the unnormalised half-well solution; throws DomainError if it has
  /// zero or non-finite norm.
  PiecewiseWavefunction(const RegionSolution& outer_left, const RegionSolution& inner_left,
                        Parity parity, double energy);

  /// Regions ordered left to right: [-L,-a], [-a,0], [0,a], [a,L].
  const std::array<RegionSolution, 4>& regions() const noexcept { return regions_; }
  Parity parity() const noexcept { return parity_; }
  double energy() const noexcept { return energy_; }
  /// L2 norm of the solution before normalisation.
  double norm() const noexcept { return norm_; }
  double half_width() const noexcept { return half_width_; }
  double inner_half_width() const noexcept { return inner_half_width_; }

  /// Throws DomainError outside [-L, L]; exactly 0 at x = +-L.
  double operator()(double x) const;
  double derivative(double x) const;

  /// Exact integral of psi^2 over [x1, x2] (clamped to the well).
  double integral_sq(double x1, double x2) const;

 private:
  const RegionSolution& left_region(double x) const;

  std::array<RegionSolution, 4> regions_;
  Parity parity_;
  double energy_;
  double norm_;
  double half_width_;
  double inner_half_width_;
};

/// Interior zeros of psi, increasing. Every zero of a non-trivial solution
/// is simple, so each one is a sign change.
std::vector<double> node_positions(const PiecewiseWavefunction& psi);
int count_nodes(const PiecewiseWavefunction& psi);

/// Probability inside |x| < a relative to the whole well.
double localization_fraction(const PiecewiseWavefunction& psi, double inner_half_width);

}  // namespace indefmass
