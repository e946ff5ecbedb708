#include "indefmass/wavefunction.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "indefmass/errors.hpp"

namespace indefmass {

std::string_view to_string(Parity parity) { return parity == Parity::even ? "even" : "odd"; }

std::optional<Parity> parse_parity(std::string_view name) {
  if (name == "even") return Parity::even;
  if (name == "odd") return Parity::odd;
  return std::nullopt;
}

PiecewiseWavefunction::PiecewiseWavefunction(const RegionSolution& outer_left,
                                             const RegionSolution& inner_left, Parity parity,
                                             double energy)
    : regions_{outer_left, inner_left, inner_left, outer_left},
      parity_(parity),
      energy_(energy),
      half_width_(-outer_left.left),
      inner_half_width_(-inner_left.left) {
  // integrate at unit amplitude so that squares cannot overflow
  const double amplitude = std::max(outer_left.max_abs(outer_left.left, outer_left.right),
                                    inner_left.max_abs(inner_left.left, inner_left.right));
  if (!std::isfinite(amplitude) || !(amplitude > 0.0)) {
    throw DomainError(fmt::format("wavefunction at E={} has unusable amplitude {}", energy, amplitude));
  }
  const RegionSolution outer = outer_left.scaled(1.0 / amplitude);
  const RegionSolution inner = inner_left.scaled(1.0 / amplitude);
  const double half = outer.integral_sq(outer.left, outer.right) + inner.integral_sq(inner.left, inner.right);
  const double unit_norm = std::sqrt(2.0 * half);
  if (!std::isfinite(unit_norm) || !(unit_norm > 0.0)) {
    throw DomainError(fmt::format("wavefunction at E={} has unusable norm {}", energy, unit_norm));
  }
  norm_ = unit_norm * amplitude;
  const double sign = parity_sign(parity);
  regions_[0] = outer.scaled(1.0 / unit_norm);
  regions_[1] = inner.scaled(1.0 / unit_norm);
  regions_[2] = regions_[1].reflected(sign);
  regions_[3] = regions_[0].reflected(sign);
}

const RegionSolution& PiecewiseWavefunction::left_region(double x) const {
  return x <= -inner_half_width_ ? regions_[0] : regions_[1];
}

double PiecewiseWavefunction::operator()(double x) const {
  const double ax = std::fabs(x);
  if (!(ax <= half_width_))
    throw DomainError(fmt::format("x={} lies outside [-{}, {}]", x, half_width_, half_width_));
  if (ax == half_width_) return 0.0;
  if (x <= 0.0) return left_region(x)(x);
  return parity_sign(parity_) * left_region(-x)(-x);
}

double PiecewiseWavefunction::derivative(double x) const {
  const double ax = std::fabs(x);
  if (!(ax <= half_width_))
    throw DomainError(fmt::format("x={} lies outside [-{}, {}]", x, half_width_, half_width_));
  if (x <= 0.0) return left_region(x).derivative(x);
  return -parity_sign(parity_) * left_region(-x).derivative(-x);
}

double PiecewiseWavefunction::integral_sq(double x1, double x2) const {
  if (x2 < x1) std::swap(x1, x2);
  double total = 0.0;
  for (const auto& r : regions_) {
    const double lo = std::max(x1, r.left), hi = std::min(x2, r.right);
    if (lo < hi) total += r.integral_sq(lo, hi);
  }
  return total;
}

std::vector<double> node_positions(const PiecewiseWavefunction& psi) {
  const double L = psi.half_width();
  const double tol = 1e-10 * L;
  std::vector<double> left;
  for (int i = 0; i < 2; ++i) {
    const auto& r = psi.regions()[i];
    for (double z : r.zeros(r.left - tol, r.right + tol)) left.push_back(z);
  }
  // Odd states vanish at the centre; left zeros within a small fraction of the
  // local wavelength of it are that node displaced by the eigenvalue error.
  const bool odd = psi.parity() == Parity::odd;
  const double centre_band = 1e-5 / std::max(psi.regions()[1].wavenumber, 1.0 / L);
  std::vector<double> all;
  if (odd) all.push_back(0.0);
  for (double z : left) {
    if (odd && std::fabs(z) <= centre_band) continue;
    if (z > 0.0) continue;
    all.push_back(z);
    all.push_back(-z);
  }
  std::sort(all.begin(), all.end());
  std::vector<double> out;
  for (double z : all) {
    if (std::fabs(z) >= L - tol) continue;
    if (!out.empty() && z - out.back() <= tol) continue;
    out.push_back(z);
  }
  return out;
}

int count_nodes(const PiecewiseWavefunction& psi) {
  return static_cast<int>(node_positions(psi).size());
}

double localization_fraction(const PiecewiseWavefunction& psi, double inner_half_width) {
  if (!(inner_half_width >= 0.0))
    throw InvalidArgument("localization_fraction needs a >= 0");
  const double L = psi.half_width();
  const double a = std::min(inner_half_width, L);
  const double total = psi.integral_sq(-L, L);
  const double inner = psi.integral_sq(-a, a);
  return std::clamp(inner / total, 0.0, 1.0);
}

}  // namespace indefmass
