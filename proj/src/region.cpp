#include "indefmass/region.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace indefmass {
namespace {

constexpr double kPi = std::numbers::pi;

RegionKind kind_of(double q2) {
  if (q2 > kLinearBand) return RegionKind::trig;
  if (q2 < -kLinearBand) return RegionKind::hyper;
  return RegionKind::linear;
}

// Antiderivatives from 0 of C^2, C S and S^2.
struct SquareIntegrals {
  double cc, cs, ss;
};

SquareIntegrals square_integrals(RegionKind kind, double q2, double k, double u) {
  switch (kind) {
    case RegionKind::linear:
      return {u, 0.5 * u * u, u * u * u / 3.0};
    case RegionKind::trig:
    case RegionKind::hyper: {
      const bool trig = kind == RegionKind::trig;
      const double w = 2.0 * k * u;
      const double sw = trig ? std::sin(w) : std::sinh(w);
      const double half = trig ? std::sin(k * u) : std::sinh(k * u);
      const double cc = 0.5 * u + sw / (4.0 * k);
      const double cs = half * half / (2.0 * k * k);
      double ss;
      if (std::fabs(w) < 1e-2) {
        // (w - sin w)/(4 k^3) loses digits for small w; series in the signed w^2.
        const double w2 = 4.0 * q2 * u * u;
        ss = u * u * u / 3.0 * (1.0 - w2 / 20.0 + w2 * w2 / 840.0);
      } else {
        ss = trig ? (w - sw) / (4.0 * k * k * k) : (sw - w) / (4.0 * k * k * k);
      }
      return {cc, cs, ss};
    }
  }
  return {0.0, 0.0, 0.0};
}

// Beyond this p|u| the hyperbolic solution is evaluated as A e^{pu} + B e^{-pu};
// the cosh/sinh form cancels catastrophically there.
constexpr double kExponentialSwitch = 2.0;

struct Exponentials {
  double grow, decay;
};

Exponentials exponentials(double value, double slope, double p) {
  return {0.5 * (value + slope / p), 0.5 * (value - slope / p)};
}

// coef * e^exponent without overflowing in the intermediate exponential
double scaled_exp(double coef, double exponent) {
  if (coef == 0.0) return 0.0;
  return std::copysign(std::exp(std::log(std::fabs(coef)) + exponent), coef);
}

}  // namespace

Basis basis(double q2, double u) {
  switch (kind_of(q2)) {
    case RegionKind::trig: {
      const double q = std::sqrt(q2);
      return {std::cos(q * u), std::sin(q * u) / q};
    }
    case RegionKind::hyper: {
      const double p = std::sqrt(-q2);
      return {std::cosh(p * u), std::sinh(p * u) / p};
    }
    case RegionKind::linear:
      return {1.0, u};
  }
  return {1.0, u};
}

RegionSolution RegionSolution::make(double q2, double value, double slope, double x0,
                                    double left, double right) {
  const RegionKind kind = kind_of(q2);
  const double k = kind == RegionKind::linear ? 0.0 : std::sqrt(std::fabs(q2));
  return RegionSolution{kind, q2, k, value, slope, x0, left, right};
}

double RegionSolution::operator()(double x) const {
  const double u = x - anchor;
  if (kind == RegionKind::hyper && wavenumber * std::fabs(u) > kExponentialSwitch) {
    const Exponentials e = exponentials(value, slope, wavenumber);
    return scaled_exp(e.grow, wavenumber * u) + scaled_exp(e.decay, -wavenumber * u);
  }
  const Basis b = basis(q2, u);
  return value * b.c + slope * b.s;
}

double RegionSolution::derivative(double x) const {
  const double u = x - anchor;
  if (kind == RegionKind::hyper && wavenumber * std::fabs(u) > kExponentialSwitch) {
    const Exponentials e = exponentials(value, slope, wavenumber);
    return wavenumber * (scaled_exp(e.grow, wavenumber * u) - scaled_exp(e.decay, -wavenumber * u));
  }
  // C' = -q2 S, S' = C
  const Basis b = basis(q2, u);
  const double q2eff = kind == RegionKind::linear ? 0.0 : q2;
  return -q2eff * value * b.s + slope * b.c;
}

double RegionSolution::integral_sq(double x1, double x2) const {
  if (x2 < x1) std::swap(x1, x2);
  const double u1 = x1 - anchor, u2 = x2 - anchor;
  if (kind == RegionKind::hyper &&
      wavenumber * std::max(std::fabs(u1), std::fabs(u2)) > kExponentialSwitch) {
    const double p = wavenumber, du = u2 - u1;
    const Exponentials e = exponentials(value, slope, p);
    const double span = -std::expm1(-2.0 * p * du) / (2.0 * p);
    const double g = scaled_exp(e.grow, p * u2), d = scaled_exp(e.decay, -p * u1);
    return g * g * span + d * d * span + 2.0 * e.grow * e.decay * du;
  }
  const auto lo = square_integrals(kind, q2, wavenumber, x1 - anchor);
  const auto hi = square_integrals(kind, q2, wavenumber, x2 - anchor);
  return value * value * (hi.cc - lo.cc) + 2.0 * value * slope * (hi.cs - lo.cs) +
         slope * slope * (hi.ss - lo.ss);
}

std::vector<double> RegionSolution::zeros(double x1, double x2) const {
  std::vector<double> out;
  const double u1 = x1 - anchor, u2 = x2 - anchor;
  switch (kind) {
    case RegionKind::trig: {
      // psi = R cos(q u - phi), zeros at q u = phi + pi/2 + j pi
      const double q = wavenumber;
      const double phi = std::atan2(slope / q, value);
      const double jlo = std::ceil((q * u1 - phi) / kPi - 0.5);
      const double jhi = std::floor((q * u2 - phi) / kPi - 0.5);
      for (double j = jlo; j <= jhi; j += 1.0) out.push_back(anchor + (phi + kPi * (j + 0.5)) / q);
      break;
    }
    case RegionKind::hyper: {
      // tanh(p u) = -value p / slope
      if (slope == 0.0) break;
      const double p = wavenumber;
      const double r = -value * p / slope;
      if (std::fabs(r) >= 1.0) break;
      const double u = std::atanh(r) / p;
      if (u >= u1 && u <= u2) out.push_back(anchor + u);
      break;
    }
    case RegionKind::linear: {
      if (slope == 0.0) break;
      const double u = -value / slope;
      if (u >= u1 && u <= u2) out.push_back(anchor + u);
      break;
    }
  }
  return out;
}

std::vector<double> RegionSolution::critical_points(double x1, double x2) const {
  std::vector<double> out;
  const double u1 = x1 - anchor, u2 = x2 - anchor;
  switch (kind) {
    case RegionKind::trig: {
      const double q = wavenumber;
      const double phi = std::atan2(slope / q, value);
      const double jlo = std::ceil((q * u1 - phi) / kPi);
      const double jhi = std::floor((q * u2 - phi) / kPi);
      for (double j = jlo; j <= jhi; j += 1.0) out.push_back(anchor + (phi + kPi * j) / q);
      break;
    }
    case RegionKind::hyper: {
      // tanh(p u) = -slope / (value p)
      if (value == 0.0) break;
      const double p = wavenumber;
      const double r = -slope / (value * p);
      if (std::fabs(r) >= 1.0) break;
      const double u = std::atanh(r) / p;
      if (u >= u1 && u <= u2) out.push_back(anchor + u);
      break;
    }
    case RegionKind::linear:
      break;
  }
  return out;
}

double RegionSolution::max_abs(double x1, double x2) const {
  double m = std::max(std::fabs((*this)(x1)), std::fabs((*this)(x2)));
  if (kind == RegionKind::trig && !critical_points(x1, x2).empty()) {
    // every stationary point of R cos(q u - phi) reaches the amplitude R
    return std::max(m, std::hypot(value, slope / wavenumber));
  }
  for (double x : critical_points(x1, x2)) m = std::max(m, std::fabs((*this)(x)));
  return m;
}

RegionSolution RegionSolution::scaled(double factor) const {
  RegionSolution r = *this;
  r.value *= factor;
  r.slope *= factor;
  return r;
}

RegionSolution RegionSolution::reflected(double parity_sign) const {
  RegionSolution r = *this;
  r.anchor = -anchor;
  r.left = -right;
  r.right = -left;
  r.value = parity_sign * value;
  r.slope = -parity_sign * slope;
  return r;
}

}  // namespace indefmass
