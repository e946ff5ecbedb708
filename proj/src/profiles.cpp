#include "indefmass/profiles.hpp"

#include <cmath>

#include <fmt/format.h>

#include "indefmass/errors.hpp"

namespace indefmass {

WellGeometry::WellGeometry(double half_width, double inner_half_width)
    : half_width_(half_width), inner_half_width_(inner_half_width) {
  if (!std::isfinite(half_width) || !std::isfinite(inner_half_width) ||
      !(inner_half_width > 0.0) || !(inner_half_width < half_width)) {
    throw InvalidArgument(fmt::format("well geometry requires 0 < a < L (got L={}, a={})",
                                      half_width, inner_half_width));
  }
}

namespace {

struct InnerMass {
  double energy;
  double operator()(const ConstantInner& c) const { return c.mass; }
  double operator()(const TanhInner&) const { return -std::tanh(energy); }
  double operator()(const StepInner& s) const { return energy >= s.threshold ? -1.0 : 1.0; }
  double operator()(const ScaledInner& s) const { return -1.0 / (s.b * s.b); }
};

struct Validate {
  void operator()(const ConstantInner& c) const {
    if (!std::isfinite(c.mass)) throw InvalidArgument("inner mass must be finite");
  }
  void operator()(const TanhInner&) const {}
  void operator()(const StepInner& s) const {
    if (!std::isfinite(s.threshold)) throw InvalidArgument("step threshold must be finite");
  }
  void operator()(const ScaledInner& s) const {
    if (!std::isfinite(s.b) || !(s.b > 0.0)) throw InvalidArgument("scale b must be positive");
  }
};

struct Describe {
  std::string operator()(const ConstantInner& c) const { return fmt::format("constant(m0={})", c.mass); }
  std::string operator()(const TanhInner&) const { return "tanh(m0=-tanh E)"; }
  std::string operator()(const StepInner& s) const { return fmt::format("step(E_thr={})", s.threshold); }
  std::string operator()(const ScaledInner& s) const { return fmt::format("scaled(b={})", s.b); }
};

}  // namespace

MassProfile::MassProfile(WellGeometry geometry, EnergyDependence inner)
    : geometry_(geometry), inner_(inner) {
  std::visit(Validate{}, inner_);
}

MassProfile MassProfile::constant(WellGeometry geometry, double inner_mass) {
  return MassProfile(geometry, ConstantInner{inner_mass});
}

MassProfile MassProfile::tanh(WellGeometry geometry) { return MassProfile(geometry, TanhInner{}); }

MassProfile MassProfile::step(WellGeometry geometry, double threshold) {
  return MassProfile(geometry, StepInner{threshold});
}

MassProfile MassProfile::step_beta(WellGeometry geometry, double beta) {
  if (!std::isfinite(beta)) throw InvalidArgument("beta must be finite");
  return step(geometry, -beta * beta);
}

MassProfile MassProfile::scaled(WellGeometry geometry, double b) {
  return MassProfile(geometry, ScaledInner{b});
}

double MassProfile::inner_mass(double energy) const {
  return std::visit(InnerMass{energy}, inner_);
}

double MassProfile::mass(Region region, double energy) const {
  return region == Region::inner ? inner_mass(energy) : outer_mass_;
}

double MassProfile::mass_at(double x, double energy) const {
  const double ax = std::fabs(x);
  if (!(ax < geometry_.half_width())) {
    throw DomainError(fmt::format("x={} lies outside the well (L={})", x, geometry_.half_width()));
  }
  return ax < geometry_.inner_half_width() ? inner_mass(energy) : outer_mass_;
}

double MassProfile::local_q2(Region region, double energy) const {
  return mass(region, energy) * energy;
}

std::optional<double> MassProfile::discontinuity() const {
  if (const auto* s = std::get_if<StepInner>(&inner_)) return s->threshold;
  return std::nullopt;
}

std::string MassProfile::summary() const {
  return fmt::format("{} L={} a={}", std::visit(Describe{}, inner_), geometry_.half_width(),
                     geometry_.inner_half_width());
}

}  // namespace indefmass
