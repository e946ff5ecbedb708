#include "indefmass/secular.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <utility>

#include <fmt/format.h>

#include "indefmass/errors.hpp"
#include "indefmass/rootscan.hpp"

namespace indefmass {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEndpointZeroTol = 1e-12;

constexpr std::array<std::pair<SecularModel, std::string_view>, 7> kModelNames{{
    {SecularModel::constant_neg_pos, "constant-neg-pos"},
    {SecularModel::constant_neg_neg, "constant-neg-neg"},
    {SecularModel::tanh_pos, "tanh-pos"},
    {SecularModel::tanh_neg, "tanh-neg"},
    {SecularModel::step_neg, "step-neg"},
    {SecularModel::two_param_neg, "two-param-neg"},
    {SecularModel::two_param_reduced, "two-param-reduced"},
}};

double coth(double x) { return 1.0 / std::tanh(x); }

// Poles of tan(c t), cot(c t) and friends: t_j = (j + offset) pi / c.
std::vector<double> pole_grid(double c, double offset, double lo, double hi) {
  std::vector<double> out;
  if (!(c > 0.0)) return out;
  const double first = std::ceil(lo * c / kPi - offset);
  for (double j = std::max(first, 0.0);; j += 1.0) {
    const double t = (j + offset) * kPi / c;
    if (t >= hi) break;
    if (t > lo) out.push_back(t);
  }
  return out;
}

void check_pole(double c, double offset, double t, double margin, const char* what) {
  if (!(c > 0.0)) return;
  const double j = std::round(t * c / kPi - offset);
  const double pole = (j + offset) * kPi / c;
  if (std::fabs(t - pole) < margin) {
    throw PoleError(fmt::format("t={} is within {} of the {} pole at {}", t, margin, what, pole));
  }
}

}  // namespace

std::string_view to_string(SecularModel model) {
  for (const auto& [m, name] : kModelNames)
    if (m == model) return name;
  return "unknown";
}

std::optional<SecularModel> parse_secular_model(std::string_view name) {
  for (const auto& [m, n] : kModelNames)
    if (n == name) return m;
  return std::nullopt;
}

SecularBranch SecularBranch::constant_neg_pos(WellGeometry geometry, double inner_mass) {
  if (!(inner_mass < 0.0)) throw InvalidArgument("constant-neg-pos needs a negative inner mass");
  SecularBranch br(SecularModel::constant_neg_pos, geometry);
  br.inner_mass_ = inner_mass;
  return br;
}

SecularBranch SecularBranch::constant_neg_neg(WellGeometry geometry, double inner_mass) {
  if (!(inner_mass < 0.0)) throw InvalidArgument("constant-neg-neg needs a negative inner mass");
  SecularBranch br(SecularModel::constant_neg_neg, geometry);
  br.inner_mass_ = inner_mass;
  return br;
}

SecularBranch SecularBranch::tanh_pos(WellGeometry geometry) {
  return SecularBranch(SecularModel::tanh_pos, geometry);
}

SecularBranch SecularBranch::tanh_neg(WellGeometry geometry) {
  return SecularBranch(SecularModel::tanh_neg, geometry);
}

SecularBranch SecularBranch::step_neg(WellGeometry geometry, double beta) {
  if (!std::isfinite(beta) || !(beta > 0.0)) throw InvalidArgument("step-neg needs beta > 0");
  SecularBranch br(SecularModel::step_neg, geometry);
  br.beta_ = beta;
  return br;
}

SecularBranch SecularBranch::two_param_neg(WellGeometry geometry, double b, double nu) {
  if (!(b > 0.0) || !(nu > 0.0) || !std::isfinite(b) || !std::isfinite(nu))
    throw InvalidArgument("two-param-neg needs b > 0 and nu > 0");
  const double a = geometry.inner_half_width();
  if (std::fabs(nu * b - a) > 1e-9 * a)
    throw InvalidArgument(fmt::format("nu={} is inconsistent with a/b={}", nu, a / b));
  SecularBranch br(SecularModel::two_param_neg, geometry);
  br.b_ = b;
  br.nu_ = nu;
  return br;
}

SecularBranch SecularBranch::two_param_reduced(double half_width, double b, double nu) {
  if (!(b > 0.0) || !(nu > 0.0) || !std::isfinite(b) || !std::isfinite(nu))
    throw InvalidArgument("two-param-reduced needs b > 0 and nu > 0");
  SecularBranch br(SecularModel::two_param_reduced, WellGeometry(half_width, nu * b));
  br.b_ = b;
  br.nu_ = nu;
  return br;
}

double SecularBranch::pole_frequency() const noexcept {
  const double a = geometry_.inner_half_width();
  switch (model_) {
    case SecularModel::constant_neg_pos:
    case SecularModel::tanh_pos:
      return geometry_.outer_span();
    case SecularModel::constant_neg_neg:
    case SecularModel::step_neg:
      return std::sqrt(-inner_mass_) * a;
    case SecularModel::two_param_neg:
      return nu_;
    case SecularModel::tanh_neg:
    case SecularModel::two_param_reduced:
      return 0.0;
  }
  return 0.0;
}

std::vector<double> SecularBranch::poles(double lo, double hi) const {
  return pole_grid(pole_frequency(), 0.5, lo, hi);
}

double SecularBranch::residual(double t, double pole_margin) const {
  if (!(t > 0.0) || !std::isfinite(t))
    throw DomainError(fmt::format("secular variable must be positive and finite (got {})", t));
  check_pole(pole_frequency(), 0.5, t, pole_margin, "tangent");

  const double a = geometry_.inner_half_width();
  const double span = geometry_.outer_span();
  switch (model_) {
    case SecularModel::constant_neg_pos: {
      const double s = std::sqrt(-inner_mass_);
      return s * std::tanh(s * t * a) * std::tan(t * span) + 1.0;
    }
    case SecularModel::constant_neg_neg:
    case SecularModel::step_neg: {
      const double s = std::sqrt(-inner_mass_);
      return s * std::tan(s * t * a) * std::tanh(t * span) - 1.0;
    }
    case SecularModel::tanh_pos: {
      const double root = std::sqrt(std::tanh(t * t));
      const double lambda = t * root;
      return root * std::tanh(lambda * a) * std::tan(t * span) + 1.0;
    }
    case SecularModel::tanh_neg: {
      const double root = std::sqrt(std::tanh(t * t));
      const double mu = t * root;
      return root * std::tanh(mu * a) * std::tanh(t * span) + 1.0;
    }
    case SecularModel::two_param_neg:
      return std::tan(t * nu_) * std::tanh(t * span) - b_;
    case SecularModel::two_param_reduced:
      return t - (b_ / nu_) * coth(t * geometry_.half_width());
  }
  return 0.0;
}

std::optional<double> SecularBranch::admissible_max() const {
  if (model_ == SecularModel::step_neg) return beta_;
  return std::nullopt;
}

bool SecularBranch::positive_energy() const noexcept {
  return model_ == SecularModel::constant_neg_pos || model_ == SecularModel::tanh_pos;
}

double SecularBranch::energy(double t) const { return positive_energy() ? t * t : -t * t; }

CurvePair SecularBranch::curves(double t, double pole_margin) const {
  if (!(t > 0.0) || !std::isfinite(t))
    throw DomainError(fmt::format("curve variable must be positive and finite (got {})", t));
  const double a = geometry_.inner_half_width();
  const double span = geometry_.outer_span();
  switch (model_) {
    case SecularModel::constant_neg_pos: {
      check_pole(span, 0.0, t, pole_margin, "cotangent");
      const double s = std::sqrt(-inner_mass_);
      return {-s * std::tanh(s * t * a), 1.0 / std::tan(t * span)};
    }
    case SecularModel::constant_neg_neg:
    case SecularModel::step_neg: {
      check_pole(pole_frequency(), 0.5, t, pole_margin, "tangent");
      const double s = std::sqrt(-inner_mass_);
      return {std::tan(s * t * a), coth(t * span) / s};
    }
    case SecularModel::tanh_pos: {
      check_pole(span, 0.0, t, pole_margin, "cotangent");
      const double root = std::sqrt(std::tanh(t * t));
      return {-root * std::tanh(t * root * a), 1.0 / std::tan(t * span)};
    }
    case SecularModel::tanh_neg: {
      const double root = std::sqrt(std::tanh(t * t));
      return {-root * std::tanh(t * root * a), coth(t * span)};
    }
    case SecularModel::two_param_neg:
      check_pole(nu_, 0.5, t, pole_margin, "tangent");
      return {std::tan(t * nu_), b_ * coth(t * span)};
    case SecularModel::two_param_reduced:
      return {t, (b_ / nu_) * coth(t * geometry_.half_width())};
  }
  return {0.0, 0.0};
}

std::vector<double> SecularBranch::curve_poles(double lo, double hi) const {
  switch (model_) {
    case SecularModel::constant_neg_pos:
    case SecularModel::tanh_pos:
      return pole_grid(geometry_.outer_span(), 0.0, lo, hi);
    case SecularModel::constant_neg_neg:
    case SecularModel::step_neg:
    case SecularModel::two_param_neg:
      return poles(lo, hi);
    case SecularModel::tanh_neg:
    case SecularModel::two_param_reduced:
      return {};
  }
  return {};
}

std::string SecularBranch::summary() const {
  std::string out = fmt::format("{} L={} a={}", to_string(model_), geometry_.half_width(),
                                geometry_.inner_half_width());
  switch (model_) {
    case SecularModel::constant_neg_pos:
    case SecularModel::constant_neg_neg:
      out += fmt::format(" m0={}", inner_mass_);
      break;
    case SecularModel::step_neg:
      out += fmt::format(" beta={}", beta_);
      break;
    case SecularModel::two_param_neg:
    case SecularModel::two_param_reduced:
      out += fmt::format(" b={} nu={}", b_, nu_);
      break;
    default:
      break;
  }
  return out;
}

std::vector<double> find_roots(const SecularBranch& branch, const RootWindow& window) {
  if (!(window.lo >= 0.0) || !(window.lo < window.hi) || !std::isfinite(window.hi))
    throw InvalidArgument(fmt::format("root window requires 0 <= lo < hi (got ({}, {}])",
                                      window.lo, window.hi));
  if (!(window.tol > 0.0) || !(window.pole_margin > 0.0))
    throw InvalidArgument("root window requires tol > 0 and pole_margin > 0");

  double hi = window.hi;
  const auto admissible = branch.admissible_max();
  const bool closed_at_bound = admissible && *admissible <= hi;
  if (admissible) hi = std::min(hi, *admissible);
  if (!(window.lo < hi)) return {};

  const double margin = window.pole_margin;
  const ScalarFunction f = [&](double t) { return branch.residual(t, margin); };
  const ScanSettings settings{};

  // Brackets are whole pole-free intervals, independent of the window, so a
  // root comes out bit-identical whatever window it is searched in.
  std::vector<std::pair<double, double>> brackets;
  const double c = branch.pole_frequency();
  if (c > 0.0) {
    const double period = kPi / c;
    const auto edge = [&](double p) {
      // strictly outside the exclusion zone despite rounding in t
      return margin * (1.0 + 1e-6) + 8.0 * std::numeric_limits<double>::epsilon() * p;
    };
    double left = 0.5 * period * 1e-12;
    for (double p : branch.poles(0.0, hi + period)) {
      if (p - edge(p) > window.lo && left < p - edge(p)) {
        brackets.emplace_back(left, std::min(p - edge(p), admissible ? hi : p - edge(p)));
      }
      left = p + edge(p);
      if (left >= hi) break;
    }
  } else {
    brackets.emplace_back(window.lo > 0.0 ? window.lo : hi * 1e-12, hi);
  }

  std::vector<double> roots;
  for (const auto& [l, r] : brackets) {
    if (!(l < r)) continue;
    for (const Bracket& br : isolate_sign_changes(f, l, r, settings)) {
      const double root = bisect(f, br, window.tol);
      if (root > window.lo && root <= hi) roots.push_back(root);
    }
  }

  if (closed_at_bound) {
    const double bound = *admissible;
    const bool near_pole = !branch.poles(bound - margin, bound + margin).empty();
    if (!near_pole && std::fabs(branch.residual(bound, margin)) <= kEndpointZeroTol &&
        (roots.empty() || bound - roots.back() > window.tol)) {
      roots.push_back(bound);
    }
  }

  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end(),
                          [&](double x, double y) { return y - x <= window.tol; }),
              roots.end());
  return roots;
}

std::vector<double> critical_betas(const WellGeometry& geometry, std::size_t count) {
  if (count == 0) throw InvalidArgument("critical_betas needs count >= 1");
  const auto branch = SecularBranch::constant_neg_neg(geometry);
  // One root per tangent branch, so (count + 1) periods of tan(kappa a) suffice.
  double hi = (static_cast<double>(count) + 1.0) * kPi / geometry.inner_half_width();
  for (;;) {
    auto roots = find_roots(branch, RootWindow{0.0, hi});
    if (roots.size() >= count) {
      roots.resize(count);
      return roots;
    }
    hi *= 2.0;
  }
}

double reduced_kappa1(double b_over_nu, double half_width, double tol) {
  if (!(b_over_nu > 0.0) || !std::isfinite(b_over_nu))
    throw InvalidArgument("reduced_kappa1 needs b/nu > 0");
  if (!(half_width > 0.0) || !std::isfinite(half_width))
    throw InvalidArgument("reduced_kappa1 needs L > 0");
  if (!(tol > 0.0)) throw InvalidArgument("reduced_kappa1 needs tol > 0");

  // kappa - B coth(kappa L) increases from -inf; B < kappa_1 <= B coth(B L).
  const auto f = [&](double k) { return k - b_over_nu * coth(k * half_width); };
  const double lo = b_over_nu;
  const double hi = b_over_nu * coth(b_over_nu * half_width);
  if (!(hi > lo)) return lo;
  return bisect(f, Bracket{lo, hi}, tol);
}

}  // namespace indefmass
