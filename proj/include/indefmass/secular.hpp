#pragma once

#include <cstddef>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "indefmass/profiles.hpp"

namespace indefmass {

inline constexpr double kDefaultPoleMargin = 1e-8 * std::numbers::pi;
inline constexpr double kDefaultRootTol = 1e-12;

/// Closed-form quantisation conditions for even-parity states. Each branch is
/// a residual of a single positive variable t: the wavenumber k (E = k^2) for
/// the positive-energy branches and kappa (E = -kappa^2) for the others.
enum class SecularModel {
  constant_neg_pos,   // s tanh(s k a) tan(k (L-a)) + 1,       s = sqrt(-m0)
  constant_neg_neg,   // s tan(s kappa a) tanh(kappa (L-a)) - 1
  tanh_pos,           // sqrt(tanh k^2) tanh(lambda a) tan(k (L-a)) + 1
  tanh_neg,           // sqrt(tanh kappa^2) tanh(mu a) tanh(kappa (L-a)) + 1
  step_neg,           // constant_neg_neg with m0 = -1, admissible only for kappa <= beta
  two_param_neg,      // tan(kappa nu) tanh(kappa (L-a)) - b,  nu = a/b
  two_param_reduced,  // kappa - (b/nu) coth(kappa L)
};

std::string_view to_string(SecularModel model);
/// Parses the kebab-case name ("constant-neg-pos", ...); nullopt if unknown.
std::optional<SecularModel> parse_secular_model(std::string_view name);

/// Values of the two curves whose intersections are the roots (graphical solution).
struct CurvePair {
  double first;
  double second;
};

class SecularBranch {
 public:
  static SecularBranch constant_neg_pos(WellGeometry geometry, double inner_mass = -1.0);
  static SecularBranch constant_neg_neg(WellGeometry geometry, double inner_mass = -1.0);
  static SecularBranch tanh_pos(WellGeometry geometry);
  static SecularBranch tanh_neg(WellGeometry geometry);
  static SecularBranch step_neg(WellGeometry geometry, double beta);
  /// nu is passed separately from the geometry's a so that tiny a, b keep full precision.
  static SecularBranch two_param_neg(WellGeometry geometry, double b, double nu);
  static SecularBranch two_param_reduced(double half_width, double b, double nu);

  SecularModel model() const noexcept { return model_; }
  const WellGeometry& geometry() const noexcept { return geometry_; }
  double inner_mass() const noexcept { return inner_mass_; }
  double beta() const noexcept { return beta_; }
  double b() const noexcept { return b_; }
  double nu() const noexcept { return nu_; }

  /// Angular frequency c of the tangent factor tan(c t); 0 when the residual has no poles.
  double pole_frequency() const noexcept;
  /// Tangent poles (2j+1) pi / (2c) inside (lo, hi).
  std::vector<double> poles(double lo, double hi) const;

  /// LHS - RHS of the secular equation. Throws DomainError for t <= 0 and
  /// PoleError within pole_margin of a tangent pole.
  double residual(double t, double pole_margin = kDefaultPoleMargin) const;

  /// Upper admissibility bound on t (beta for step_neg).
  std::optional<double> admissible_max() const;

  /// Energy of the state whose branch variable is t.
  double energy(double t) const;
  bool positive_energy() const noexcept;

  /// The two sides plotted in the graphical solution (e.g. -tanh k and
  /// cot k(L-1)). Throws PoleError near a pole of either curve.
  CurvePair curves(double t, double pole_margin = kDefaultPoleMargin) const;
  /// Poles of either curve inside (lo, hi).
  std::vector<double> curve_poles(double lo, double hi) const;

  std::string summary() const;

 private:
  SecularBranch(SecularModel model, WellGeometry geometry) : model_(model), geometry_(geometry) {}

  SecularModel model_;
  WellGeometry geometry_;
  double inner_mass_ = -1.0;
  double beta_ = 0.0;
  double b_ = 1.0;
  double nu_ = 1.0;
};

struct RootWindow {
  double lo;
  double hi;
  double tol = kDefaultRootTol;
  double pole_margin = kDefaultPoleMargin;
};

/// All roots in (lo, hi], increasing. The window is split at the tangent
/// poles and each pole-free bracket is scanned at 64 points with x4
/// refinement (4 levels) before bisection. step_neg also admits a root
/// sitting exactly at kappa = beta.
std::vector<double> find_roots(const SecularBranch& branch, const RootWindow& window);

/// First `count` roots of tan(beta a) tanh(beta (L-a)) = 1, i.e. the
/// constant_neg_neg roots. count must be >= 1.
std::vector<double> critical_betas(const WellGeometry& geometry, std::size_t count);

/// Unique positive solution of kappa = (b/nu) coth(kappa L).
double reduced_kappa1(double b_over_nu, double half_width, double tol = kDefaultRootTol);

}  // namespace indefmass
