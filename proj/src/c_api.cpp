#include "indefmass/indefmass.h"

#include <algorithm>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "indefmass/errors.hpp"
#include "indefmass/matching.hpp"
#include "indefmass/profiles.hpp"
#include "indefmass/secular.hpp"
#include "indefmass/spectrum.hpp"
#include "indefmass/wavefunction.hpp"

using namespace indefmass;

struct indefmass_profile {
  MassProfile profile;
  std::string summary;
};

struct indefmass_wavefunction {
  PiecewiseWavefunction psi;
};

struct indefmass_eigen_list {
  std::vector<Eigenstate> states;
};

struct indefmass_report {
  SpectrumReport report;
};

namespace {

thread_local std::string g_last_error;

indefmass_status fail(indefmass_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <class Fn>
indefmass_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::invalid_argument:
        return fail(INDEFMASS_ERR_INVALID_ARGUMENT, e.what());
      case ErrorCode::domain:
        return fail(INDEFMASS_ERR_DOMAIN, e.what());
      case ErrorCode::pole_proximity:
        return fail(INDEFMASS_ERR_POLE, e.what());
      case ErrorCode::refinement_exhausted:
        return fail(INDEFMASS_ERR_REFINEMENT, e.what());
      case ErrorCode::out_of_range:
        return fail(INDEFMASS_ERR_OUT_OF_RANGE, e.what());
    }
    return fail(INDEFMASS_ERR_INTERNAL, e.what());
  } catch (const std::bad_alloc&) {
    return fail(INDEFMASS_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(INDEFMASS_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(INDEFMASS_ERR_INTERNAL, "unknown error");
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw InvalidArgument(what);
}

Parity to_parity(indefmass_parity p) {
  if (p == INDEFMASS_PARITY_EVEN) return Parity::even;
  if (p == INDEFMASS_PARITY_ODD) return Parity::odd;
  throw InvalidArgument("unknown parity");
}

indefmass_parity from_parity(Parity p) {
  return p == Parity::even ? INDEFMASS_PARITY_EVEN : INDEFMASS_PARITY_ODD;
}

SecularBranch to_branch(const indefmass_branch_spec* spec) {
  require(spec != nullptr, "branch spec is null");
  auto geometry = [&] { return WellGeometry(spec->half_width, spec->inner_half_width); };
  switch (spec->model) {
    case INDEFMASS_BRANCH_CONSTANT_NEG_POS:
      return SecularBranch::constant_neg_pos(geometry(), spec->inner_mass);
    case INDEFMASS_BRANCH_CONSTANT_NEG_NEG:
      return SecularBranch::constant_neg_neg(geometry(), spec->inner_mass);
    case INDEFMASS_BRANCH_TANH_POS:
      return SecularBranch::tanh_pos(geometry());
    case INDEFMASS_BRANCH_TANH_NEG:
      return SecularBranch::tanh_neg(geometry());
    case INDEFMASS_BRANCH_STEP_NEG:
      return SecularBranch::step_neg(geometry(), spec->beta);
    case INDEFMASS_BRANCH_TWO_PARAM_NEG:
      return SecularBranch::two_param_neg(geometry(), spec->b, spec->nu);
    case INDEFMASS_BRANCH_TWO_PARAM_REDUCED:
      return SecularBranch::two_param_reduced(spec->half_width, spec->b, spec->nu);
  }
  throw InvalidArgument("unknown branch model");
}

template <class T>
indefmass_status copy_out(const std::vector<T>& values, T* out, size_t capacity, size_t* count) {
  require(count != nullptr, "count pointer is null");
  *count = values.size();
  if (capacity < values.size())
    return fail(INDEFMASS_ERR_BUFFER_TOO_SMALL, "output buffer too small");
  require(out != nullptr || values.empty(), "output buffer is null");
  std::copy(values.begin(), values.end(), out);
  return INDEFMASS_OK;
}

EigenSettings to_settings(const indefmass_eigen_settings* s) {
  if (s == nullptr) return {};
  return EigenSettings{s->tol, s->samples, s->refine_factor, s->max_depth, s->threshold_zero_tol};
}

}  // namespace

extern "C" {

const char* indefmass_version(void) { return "0.1.0"; }

const char* indefmass_status_string(indefmass_status status) {
  switch (status) {
    case INDEFMASS_OK: return "ok";
    case INDEFMASS_ERR_INVALID_ARGUMENT: return "invalid argument";
    case INDEFMASS_ERR_DOMAIN: return "domain error";
    case INDEFMASS_ERR_POLE: return "pole proximity";
    case INDEFMASS_ERR_REFINEMENT: return "refinement exhausted";
    case INDEFMASS_ERR_OUT_OF_RANGE: return "out of range";
    case INDEFMASS_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case INDEFMASS_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* indefmass_last_error(void) { return g_last_error.c_str(); }

indefmass_status indefmass_profile_create(double half_width, double inner_half_width,
                                          indefmass_inner_kind kind, double param,
                                          indefmass_profile** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    const WellGeometry g(half_width, inner_half_width);
    EnergyDependence inner;
    switch (kind) {
      case INDEFMASS_INNER_CONSTANT: inner = ConstantInner{param}; break;
      case INDEFMASS_INNER_TANH: inner = TanhInner{}; break;
      case INDEFMASS_INNER_STEP: inner = StepInner{param}; break;
      case INDEFMASS_INNER_SCALED: inner = ScaledInner{param}; break;
      default: throw InvalidArgument("unknown inner-mass kind");
    }
    MassProfile profile(g, inner);
    auto summary = profile.summary();
    *out = new indefmass_profile{std::move(profile), std::move(summary)};
    return INDEFMASS_OK;
  });
}

void indefmass_profile_destroy(indefmass_profile* profile) { delete profile; }

indefmass_status indefmass_profile_describe(const indefmass_profile* profile, double* half_width,
                                            double* inner_half_width, indefmass_inner_kind* kind,
                                            double* param) {
  return guarded([&] {
    require(profile != nullptr, "profile is null");
    const auto& p = profile->profile;
    if (half_width) *half_width = p.geometry().half_width();
    if (inner_half_width) *inner_half_width = p.geometry().inner_half_width();
    indefmass_inner_kind k = INDEFMASS_INNER_TANH;
    double v = 0.0;
    if (const auto* c = std::get_if<ConstantInner>(&p.inner())) {
      k = INDEFMASS_INNER_CONSTANT;
      v = c->mass;
    } else if (const auto* s = std::get_if<StepInner>(&p.inner())) {
      k = INDEFMASS_INNER_STEP;
      v = s->threshold;
    } else if (const auto* b = std::get_if<ScaledInner>(&p.inner())) {
      k = INDEFMASS_INNER_SCALED;
      v = b->b;
    }
    if (kind) *kind = k;
    if (param) *param = v;
    return INDEFMASS_OK;
  });
}

const char* indefmass_profile_summary(const indefmass_profile* profile) {
  return profile ? profile->summary.c_str() : "";
}

indefmass_status indefmass_profile_mass_at(const indefmass_profile* profile, double x, double energy,
                                           double* out) {
  return guarded([&] {
    require(profile != nullptr && out != nullptr, "null argument");
    *out = profile->profile.mass_at(x, energy);
    return INDEFMASS_OK;
  });
}

indefmass_status indefmass_profile_local_q2(const indefmass_profile* profile, indefmass_region region,
                                            double energy, double* out) {
  return guarded([&] {
    require(profile != nullptr && out != nullptr, "null argument");
    require(region == INDEFMASS_REGION_INNER || region == INDEFMASS_REGION_OUTER, "unknown region");
    *out = profile->profile.local_q2(region == INDEFMASS_REGION_INNER ? Region::inner : Region::outer,
                                     energy);
    return INDEFMASS_OK;
  });
}

void indefmass_branch_spec_default(indefmass_branch_model model, indefmass_branch_spec* spec) {
  if (!spec) return;
  *spec = indefmass_branch_spec{model, 2.0, 1.0, -1.0, 1.0, 1.0, 1.0};
}

void indefmass_root_window_default(double lo, double hi, indefmass_root_window* window) {
  if (!window) return;
  *window = indefmass_root_window{lo, hi, kDefaultRootTol, kDefaultPoleMargin};
}

const char* indefmass_branch_model_name(indefmass_branch_model model) {
  if (model < INDEFMASS_BRANCH_CONSTANT_NEG_POS || model > INDEFMASS_BRANCH_TWO_PARAM_REDUCED)
    return "unknown";
  return to_string(static_cast<SecularModel>(model)).data();
}

indefmass_status indefmass_branch_model_from_name(const char* name, indefmass_branch_model* out) {
  return guarded([&] {
    require(name != nullptr && out != nullptr, "null argument");
    const auto m = parse_secular_model(name);
    if (!m) throw InvalidArgument(std::string("unknown branch name '") + name + "'");
    *out = static_cast<indefmass_branch_model>(*m);
    return INDEFMASS_OK;
  });
}

indefmass_status indefmass_secular_residual(const indefmass_branch_spec* spec, double t,
                                            double pole_margin, double* out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    *out = to_branch(spec).residual(t, pole_margin);
    return INDEFMASS_OK;
  });
}

indefmass_status indefmass_secular_curves(const indefmass_branch_spec* spec, double t,
                                          double pole_margin, double* first, double* second) {
  return guarded([&] {
    require(first != nullptr && second != nullptr, "output pointer is null");
    const CurvePair c = to_branch(spec).curves(t, pole_margin);
    *first = c.first;
    *second = c.second;
    return INDEFMASS_OK;
  });
}

indefmass_status indefmass_secular_curve_poles(const indefmass_branch_spec* spec, double lo,
                                               double hi, double* poles, size_t capacity,
                                               size_t* count) {
  return guarded([&] { return copy_out(to_branch(spec).curve_poles(lo, hi), poles, capacity, count); });
}

indefmass_status indefmass_secular_find_roots(const indefmass_branch_spec* spec,
                                              const indefmass_root_window* window, double* roots,
                                              size_t capacity, size_t* count) {
  return guarded([&] {
    require(window != nullptr, "window is null");
    const RootWindow w{window->lo, window->hi, window->tol, window->pole_margin};
    return copy_out(find_roots(to_branch(spec), w), roots, capacity, count);
  });
}

indefmass_status indefmass_critical_betas(double half_width, double inner_half_width, size_t count,
                                          double* out) {
  return guarded([&] {
    require(out != nullptr || count == 0, "output pointer is null");
    const auto betas = critical_betas(WellGeometry(half_width, inner_half_width), count);
    std::copy(betas.begin(), betas.end(), out);
    return INDEFMASS_OK;
  });
}

indefmass_status indefmass_reduced_kappa1(double b_over_nu, double half_width, double tol,
                                          double* out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    *out = reduced_kappa1(b_over_nu, half_width, tol);
    return INDEFMASS_OK;
  });
}

void indefmass_eigen_settings_default(indefmass_eigen_settings* settings) {
  if (!settings) return;
  const EigenSettings d{};
  *settings = indefmass_eigen_settings{d.tol, d.samples, d.refine_factor, d.max_depth,
                                       d.threshold_zero_tol};
}

indefmass_status indefmass_mismatch(const indefmass_profile* profile, double energy,
                                    indefmass_parity parity, double* out) {
  return guarded([&] {
    require(profile != nullptr && out != nullptr, "null argument");
    *out = mismatch(profile->profile, energy, to_parity(parity));
    return INDEFMASS_OK;
  });
}

indefmass_status indefmass_build_solution(const indefmass_profile* profile, double energy,
                                          indefmass_parity parity, indefmass_wavefunction** out) {
  return guarded([&] {
    require(profile != nullptr && out != nullptr, "null argument");
    *out = new indefmass_wavefunction{build_solution(profile->profile, energy, to_parity(parity))};
    return INDEFMASS_OK;
  });
}

indefmass_status indefmass_eigenvalues(const indefmass_profile* profile, double lo, double hi,
                                       indefmass_parity parity,
                                       const indefmass_eigen_settings* settings,
                                       indefmass_eigen_list** out) {
  return guarded([&] {
    require(profile != nullptr && out != nullptr, "null argument");
    auto states =
        eigenvalues(profile->profile, EnergyWindow{lo, hi}, to_parity(parity), to_settings(settings));
    *out = new indefmass_eigen_list{std::move(states)};
    return INDEFMASS_OK;
  });
}

size_t indefmass_eigen_list_size(const indefmass_eigen_list* list) {
  return list ? list->states.size() : 0;
}

indefmass_status indefmass_eigen_list_energy(const indefmass_eigen_list* list, size_t index,
                                             double* out) {
  return guarded([&] {
    require(list != nullptr && out != nullptr, "null argument");
    if (index >= list->states.size()) throw OutOfRange("eigenstate index out of range");
    *out = list->states[index].energy;
    return INDEFMASS_OK;
  });
}

indefmass_status indefmass_eigen_list_state(const indefmass_eigen_list* list, size_t index,
                                            indefmass_wavefunction** out) {
  return guarded([&] {
    require(list != nullptr && out != nullptr, "null argument");
    if (index >= list->states.size()) throw OutOfRange("eigenstate index out of range");
    *out = new indefmass_wavefunction{list->states[index].state};
    return INDEFMASS_OK;
  });
}

void indefmass_eigen_list_destroy(indefmass_eigen_list* list) { delete list; }

void indefmass_wavefunction_destroy(indefmass_wavefunction* psi) { delete psi; }

indefmass_status indefmass_wavefunction_info(const indefmass_wavefunction* psi, double* energy,
                                             indefmass_parity* parity, double* norm,
                                             double* half_width) {
  return guarded([&] {
    require(psi != nullptr, "wavefunction is null");
    if (energy) *energy = psi->psi.energy();
    if (parity) *parity = from_parity(psi->psi.parity());
    if (norm) *norm = psi->psi.norm();
    if (half_width) *half_width = psi->psi.half_width();
    return INDEFMASS_OK;
  });
}

indefmass_status indefmass_wavefunction_evaluate(const indefmass_wavefunction* psi, double x,
                                                 double* out) {
  return guarded([&] {
    require(psi != nullptr && out != nullptr, "null argument");
    *out = psi->psi(x);
    return INDEFMASS_OK;
  });
}

indefmass_status indefmass_wavefunction_count_nodes(const indefmass_wavefunction* psi, int* out) {
  return guarded([&] {
    require(psi != nullptr && out != nullptr, "null argument");
    *out = count_nodes(psi->psi);
    return INDEFMASS_OK;
  });
}

indefmass_status indefmass_wavefunction_localization(const indefmass_wavefunction* psi,
                                                     double inner_half_width, double* out) {
  return guarded([&] {
    require(psi != nullptr && out != nullptr, "null argument");
    *out = localization_fraction(psi->psi, inner_half_width);
    return INDEFMASS_OK;
  });
}

indefmass_status indefmass_wavefunction_region(const indefmass_wavefunction* psi, size_t index,
                                               indefmass_region_info* out) {
  return guarded([&] {
    require(psi != nullptr && out != nullptr, "null argument");
    if (index >= 4) throw OutOfRange("region index out of range");
    const RegionSolution& r = psi->psi.regions()[index];
    const auto kind = r.kind == RegionKind::trig    ? INDEFMASS_REGION_TRIG
                      : r.kind == RegionKind::hyper ? INDEFMASS_REGION_HYPER
                                                    : INDEFMASS_REGION_LINEAR;
    *out = indefmass_region_info{kind,     r.q2,     r.wavenumber, r.value,
                                 r.slope, r.anchor, r.left,       r.right};
    return INDEFMASS_OK;
  });
}

void indefmass_scenario_options_default(indefmass_scenario_options* options) {
  if (!options) return;
  const ScenarioOptions d{};
  indefmass_eigen_settings eigen;
  indefmass_eigen_settings_default(&eigen);
  *options = indefmass_scenario_options{nullptr, INDEFMASS_PARITY_MASK_EVEN, eigen, d.evidence_k1,
                                        d.evidence_k2};
}

indefmass_status indefmass_run_scenario(const indefmass_profile* profile, double lo, double hi,
                                        const indefmass_scenario_options* options,
                                        indefmass_report** out) {
  return guarded([&] {
    require(profile != nullptr && out != nullptr, "null argument");
    ScenarioOptions opts;
    if (options) {
      if (options->id) opts.id = options->id;
      opts.parities.clear();
      if (options->parity_mask & INDEFMASS_PARITY_MASK_EVEN) opts.parities.push_back(Parity::even);
      if (options->parity_mask & INDEFMASS_PARITY_MASK_ODD) opts.parities.push_back(Parity::odd);
      opts.eigen = to_settings(&options->eigen);
      opts.evidence_k1 = options->evidence_k1;
      opts.evidence_k2 = options->evidence_k2;
    }
    *out = new indefmass_report{run_scenario(profile->profile, EnergyWindow{lo, hi}, opts)};
    return INDEFMASS_OK;
  });
}

void indefmass_report_destroy(indefmass_report* report) { delete report; }

const char* indefmass_report_id(const indefmass_report* report) {
  return report ? report->report.scenario_id.c_str() : "";
}

const char* indefmass_report_profile_summary(const indefmass_report* report) {
  return report ? report->report.profile_summary.c_str() : "";
}

indefmass_status indefmass_report_window(const indefmass_report* report, double* lo, double* hi) {
  return guarded([&] {
    require(report != nullptr, "report is null");
    if (lo) *lo = report->report.window.lo;
    if (hi) *hi = report->report.window.hi;
    return INDEFMASS_OK;
  });
}

size_t indefmass_report_level_count(const indefmass_report* report) {
  return report ? report->report.levels.size() : 0;
}

indefmass_status indefmass_report_level(const indefmass_report* report, size_t index,
                                        indefmass_level* out) {
  return guarded([&] {
    require(report != nullptr && out != nullptr, "null argument");
    if (index >= report->report.levels.size()) throw OutOfRange("level index out of range");
    const Level& l = report->report.levels[index];
    *out = indefmass_level{l.energy, from_parity(l.parity), l.nodes, l.localization};
    return INDEFMASS_OK;
  });
}

indefmass_status indefmass_report_verdict(const indefmass_report* report,
                                          indefmass_verdict_info* out) {
  return guarded([&] {
    require(report != nullptr && out != nullptr, "null argument");
    const auto& r = report->report;
    const auto v = r.verdict == Verdict::bounded_below     ? INDEFMASS_VERDICT_BOUNDED_BELOW
                   : r.verdict == Verdict::unbounded_below ? INDEFMASS_VERDICT_UNBOUNDED_BELOW
                                                           : INDEFMASS_VERDICT_EMPTY;
    *out = indefmass_verdict_info{v,
                                  r.evidence.k1,
                                  r.evidence.k2,
                                  r.evidence.count1,
                                  r.evidence.count2,
                                  r.evidence.required};
    return INDEFMASS_OK;
  });
}

const char* indefmass_verdict_name(indefmass_verdict verdict) {
  switch (verdict) {
    case INDEFMASS_VERDICT_BOUNDED_BELOW: return "bounded_below";
    case INDEFMASS_VERDICT_UNBOUNDED_BELOW: return "unbounded_below";
    case INDEFMASS_VERDICT_EMPTY: return "empty";
  }
  return "unknown";
}

indefmass_status indefmass_ground_state_staircase(double half_width, double inner_half_width,
                                                  double beta_max, size_t steps,
                                                  indefmass_staircase_row* rows, size_t capacity,
                                                  size_t* count) {
  return guarded([&] {
    std::vector<indefmass_staircase_row> out;
    for (const auto& r :
         ground_state_staircase(WellGeometry(half_width, inner_half_width), beta_max, steps)) {
      out.push_back({r.beta, r.negative_levels, r.ground_nodes, r.ground_energy});
    }
    return copy_out(out, rows, capacity, count);
  });
}

indefmass_status indefmass_delta_limit_study(double b_over_nu, double half_width, const double* nus,
                                             size_t n, indefmass_delta_row* rows) {
  return guarded([&] {
    require((nus != nullptr && rows != nullptr) || n == 0, "null argument");
    const auto result = delta_limit_study(b_over_nu, half_width, std::vector<double>(nus, nus + n));
    for (size_t i = 0; i < result.size(); ++i) {
      const auto& r = result[i];
      rows[i] = indefmass_delta_row{r.nu, r.a, r.b, r.leftmost, r.second, r.reduced, r.escape_estimate};
    }
    return INDEFMASS_OK;
  });
}

}  // extern "C"
