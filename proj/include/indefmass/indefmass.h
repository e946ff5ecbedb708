/*
 * indefmass C API.
 *
 * Bound states of -psi''/m(x,E) = E psi on (-L, L) with psi(+-L) = 0 and a
 * symmetric piecewise-constant effective mass m(x,E) that may be negative
 * and energy dependent. Units hbar^2/2 = 1.
 *
 * Every fallible call returns an indefmass_status; on failure the message is
 * available from indefmass_last_error() on the calling thread. Handles are
 * opaque, immutable after creation and safe to read from several threads.
 * Functions that fill caller buffers report the required element count
 * through *count and return INDEFMASS_ERR_BUFFER_TOO_SMALL when capacity is
 * insufficient (pass capacity 0 to query).
 */
#ifndef INDEFMASS_H
#define INDEFMASS_H

#include <stddef.h>

#if defined(INDEFMASS_BUILDING_LIBRARY)
#  define INDEFMASS_API __attribute__((visibility("default")))
#else
#  define INDEFMASS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum indefmass_status {
  INDEFMASS_OK = 0,
  INDEFMASS_ERR_INVALID_ARGUMENT = 1,
  INDEFMASS_ERR_DOMAIN = 2,
  INDEFMASS_ERR_POLE = 3,
  INDEFMASS_ERR_REFINEMENT = 4,
  INDEFMASS_ERR_OUT_OF_RANGE = 5,
  INDEFMASS_ERR_BUFFER_TOO_SMALL = 6,
  INDEFMASS_ERR_INTERNAL = 7
} indefmass_status;

typedef enum indefmass_parity { INDEFMASS_PARITY_EVEN = 0, INDEFMASS_PARITY_ODD = 1 } indefmass_parity;

typedef enum indefmass_region { INDEFMASS_REGION_INNER = 0, INDEFMASS_REGION_OUTER = 1 } indefmass_region;

/* Inner-mass laws. The profile parameter is m0 (CONSTANT), E_thr (STEP) or b
 * (SCALED, m = -1/b^2); TANH (m = -tanh E) ignores it. */
typedef enum indefmass_inner_kind {
  INDEFMASS_INNER_CONSTANT = 0,
  INDEFMASS_INNER_TANH = 1,
  INDEFMASS_INNER_STEP = 2,
  INDEFMASS_INNER_SCALED = 3
} indefmass_inner_kind;

typedef enum indefmass_branch_model {
  INDEFMASS_BRANCH_CONSTANT_NEG_POS = 0,
  INDEFMASS_BRANCH_CONSTANT_NEG_NEG = 1,
  INDEFMASS_BRANCH_TANH_POS = 2,
  INDEFMASS_BRANCH_TANH_NEG = 3,
  INDEFMASS_BRANCH_STEP_NEG = 4,
  INDEFMASS_BRANCH_TWO_PARAM_NEG = 5,
  INDEFMASS_BRANCH_TWO_PARAM_REDUCED = 6
} indefmass_branch_model;

typedef enum indefmass_verdict {
  INDEFMASS_VERDICT_BOUNDED_BELOW = 0,
  INDEFMASS_VERDICT_UNBOUNDED_BELOW = 1,
  INDEFMASS_VERDICT_EMPTY = 2
} indefmass_verdict;

typedef enum indefmass_region_kind {
  INDEFMASS_REGION_TRIG = 0,
  INDEFMASS_REGION_HYPER = 1,
  INDEFMASS_REGION_LINEAR = 2
} indefmass_region_kind;

typedef struct indefmass_profile indefmass_profile;
typedef struct indefmass_wavefunction indefmass_wavefunction;
typedef struct indefmass_eigen_list indefmass_eigen_list;
typedef struct indefmass_report indefmass_report;

INDEFMASS_API const char* indefmass_version(void);
INDEFMASS_API const char* indefmass_status_string(indefmass_status status);
/* Message of the last failure on this thread ("" if none). */
INDEFMASS_API const char* indefmass_last_error(void);

/* ---- profiles ---------------------------------------------------------- */

INDEFMASS_API indefmass_status indefmass_profile_create(double half_width, double inner_half_width,
                                                        indefmass_inner_kind kind, double param,
                                                        indefmass_profile** out);
INDEFMASS_API void indefmass_profile_destroy(indefmass_profile* profile);
INDEFMASS_API indefmass_status indefmass_profile_describe(const indefmass_profile* profile,
                                                          double* half_width,
                                                          double* inner_half_width,
                                                          indefmass_inner_kind* kind, double* param);
/* Owned by the profile. */
INDEFMASS_API const char* indefmass_profile_summary(const indefmass_profile* profile);
INDEFMASS_API indefmass_status indefmass_profile_mass_at(const indefmass_profile* profile, double x,
                                                         double energy, double* out);
INDEFMASS_API indefmass_status indefmass_profile_local_q2(const indefmass_profile* profile,
                                                          indefmass_region region, double energy,
                                                          double* out);

/* ---- secular equations ------------------------------------------------- */

typedef struct indefmass_branch_spec {
  indefmass_branch_model model;
  double half_width;       /* L */
  double inner_half_width; /* a */
  double inner_mass;       /* m0 < 0, constant branches */
  double beta;             /* step branch, E_thr = -beta^2 */
  double b;                /* two-parameter branches */
  double nu;               /* a / b, two-parameter branches */
} indefmass_branch_spec;

typedef struct indefmass_root_window {
  double lo;
  double hi;
  double tol;
  double pole_margin;
} indefmass_root_window;

/* L = 2, a = 1, m0 = -1, beta = 1, b = nu = 1. */
INDEFMASS_API void indefmass_branch_spec_default(indefmass_branch_model model,
                                                 indefmass_branch_spec* spec);
/* Window (lo, hi] with tol 1e-12 and pole margin 1e-8 pi. */
INDEFMASS_API void indefmass_root_window_default(double lo, double hi, indefmass_root_window* window);
INDEFMASS_API const char* indefmass_branch_model_name(indefmass_branch_model model);
INDEFMASS_API indefmass_status indefmass_branch_model_from_name(const char* name,
                                                                indefmass_branch_model* out);

INDEFMASS_API indefmass_status indefmass_secular_residual(const indefmass_branch_spec* spec, double t,
                                                          double pole_margin, double* out);
INDEFMASS_API indefmass_status indefmass_secular_curves(const indefmass_branch_spec* spec, double t,
                                                        double pole_margin, double* first,
                                                        double* second);
INDEFMASS_API indefmass_status indefmass_secular_curve_poles(const indefmass_branch_spec* spec,
                                                             double lo, double hi, double* poles,
                                                             size_t capacity, size_t* count);
INDEFMASS_API indefmass_status indefmass_secular_find_roots(const indefmass_branch_spec* spec,
                                                            const indefmass_root_window* window,
                                                            double* roots, size_t capacity,
                                                            size_t* count);
/* Writes `count` values into out. */
INDEFMASS_API indefmass_status indefmass_critical_betas(double half_width, double inner_half_width,
                                                        size_t count, double* out);
INDEFMASS_API indefmass_status indefmass_reduced_kappa1(double b_over_nu, double half_width,
                                                        double tol, double* out);

/* ---- matching solver --------------------------------------------------- */

typedef struct indefmass_eigen_settings {
  double tol; /* absolute, in E */
  int samples;
  int refine_factor;
  int max_depth;
  double threshold_zero_tol;
} indefmass_eigen_settings;

INDEFMASS_API void indefmass_eigen_settings_default(indefmass_eigen_settings* settings);

INDEFMASS_API indefmass_status indefmass_mismatch(const indefmass_profile* profile, double energy,
                                                  indefmass_parity parity, double* out);
INDEFMASS_API indefmass_status indefmass_build_solution(const indefmass_profile* profile, double energy,
                                                        indefmass_parity parity,
                                                        indefmass_wavefunction** out);
/* settings may be NULL for defaults. */
INDEFMASS_API indefmass_status indefmass_eigenvalues(const indefmass_profile* profile, double lo,
                                                     double hi, indefmass_parity parity,
                                                     const indefmass_eigen_settings* settings,
                                                     indefmass_eigen_list** out);
INDEFMASS_API size_t indefmass_eigen_list_size(const indefmass_eigen_list* list);
INDEFMASS_API indefmass_status indefmass_eigen_list_energy(const indefmass_eigen_list* list,
                                                           size_t index, double* out);
/* Returns a new handle the caller destroys. */
INDEFMASS_API indefmass_status indefmass_eigen_list_state(const indefmass_eigen_list* list,
                                                          size_t index, indefmass_wavefunction** out);
INDEFMASS_API void indefmass_eigen_list_destroy(indefmass_eigen_list* list);

/* ---- wavefunctions ----------------------------------------------------- */

typedef struct indefmass_region_info {
  indefmass_region_kind kind;
  double q2;
  double wavenumber;
  double value; /* psi at anchor */
  double slope; /* psi' at anchor */
  double anchor;
  double left;
  double right;
} indefmass_region_info;

INDEFMASS_API void indefmass_wavefunction_destroy(indefmass_wavefunction* psi);
INDEFMASS_API indefmass_status indefmass_wavefunction_info(const indefmass_wavefunction* psi,
                                                           double* energy, indefmass_parity* parity,
                                                           double* norm, double* half_width);
INDEFMASS_API indefmass_status indefmass_wavefunction_evaluate(const indefmass_wavefunction* psi,
                                                               double x, double* out);
INDEFMASS_API indefmass_status indefmass_wavefunction_count_nodes(const indefmass_wavefunction* psi,
                                                                  int* out);
INDEFMASS_API indefmass_status indefmass_wavefunction_localization(const indefmass_wavefunction* psi,
                                                                   double inner_half_width,
                                                                   double* out);
/* index 0..3, left to right. */
INDEFMASS_API indefmass_status indefmass_wavefunction_region(const indefmass_wavefunction* psi,
                                                             size_t index,
                                                             indefmass_region_info* out);

/* ---- scenarios --------------------------------------------------------- */

#define INDEFMASS_PARITY_MASK_EVEN 1u
#define INDEFMASS_PARITY_MASK_ODD 2u

typedef struct indefmass_scenario_options {
  const char* id; /* copied; NULL means "scenario" */
  unsigned parity_mask;
  indefmass_eigen_settings eigen;
  double evidence_k1;
  double evidence_k2;
} indefmass_scenario_options;

typedef struct indefmass_level {
  double energy;
  indefmass_parity parity;
  int nodes;
  double localization;
} indefmass_level;

typedef struct indefmass_verdict_info {
  indefmass_verdict verdict;
  double k1;
  double k2;
  size_t count1;
  size_t count2;
  size_t required;
} indefmass_verdict_info;

typedef struct indefmass_staircase_row {
  double beta;
  size_t negative_levels;
  int ground_nodes;
  double ground_energy;
} indefmass_staircase_row;

typedef struct indefmass_delta_row {
  double nu;
  double a;
  double b;
  double leftmost;
  double second;
  double reduced;
  double escape_estimate;
} indefmass_delta_row;

INDEFMASS_API void indefmass_scenario_options_default(indefmass_scenario_options* options);
INDEFMASS_API indefmass_status indefmass_run_scenario(const indefmass_profile* profile, double lo,
                                                      double hi,
                                                      const indefmass_scenario_options* options,
                                                      indefmass_report** out);
INDEFMASS_API void indefmass_report_destroy(indefmass_report* report);
INDEFMASS_API const char* indefmass_report_id(const indefmass_report* report);
INDEFMASS_API const char* indefmass_report_profile_summary(const indefmass_report* report);
INDEFMASS_API indefmass_status indefmass_report_window(const indefmass_report* report, double* lo,
                                                       double* hi);
INDEFMASS_API size_t indefmass_report_level_count(const indefmass_report* report);
INDEFMASS_API indefmass_status indefmass_report_level(const indefmass_report* report, size_t index,
                                                      indefmass_level* out);
INDEFMASS_API indefmass_status indefmass_report_verdict(const indefmass_report* report,
                                                        indefmass_verdict_info* out);
INDEFMASS_API const char* indefmass_verdict_name(indefmass_verdict verdict);

INDEFMASS_API indefmass_status indefmass_ground_state_staircase(double half_width,
                                                                double inner_half_width,
                                                                double beta_max, size_t steps,
                                                                indefmass_staircase_row* rows,
                                                                size_t capacity, size_t* count);
/* rows must hold n entries. */
INDEFMASS_API indefmass_status indefmass_delta_limit_study(double b_over_nu, double half_width,
                                                           const double* nus, size_t n,
                                                           indefmass_delta_row* rows);

#ifdef __cplusplus
}
#endif

#endif /* INDEFMASS_H */
