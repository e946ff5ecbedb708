#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "config.hpp"
#include "handles.hpp"

namespace indefmass::cli {

void check(indefmass_status status) {
  if (status == INDEFMASS_OK) return;
  std::string message = indefmass_last_error();
  if (message.empty()) message = indefmass_status_string(status);
  if (status == INDEFMASS_ERR_INVALID_ARGUMENT) throw ConfigError(message);
  throw SolverFailure(message);
}

namespace {

using Json = nlohmann::ordered_json;

std::string g(double v) { return format_double(v); }

const char* parity_name(indefmass_parity p) { return p == INDEFMASS_PARITY_EVEN ? "even" : "odd"; }

/// Flags shared by every subcommand.
struct CommonFlags {
  std::string config;
  std::string out;
  std::string format;
  std::string window;
  std::optional<double> tol;
};

/// An empty window_help omits --window and --tol.
void add_common(CLI::App* cmd, CommonFlags& f, const std::string& window_help) {
  cmd->add_option("--config", f.config, "scenario file (flat key = value)");
  cmd->add_option("--out", f.out, "output path (default: stdout)");
  cmd->add_option("--format", f.format, "output format");
  if (window_help.empty()) return;
  cmd->add_option("--window", f.window, window_help);
  cmd->add_option("--tol", f.tol, "root tolerance");
}

std::optional<ScenarioConfig> maybe_config(const CommonFlags& f) {
  if (f.config.empty()) return std::nullopt;
  return load_config(f.config);
}

std::string pick_format(const CommonFlags& f, const std::optional<ScenarioConfig>& c,
                        std::initializer_list<const char*> allowed, const char* fallback) {
  std::string fmt_name = f.format;
  if (fmt_name.empty() && c) fmt_name = c->format;
  if (fmt_name.empty()) fmt_name = fallback;
  for (const char* a : allowed)
    if (fmt_name == a) return fmt_name;
  throw ConfigError(fmt::format("--format: '{}' is not supported by this command", fmt_name));
}

ProfileHandle make_profile(const ProfileParams& p) {
  indefmass_profile* raw = nullptr;
  check(indefmass_profile_create(p.half_width, p.inner_half_width, p.kind, p.param, &raw));
  return ProfileHandle(raw);
}

/// Applies --window and --tol on top of the scenario file.
ScenarioConfig scenario_from(const CommonFlags& f) {
  if (f.config.empty()) throw ConfigError("--config is required");
  ScenarioConfig c = load_config(f.config);
  if (!f.window.empty()) std::tie(c.window_lo, c.window_hi) = parse_range(f.window, "--window");
  if (f.tol) {
    if (!(*f.tol > 0.0)) throw ConfigError("--tol: must be positive");
    c.tol = *f.tol;
  }
  if (!f.format.empty()) c.format = f.format;
  if (!f.out.empty()) c.out = f.out;
  return c;
}

ReportHandle run_report(const ScenarioConfig& c, const indefmass_profile* profile) {
  indefmass_scenario_options opt;
  indefmass_scenario_options_default(&opt);
  opt.id = c.id.c_str();
  opt.parity_mask = 0;
  for (auto p : c.parities)
    opt.parity_mask |= p == INDEFMASS_PARITY_EVEN ? INDEFMASS_PARITY_MASK_EVEN : INDEFMASS_PARITY_MASK_ODD;
  opt.eigen.tol = c.tol;
  opt.evidence_k1 = c.evidence_k1;
  opt.evidence_k2 = c.evidence_k2;
  indefmass_report* raw = nullptr;
  check(indefmass_run_scenario(profile, c.window_lo, c.window_hi, &opt, &raw));
  return ReportHandle(raw);
}

std::vector<indefmass_level> report_levels(const indefmass_report* r) {
  std::vector<indefmass_level> levels(indefmass_report_level_count(r));
  for (std::size_t i = 0; i < levels.size(); ++i) check(indefmass_report_level(r, i, &levels[i]));
  return levels;
}

void emit(const std::string& body, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << body;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw ConfigError(fmt::format("cannot open output file '{}'", path));
  file << body;
  if (!file.flush()) throw ConfigError(fmt::format("failed writing output file '{}'", path));
}

// ---- spectrum --------------------------------------------------------------

std::string spectrum_body(const ScenarioConfig& c, const ProfileParams& params,
                          const indefmass_report* r) {
  const auto levels = report_levels(r);
  indefmass_verdict_info v;
  check(indefmass_report_verdict(r, &v));
  double lo = 0.0, hi = 0.0;
  check(indefmass_report_window(r, &lo, &hi));
  const std::string summary = indefmass_report_profile_summary(r);
  const std::string verdict = indefmass_verdict_name(v.verdict);

  if (c.format == "json") {
    Json j;
    j["scenario"] = indefmass_report_id(r);
    j["profile"] = {{"summary", summary},
                    {"L", params.half_width},
                    {"a", params.inner_half_width}};
    j["window"] = {{"lo", lo}, {"hi", hi}};
    Json par = Json::array();
    for (auto p : c.parities) par.push_back(parity_name(p));
    j["parities"] = par;
    Json lv = Json::array();
    for (std::size_t i = 0; i < levels.size(); ++i)
      lv.push_back({{"index", i + 1},
                    {"energy", levels[i].energy},
                    {"parity", parity_name(levels[i].parity)},
                    {"nodes", levels[i].nodes},
                    {"localization", levels[i].localization}});
    j["levels"] = lv;
    j["verdict"] = {{"kind", verdict},
                    {"evidence",
                     {{"k1", v.k1},
                      {"k2", v.k2},
                      {"count1", v.count1},
                      {"count2", v.count2},
                      {"required", v.required}}}};
    return j.dump(2) + "\n";
  }

  std::string s;
  if (c.format == "csv") {
    s += fmt::format("# scenario: {}\n# profile: {}\n# window: {}:{}\n", indefmass_report_id(r), summary,
                     g(lo), g(hi));
    s += fmt::format("# verdict: {}\n# evidence: k1={} k2={} count1={} count2={} required={}\n", verdict,
                     g(v.k1), g(v.k2), v.count1, v.count2, v.required);
    s += "index,energy,parity,nodes,localization\n";
    for (std::size_t i = 0; i < levels.size(); ++i)
      s += fmt::format("{},{},{},{},{}\n", i + 1, g(levels[i].energy), parity_name(levels[i].parity),
                       levels[i].nodes, g(levels[i].localization));
    return s;
  }

  s += fmt::format("scenario  {}\nprofile   {}\nwindow    [{}, {}]\n", indefmass_report_id(r), summary,
                   g(lo), g(hi));
  s += fmt::format("verdict   {}  (levels with kappa <= {}: {}, <= {}: {}, growth required: {})\n\n",
                   verdict, g(v.k1), v.count1, g(v.k2), v.count2, v.required);
  s += fmt::format("{:>5}  {:>24}  {:>6}  {:>5}  {:>24}\n", "index", "energy", "parity", "nodes",
                   "localization");
  for (std::size_t i = 0; i < levels.size(); ++i)
    s += fmt::format("{:>5}  {:>24}  {:>6}  {:>5}  {:>24}\n", i + 1, g(levels[i].energy),
                     parity_name(levels[i].parity), levels[i].nodes, g(levels[i].localization));
  return s;
}

int cmd_spectrum(const CommonFlags& f, std::ostream& out) {
  ScenarioConfig c = scenario_from(f);
  if (c.format.empty()) c.format = "json";
  if (c.format != "json" && c.format != "csv" && c.format != "text")
    throw ConfigError(fmt::format("--format: unknown output format '{}'", c.format));
  const ProfileParams params = resolve_profile(c);
  const ProfileHandle profile = make_profile(params);
  const ReportHandle report = run_report(c, profile.get());
  emit(spectrum_body(c, params, report.get()), c.out, out);
  return kExitOk;
}

// ---- wavefunction ----------------------------------------------------------

int cmd_wavefunction(const CommonFlags& f, std::optional<long> level_flag, std::optional<long> grid_flag,
                     std::ostream& out) {
  ScenarioConfig c = scenario_from(f);
  if (c.format.empty()) c.format = "csv";
  if (c.format != "csv" && c.format != "json")
    throw ConfigError(fmt::format("--format: '{}' is not supported by wavefunction", c.format));
  const long level = level_flag ? *level_flag : c.level.value_or(1);
  const long grid = grid_flag ? *grid_flag : c.grid.value_or(201);
  if (level < 1) throw ConfigError("--level: levels are numbered from 1");
  if (grid < 2) throw ConfigError(fmt::format("--grid: needs at least 2 points (got {})", grid));

  const ProfileParams params = resolve_profile(c);
  const ProfileHandle profile = make_profile(params);
  const ReportHandle report = run_report(c, profile.get());
  const auto levels = report_levels(report.get());
  if (static_cast<std::size_t>(level) > levels.size())
    throw SolverFailure(fmt::format("level {} out of range: the window holds {} level(s)", level,
                                    levels.size()));
  const indefmass_level& lv = levels[static_cast<std::size_t>(level - 1)];

  indefmass_wavefunction* raw = nullptr;
  check(indefmass_build_solution(profile.get(), lv.energy, lv.parity, &raw));
  const WavefunctionHandle psi(raw);

  const double L = params.half_width;
  std::vector<std::pair<double, double>> points;
  points.reserve(static_cast<std::size_t>(grid));
  for (long i = 0; i < grid; ++i) {
    const double x = i == grid - 1 ? L : -L + 2.0 * L * static_cast<double>(i) / static_cast<double>(grid - 1);
    double y = 0.0;
    check(indefmass_wavefunction_evaluate(psi.get(), x, &y));
    points.emplace_back(x, y);
  }

  std::string s;
  if (c.format == "json") {
    Json j;
    j["scenario"] = c.id;
    j["profile"] = indefmass_profile_summary(profile.get());
    j["level"] = level;
    j["energy"] = lv.energy;
    j["parity"] = parity_name(lv.parity);
    j["nodes"] = lv.nodes;
    j["localization"] = lv.localization;
    Json pts = Json::array();
    for (const auto& [x, y] : points) pts.push_back({x, y});
    j["points"] = pts;
    s = j.dump(2) + "\n";
  } else {
    s += fmt::format("# scenario: {}\n# profile: {}\n# level: {}\n", c.id,
                     indefmass_profile_summary(profile.get()), level);
    s += fmt::format("# energy: {}\n# parity: {}\n# nodes: {}\n# localization: {}\nx,psi\n", g(lv.energy),
                     parity_name(lv.parity), lv.nodes, g(lv.localization));
    for (const auto& [x, y] : points) s += fmt::format("{},{}\n", g(x), g(y));
  }
  emit(s, c.out, out);
  return kExitOk;
}

// ---- curves ----------------------------------------------------------------

struct CurveFlags {
  std::string branch;
  std::optional<double> L, a, m0, beta, b;
  long samples = 1000;
};

int cmd_curves(const CommonFlags& f, const CurveFlags& cf, std::ostream& out) {
  const auto config = maybe_config(f);
  const std::string format = pick_format(f, config, {"csv", "json"}, "csv");
  if (cf.samples < 2) throw ConfigError(fmt::format("--samples: needs at least 2 (got {})", cf.samples));

  indefmass_branch_model model;
  if (indefmass_branch_model_from_name(cf.branch.c_str(), &model) != INDEFMASS_OK)
    throw ConfigError(fmt::format("--branch: unknown branch '{}'", cf.branch));
  indefmass_branch_spec spec;
  indefmass_branch_spec_default(model, &spec);
  if (config) {
    const ProfileParams p = resolve_profile(*config);
    spec.half_width = p.half_width;
    spec.inner_half_width = p.inner_half_width;
    if (p.kind == INDEFMASS_INNER_CONSTANT) spec.inner_mass = p.param;
    if (p.kind == INDEFMASS_INNER_STEP && p.param < 0.0) spec.beta = std::sqrt(-p.param);
    if (p.kind == INDEFMASS_INNER_SCALED) spec.b = p.param;
  }
  if (cf.L) spec.half_width = *cf.L;
  if (cf.a) spec.inner_half_width = *cf.a;
  if (cf.m0) spec.inner_mass = *cf.m0;
  if (cf.beta) spec.beta = *cf.beta;
  if (cf.b) spec.b = *cf.b;
  if (!(spec.b > 0.0)) throw ConfigError("--b: must be positive");
  spec.nu = spec.inner_half_width / spec.b;

  double lo = 0.0, hi = 10.0;
  if (!f.window.empty()) std::tie(lo, hi) = parse_range(f.window, "--window");
  if (lo < 0.0) throw ConfigError("--window: the curve variable is positive, LO must be >= 0");
  indefmass_root_window window;
  indefmass_root_window_default(lo, hi, &window);
  const double tol = f.tol.value_or(config ? config->tol : window.tol);
  if (!(tol > 0.0)) throw ConfigError("--tol: must be positive");
  window.tol = tol;

  double dummy = 0.0, dummy2 = 0.0;
  {
    // validates the branch parameters before any sampling
    const indefmass_status st = indefmass_secular_curves(&spec, 0.5 * (lo + hi), window.pole_margin, &dummy, &dummy2);
    if (st == INDEFMASS_ERR_INVALID_ARGUMENT) check(st);
  }

  std::size_t pole_count = 0;
  indefmass_status st = indefmass_secular_curve_poles(&spec, lo, hi, nullptr, 0, &pole_count);
  if (st != INDEFMASS_ERR_BUFFER_TOO_SMALL) check(st);
  std::vector<double> poles(pole_count);
  if (pole_count > 0) check(indefmass_secular_curve_poles(&spec, lo, hi, poles.data(), poles.size(), &pole_count));

  std::size_t root_count = 0;
  st = indefmass_secular_find_roots(&spec, &window, nullptr, 0, &root_count);
  if (st != INDEFMASS_ERR_BUFFER_TOO_SMALL) check(st);
  std::vector<double> roots(root_count);
  if (root_count > 0) check(indefmass_secular_find_roots(&spec, &window, roots.data(), roots.size(), &root_count));

  struct Point {
    double t, lhs1, lhs2;
  };
  std::vector<std::vector<Point>> segments(1);
  std::size_t next_pole = 0;
  double prev = lo;
  for (long i = 0; i < cf.samples; ++i) {
    const double t = i == cf.samples - 1
                         ? hi
                         : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(cf.samples - 1);
    bool crossed = false;
    while (next_pole < poles.size() && poles[next_pole] <= t) {
      if (poles[next_pole] > prev || (i == 0 && poles[next_pole] >= prev)) crossed = true;
      ++next_pole;
    }
    prev = t;
    if (crossed && !segments.back().empty()) segments.emplace_back();
    double y1 = 0.0, y2 = 0.0;
    const indefmass_status cs = indefmass_secular_curves(&spec, t, window.pole_margin, &y1, &y2);
    if (cs == INDEFMASS_ERR_DOMAIN || cs == INDEFMASS_ERR_POLE) {
      if (!segments.back().empty()) segments.emplace_back();
      continue;
    }
    check(cs);
    segments.back().push_back({t, y1, y2});
  }
  if (segments.size() > 1 && segments.back().empty()) segments.pop_back();

  std::string s;
  if (format == "json") {
    Json j;
    j["branch"] = indefmass_branch_model_name(model);
    j["L"] = spec.half_width;
    j["a"] = spec.inner_half_width;
    j["window"] = {{"lo", lo}, {"hi", hi}};
    Json segs = Json::array();
    for (const auto& seg : segments) {
      Json pts = Json::array();
      for (const auto& p : seg) pts.push_back({p.t, p.lhs1, p.lhs2});
      segs.push_back(pts);
    }
    j["segments"] = segs;
    j["roots"] = roots;
    s = j.dump(2) + "\n";
  } else {
    s += fmt::format("# branch: {}\n# L: {}\n# a: {}\n# window: {}:{}\n", indefmass_branch_model_name(model),
                     g(spec.half_width), g(spec.inner_half_width), g(lo), g(hi));
    s += "t,lhs1,lhs2\n";
    for (std::size_t k = 0; k < segments.size(); ++k) {
      if (k > 0) s += "\n";
      for (const auto& p : segments[k]) s += fmt::format("{},{},{}\n", g(p.t), g(p.lhs1), g(p.lhs2));
    }
    s += "\n# roots\nroot\n";
    for (double r : roots) s += g(r) + "\n";
  }
  emit(s, f.out.empty() && config ? config->out : f.out, out);
  return kExitOk;
}

// ---- critical-beta ----------------------------------------------------------

struct CriticalFlags {
  std::optional<double> L, a, beta_max;
  long count = 5;
  long steps = 400;
};

int cmd_critical_beta(const CommonFlags& f, const CriticalFlags& cf, std::ostream& out) {
  const auto config = maybe_config(f);
  const std::string format = pick_format(f, config, {"csv", "json"}, "csv");
  double L = 2.0, a = 1.0;
  if (config) {
    L = config->half_width;
    a = config->inner_half_width;
  }
  if (cf.L) L = *cf.L;
  if (cf.a) a = *cf.a;
  if (cf.count < 1) throw ConfigError("--count: must be at least 1");
  if (cf.beta_max && !(*cf.beta_max > 0.0)) throw ConfigError("--beta-max: must be positive");
  if (cf.steps < 1) throw ConfigError("--steps: must be at least 1");

  std::vector<double> betas(static_cast<std::size_t>(cf.count));
  check(indefmass_critical_betas(L, a, betas.size(), betas.data()));

  std::vector<indefmass_staircase_row> rows;
  if (cf.beta_max) {
    std::size_t n = 0;
    const indefmass_status st =
        indefmass_ground_state_staircase(L, a, *cf.beta_max, static_cast<std::size_t>(cf.steps), nullptr, 0, &n);
    if (st != INDEFMASS_ERR_BUFFER_TOO_SMALL) check(st);
    rows.resize(n);
    check(indefmass_ground_state_staircase(L, a, *cf.beta_max, static_cast<std::size_t>(cf.steps), rows.data(),
                                           rows.size(), &n));
  }

  std::string s;
  if (format == "json") {
    Json j;
    j["L"] = L;
    j["a"] = a;
    Json crit = Json::array();
    for (std::size_t i = 0; i < betas.size(); ++i)
      crit.push_back({{"n", i + 1}, {"beta", betas[i]}, {"e_thr", -betas[i] * betas[i]}});
    j["critical"] = crit;
    if (cf.beta_max) {
      Json st = Json::array();
      for (const auto& r : rows)
        st.push_back({{"beta", r.beta},
                      {"negative_levels", r.negative_levels},
                      {"ground_nodes", r.ground_nodes},
                      {"ground_energy", r.ground_energy}});
      j["staircase"] = st;
    }
    s = j.dump(2) + "\n";
  } else {
    s += fmt::format("# L: {}\n# a: {}\nn,beta,e_thr\n", g(L), g(a));
    for (std::size_t i = 0; i < betas.size(); ++i)
      s += fmt::format("{},{},{}\n", i + 1, g(betas[i]), g(-betas[i] * betas[i]));
    if (cf.beta_max) {
      s += "\n# staircase\nbeta,negative_levels,ground_nodes,ground_energy\n";
      for (const auto& r : rows)
        s += fmt::format("{},{},{},{}\n", g(r.beta), r.negative_levels, r.ground_nodes, g(r.ground_energy));
    }
  }
  emit(s, f.out.empty() && config ? config->out : f.out, out);
  return kExitOk;
}

// ---- delta-limit -----------------------------------------------------------

struct DeltaFlags {
  double b_over_nu = 1.0;
  std::optional<double> L;
  std::string nus = "1e-1,1e-2,1e-3";
};

int cmd_delta_limit(const CommonFlags& f, const DeltaFlags& df, std::ostream& out) {
  const auto config = maybe_config(f);
  const std::string format = pick_format(f, config, {"csv", "json"}, "csv");
  double L = config ? config->half_width : 2.0;
  if (df.L) L = *df.L;

  std::vector<double> nus;
  std::string_view rest = df.nus;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    nus.push_back(parse_double(rest.substr(0, comma), "--nu"));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  if (nus.empty()) throw ConfigError("--nu: at least one value is required");

  std::vector<indefmass_delta_row> rows(nus.size());
  check(indefmass_delta_limit_study(df.b_over_nu, L, nus.data(), nus.size(), rows.data()));

  std::string s;
  if (format == "json") {
    Json j;
    j["b_over_nu"] = df.b_over_nu;
    j["L"] = L;
    Json rs = Json::array();
    for (const auto& r : rows)
      rs.push_back({{"nu", r.nu},
                    {"a", r.a},
                    {"b", r.b},
                    {"leftmost", r.leftmost},
                    {"second", r.second},
                    {"reduced", r.reduced},
                    {"escape_estimate", r.escape_estimate}});
    j["rows"] = rs;
    s = j.dump(2) + "\n";
  } else {
    s += fmt::format("# b_over_nu: {}\n# L: {}\nnu,a,b,leftmost,second,reduced,escape_estimate\n",
                     g(df.b_over_nu), g(L));
    for (const auto& r : rows)
      s += fmt::format("{},{},{},{},{},{},{}\n", g(r.nu), g(r.a), g(r.b), g(r.leftmost), g(r.second),
                       g(r.reduced), g(r.escape_estimate));
  }
  emit(s, f.out.empty() && config ? config->out : f.out, out);
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bound states of 1D wells with sign-changing, energy-dependent effective mass",
               "indefmass"};
  app.require_subcommand(1);
  app.set_version_flag("--version", indefmass_version());

  CommonFlags spectrum_f, wave_f, curves_f, critical_f, delta_f;

  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues, diagnostics and boundedness verdict");
  add_common(spectrum, spectrum_f, "energy window LO:HI");

  auto* wave = app.add_subcommand("wavefunction", "uniform-grid dump of one normalized eigenstate");
  add_common(wave, wave_f, "energy window LO:HI");
  std::optional<long> level, grid;
  wave->add_option("--level", level, "1-based level index in the window (energy order)");
  wave->add_option("--grid", grid, "number of grid points on [-L, L]");

  auto* curves = app.add_subcommand("curves", "graphical-solution curve pairs of a secular equation");
  add_common(curves, curves_f, "range LO:HI of the secular variable (k or kappa)");
  CurveFlags cf;
  curves->add_option("--branch", cf.branch, "secular branch, e.g. constant-neg-pos")->required();
  curves->add_option("--L", cf.L, "outer half-width");
  curves->add_option("--a", cf.a, "inner half-width");
  curves->add_option("--m0", cf.m0, "inner mass of the constant branches");
  curves->add_option("--beta", cf.beta, "step branch admissibility bound");
  curves->add_option("--b", cf.b, "two-parameter branch scale");
  curves->add_option("--samples", cf.samples, "samples over the range");

  auto* critical = app.add_subcommand("critical-beta", "critical step depths and ground-state staircase");
  add_common(critical, critical_f, "");
  CriticalFlags crf;
  critical->add_option("--L", crf.L, "outer half-width");
  critical->add_option("--a", crf.a, "inner half-width");
  critical->add_option("--count", crf.count, "number of critical values");
  critical->add_option("--beta-max", crf.beta_max, "also tabulate the staircase on (0, beta-max]");
  critical->add_option("--steps", crf.steps, "staircase grid steps");

  auto* delta = app.add_subcommand("delta-limit", "roots of the two-parameter model as a/b -> 0");
  add_common(delta, delta_f, "");
  DeltaFlags df;
  delta->add_option("--b-over-nu", df.b_over_nu, "fixed ratio b/nu = b^2/a");
  delta->add_option("--L", df.L, "outer half-width");
  delta->add_option("--nu", df.nus, "comma-separated nu = a/b values");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << indefmass_version() << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    if (spectrum->parsed()) return cmd_spectrum(spectrum_f, out);
    if (wave->parsed()) return cmd_wavefunction(wave_f, level, grid, out);
    if (curves->parsed()) return cmd_curves(curves_f, cf, out);
    if (critical->parsed()) return cmd_critical_beta(critical_f, crf, out);
    return cmd_delta_limit(delta_f, df, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const SolverFailure& e) {
    err << "solver diagnostic: " << e.what() << "\n";
    return kExitSolver;
  }
}

}  // namespace indefmass::cli
