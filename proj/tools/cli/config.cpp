#include "config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <fmt/format.h>

namespace indefmass::cli {
namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

const std::set<std::string, std::less<>> kKeys{
    "id",       "preset", "inner", "L",   "a",      "m0",          "e_thr",      "beta",
    "b",        "window", "parities", "tol", "format", "out",      "level",      "grid",
    "evidence_k1", "evidence_k2"};

struct Preset {
  std::string inner;
  std::optional<double> m0, beta, b;
};

const std::map<std::string, Preset, std::less<>>& presets() {
  static const std::map<std::string, Preset, std::less<>> p{
      {"uniform", {"constant", 1.0, {}, {}}},
      {"constant-negative", {"constant", -1.0, {}, {}}},
      {"tanh", {"tanh", {}, {}, {}}},
      {"step", {"step", {}, 2.0, {}}},
      {"two-param", {"scaled", {}, {}, 1.0}},
  };
  return p;
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [k, v] : presets()) n.push_back(k);
    return n;
  }();
  return names;
}

std::string format_double(double value) { return fmt::format("{:.17g}", value); }

double parse_double(std::string_view text, std::string_view what) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(v))
    throw ConfigError(fmt::format("{}: '{}' is not a finite number", what, text));
  return v;
}

long parse_long(std::string_view text, std::string_view what) {
  text = trim(text);
  long v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw ConfigError(fmt::format("{}: '{}' is not an integer", what, text));
  return v;
}

std::pair<double, double> parse_range(std::string_view text, std::string_view what) {
  text = trim(text);
  // the separator is the first ':' that is not a leading sign position
  const auto colon = text.find(':', 1);
  if (colon == std::string_view::npos)
    throw ConfigError(fmt::format("{}: '{}' is not of the form LO:HI", what, text));
  const double lo = parse_double(text.substr(0, colon), what);
  const double hi = parse_double(text.substr(colon + 1), what);
  if (!(lo < hi)) throw ConfigError(fmt::format("{}: needs LO < HI (got '{}')", what, text));
  return {lo, hi};
}

std::vector<indefmass_parity> parse_parities(std::string_view text) {
  std::vector<indefmass_parity> out;
  std::string_view rest = trim(text);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const auto item = trim(rest.substr(0, comma));
    indefmass_parity p;
    if (item == "even")
      p = INDEFMASS_PARITY_EVEN;
    else if (item == "odd")
      p = INDEFMASS_PARITY_ODD;
    else
      throw ConfigError(fmt::format("parities: unknown parity '{}'", item));
    for (auto q : out)
      if (q == p) throw ConfigError(fmt::format("parities: '{}' listed twice", item));
    out.push_back(p);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  if (out.empty()) throw ConfigError("parities: at least one parity is required");
  return out;
}

ScenarioConfig parse_config(std::string_view text) {
  ScenarioConfig c;
  std::set<std::string, std::less<>> seen;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError(fmt::format("line {}: expected 'key = value'", line_no));
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (!kKeys.contains(key)) throw ConfigError(fmt::format("line {}: unknown key '{}'", line_no, key));
    if (!seen.insert(key).second)
      throw ConfigError(fmt::format("line {}: key '{}' given twice", line_no, key));
    if (value.empty()) throw ConfigError(fmt::format("line {}: key '{}' has no value", line_no, key));

    const std::string what = fmt::format("line {} ({})", line_no, key);
    if (key == "id") c.id = value;
    else if (key == "preset") {
      if (!presets().contains(value))
        throw ConfigError(fmt::format("{}: unknown preset '{}'", what, value));
      c.preset = value;
    } else if (key == "inner") {
      if (value != "constant" && value != "tanh" && value != "step" && value != "scaled")
        throw ConfigError(fmt::format("{}: unknown inner law '{}'", what, value));
      c.inner = value;
    } else if (key == "L") c.half_width = parse_double(value, what);
    else if (key == "a") c.inner_half_width = parse_double(value, what);
    else if (key == "m0") c.m0 = parse_double(value, what);
    else if (key == "e_thr") c.e_thr = parse_double(value, what);
    else if (key == "beta") c.beta = parse_double(value, what);
    else if (key == "b") c.b = parse_double(value, what);
    else if (key == "window") std::tie(c.window_lo, c.window_hi) = parse_range(value, what);
    else if (key == "parities") c.parities = parse_parities(value);
    else if (key == "tol") c.tol = parse_double(value, what);
    else if (key == "format") c.format = value;
    else if (key == "out") c.out = value;
    else if (key == "level") c.level = parse_long(value, what);
    else if (key == "grid") c.grid = parse_long(value, what);
    else if (key == "evidence_k1") c.evidence_k1 = parse_double(value, what);
    else if (key == "evidence_k2") c.evidence_k2 = parse_double(value, what);
  }

  if (!c.format.empty() && c.format != "json" && c.format != "csv" && c.format != "text")
    throw ConfigError(fmt::format("format: unknown output format '{}'", c.format));
  if (!(c.tol > 0.0)) throw ConfigError("tol: must be positive");
  if (!(c.evidence_k1 > 0.0 && c.evidence_k1 < c.evidence_k2))
    throw ConfigError("evidence_k1/evidence_k2: need 0 < k1 < k2");
  resolve_profile(c);
  return c;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(fmt::format("cannot read config file '{}'", path));
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

ProfileParams resolve_profile(const ScenarioConfig& config) {
  std::string inner = config.inner;
  auto m0 = config.m0;
  auto beta = config.beta;
  auto b = config.b;
  if (!config.preset.empty()) {
    const Preset& p = presets().find(config.preset)->second;
    if (!inner.empty() && inner != p.inner)
      throw ConfigError(
          fmt::format("preset '{}' implies inner = {}, got {}", config.preset, p.inner, inner));
    inner = p.inner;
    if (!m0) m0 = p.m0;
    if (!beta && !config.e_thr) beta = p.beta;
    if (!b) b = p.b;
  }
  if (inner.empty()) throw ConfigError("either 'preset' or 'inner' is required");

  const double L = config.half_width, a = config.inner_half_width;
  if (!(a > 0.0 && a < L)) throw ConfigError(fmt::format("geometry needs 0 < a < L (L={}, a={})", L, a));

  const auto forbid = [&](bool present, const char* key) {
    if (present) throw ConfigError(fmt::format("key '{}' does not apply to inner = {}", key, inner));
  };
  if (inner == "constant") {
    forbid(config.e_thr || config.beta, "e_thr/beta");
    forbid(config.b.has_value(), "b");
    if (!m0) throw ConfigError("inner = constant needs m0");
    return {L, a, INDEFMASS_INNER_CONSTANT, *m0};
  }
  if (inner == "tanh") {
    forbid(config.m0.has_value(), "m0");
    forbid(config.e_thr || config.beta, "e_thr/beta");
    forbid(config.b.has_value(), "b");
    return {L, a, INDEFMASS_INNER_TANH, 0.0};
  }
  if (inner == "step") {
    forbid(config.m0.has_value(), "m0");
    forbid(config.b.has_value(), "b");
    if (config.e_thr && config.beta) throw ConfigError("give either e_thr or beta, not both");
    if (config.e_thr) return {L, a, INDEFMASS_INNER_STEP, *config.e_thr};
    if (!beta) throw ConfigError("inner = step needs e_thr or beta");
    return {L, a, INDEFMASS_INNER_STEP, -(*beta) * (*beta)};
  }
  forbid(config.m0.has_value(), "m0");
  forbid(config.e_thr || config.beta, "e_thr/beta");
  if (!b || !(*b > 0.0)) throw ConfigError("inner = scaled needs b > 0");
  return {L, a, INDEFMASS_INNER_SCALED, *b};
}

std::string serialize_config(const ScenarioConfig& config) {
  const ProfileParams p = resolve_profile(config);
  std::string s;
  s += fmt::format("id = {}\n", config.id);
  switch (p.kind) {
    case INDEFMASS_INNER_CONSTANT:
      s += fmt::format("inner = constant\nm0 = {}\n", format_double(p.param));
      break;
    case INDEFMASS_INNER_TANH:
      s += "inner = tanh\n";
      break;
    case INDEFMASS_INNER_STEP:
      s += fmt::format("inner = step\ne_thr = {}\n", format_double(p.param));
      break;
    case INDEFMASS_INNER_SCALED:
      s += fmt::format("inner = scaled\nb = {}\n", format_double(p.param));
      break;
  }
  s += fmt::format("L = {}\na = {}\n", format_double(p.half_width), format_double(p.inner_half_width));
  s += fmt::format("window = {}:{}\n", format_double(config.window_lo), format_double(config.window_hi));
  std::string par;
  for (auto q : config.parities) {
    if (!par.empty()) par += ",";
    par += q == INDEFMASS_PARITY_EVEN ? "even" : "odd";
  }
  s += fmt::format("parities = {}\n", par);
  s += fmt::format("tol = {}\n", format_double(config.tol));
  if (!config.format.empty()) s += fmt::format("format = {}\n", config.format);
  if (!config.out.empty()) s += fmt::format("out = {}\n", config.out);
  if (config.level) s += fmt::format("level = {}\n", *config.level);
  if (config.grid) s += fmt::format("grid = {}\n", *config.grid);
  s += fmt::format("evidence_k1 = {}\nevidence_k2 = {}\n", format_double(config.evidence_k1),
                   format_double(config.evidence_k2));
  return s;
}

}  // namespace indefmass::cli
