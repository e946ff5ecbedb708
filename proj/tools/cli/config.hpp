#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "indefmass/indefmass.h"

namespace indefmass::cli {

/// Malformed or inconsistent scenario configuration (exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Flat scenario file. Grammar, one entry per line:
///
///   line   := blank | '#' comment | key '=' value
///   key    := id | preset | inner | L | a | m0 | e_thr | beta | b | window
///           | parities | tol | format | out | level | grid
///           | evidence_k1 | evidence_k2
///
/// Whitespace around keys and values is ignored; unknown and repeated keys
/// are errors. window is "LO:HI", parities is "even", "odd" or "even,odd".
struct ScenarioConfig {
  std::string id = "scenario";
  std::string preset;           // uniform | constant-negative | tanh | step | two-param
  std::string inner;            // constant | tanh | step | scaled
  double half_width = 2.0;      // L
  double inner_half_width = 1.0;  // a
  std::optional<double> m0;
  std::optional<double> e_thr;
  std::optional<double> beta;
  std::optional<double> b;
  double window_lo = -100.0;
  double window_hi = 100.0;
  std::vector<indefmass_parity> parities{INDEFMASS_PARITY_EVEN};
  double tol = 1e-12;
  std::string format;           // json | csv | text; empty selects the command default
  std::string out;
  std::optional<long> level;
  std::optional<long> grid;
  double evidence_k1 = 10.0;
  double evidence_k2 = 100.0;
};

/// Profile constructor arguments for indefmass_profile_create.
struct ProfileParams {
  double half_width;
  double inner_half_width;
  indefmass_inner_kind kind;
  double param;
  bool operator==(const ProfileParams&) const = default;
};

ScenarioConfig parse_config(std::string_view text);
ScenarioConfig load_config(const std::string& path);

/// Canonical explicit form (no preset), doubles at 17 significant digits.
std::string serialize_config(const ScenarioConfig& config);

/// Applies the preset and checks that exactly the parameters of the chosen
/// inner law are present.
ProfileParams resolve_profile(const ScenarioConfig& config);

const std::vector<std::string>& preset_names();

double parse_double(std::string_view text, std::string_view what);
long parse_long(std::string_view text, std::string_view what);
/// "LO:HI" with LO < HI.
std::pair<double, double> parse_range(std::string_view text, std::string_view what);
std::vector<indefmass_parity> parse_parities(std::string_view text);
std::string format_double(double value);

}  // namespace indefmass::cli
