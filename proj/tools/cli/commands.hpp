#pragma once

#include <iosfwd>

namespace indefmass::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitSolver = 3;

/// Full command line including argv[0]. Results go to --out (or the config's
/// out key) and otherwise to `out`; diagnostics go to `err`. Output files are
/// written only after the command has completed successfully.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace indefmass::cli
