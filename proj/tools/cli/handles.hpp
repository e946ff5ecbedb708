#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include "indefmass/indefmass.h"

namespace indefmass::cli {

/// Solver-side failure reported by the library (exit code 3).
class SolverFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class T, void (*Destroy)(T*)>
struct HandleDeleter {
  void operator()(T* p) const noexcept { Destroy(p); }
};

using ProfileHandle =
    std::unique_ptr<indefmass_profile, HandleDeleter<indefmass_profile, indefmass_profile_destroy>>;
using WavefunctionHandle =
    std::unique_ptr<indefmass_wavefunction,
                    HandleDeleter<indefmass_wavefunction, indefmass_wavefunction_destroy>>;
using ReportHandle =
    std::unique_ptr<indefmass_report, HandleDeleter<indefmass_report, indefmass_report_destroy>>;

/// INVALID_ARGUMENT maps to ConfigError, every other failure to SolverFailure.
void check(indefmass_status status);

}  // namespace indefmass::cli
