#pragma once

#include <stdexcept>
#include <string>

namespace indefmass {

enum class ErrorCode {
  invalid_argument = 1,
  domain = 2,
  pole_proximity = 3,
  refinement_exhausted = 4,
  out_of_range = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Violated precondition on a parameter (bad geometry, empty window, ...).
class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what) : Error(ErrorCode::invalid_argument, what) {}
};

// Evaluation point outside the well or outside the representable range.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorCode::domain, what) {}
};

// Residual requested inside an excluded tangent-pole neighbourhood.
class PoleError : public Error {
 public:
  explicit PoleError(const std::string& what) : Error(ErrorCode::pole_proximity, what) {}
};

// Sign-change isolation could not separate roots at maximum refinement.
class RefinementError : public Error {
 public:
  explicit RefinementError(const std::string& what)
      : Error(ErrorCode::refinement_exhausted, what) {}
};

class OutOfRange : public Error {
 public:
  explicit OutOfRange(const std::string& what) : Error(ErrorCode::out_of_range, what) {}
};

}  // namespace indefmass
