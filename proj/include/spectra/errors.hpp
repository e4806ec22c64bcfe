#pragma once

#include <stdexcept>
#include <string>

namespace spectra {

enum class ErrorCode {
  InvalidArgument,
  ImaginaryResidue,
  DegenerateParameter,
  NonIntegrable,
  ZeroPolynomial,
  StepFailure,
  OutOfGrid,
  BranchUndefined,
  ConventionUnresolved,
  NoSuchRoot,
  NodeDetected,
  PreconditionViolated,
  NotConverged,
  InsufficientDecay,
  AmbiguousZero,
  ConfigError,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace spectra
