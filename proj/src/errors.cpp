#include "spectra/errors.hpp"

namespace spectra {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ImaginaryResidue: return "ImaginaryResidue";
    case ErrorCode::DegenerateParameter: return "DegenerateParameter";
    case ErrorCode::NonIntegrable: return "NonIntegrable";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::StepFailure: return "StepFailure";
    case ErrorCode::OutOfGrid: return "OutOfGrid";
    case ErrorCode::BranchUndefined: return "BranchUndefined";
    case ErrorCode::ConventionUnresolved: return "ConventionUnresolved";
    case ErrorCode::NoSuchRoot: return "NoSuchRoot";
    case ErrorCode::NodeDetected: return "NodeDetected";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NotConverged: return "NotConverged";
    case ErrorCode::InsufficientDecay: return "InsufficientDecay";
    case ErrorCode::AmbiguousZero: return "AmbiguousZero";
    case ErrorCode::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

}  // namespace spectra
