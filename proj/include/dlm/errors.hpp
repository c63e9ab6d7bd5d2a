#pragma once

#include <stdexcept>
#include <string>

namespace dlm {

// Error identifiers used across the library. Contract violations throw
// Error; expected absences (no detection, no survivor) are signalled with
// std::optional return values instead.
enum class ErrorCode {
  SourceOutsideSearchArea,
  TauMaxTooSmall,
  WrapViolation,
  DelayOutOfRange,
  InconsistentSpec,
  NonConvergence,
  InsufficientSensors,
  InvalidArgument,
  IoError,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

// Thrown by the convex solvers when the certificate gap cannot be driven
// below tolerance within the iteration budget.
class NonConvergence : public Error {
public:
  NonConvergence(long iterations, double gap, const std::string& what)
      : Error(ErrorCode::NonConvergence, what),
        iterations_(iterations),
        gap_(gap) {}
  long iterations() const { return iterations_; }
  double gap() const { return gap_; }

private:
  long iterations_;
  double gap_;
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::SourceOutsideSearchArea: return "SourceOutsideSearchArea";
    case ErrorCode::TauMaxTooSmall: return "TauMaxTooSmall";
    case ErrorCode::WrapViolation: return "WrapViolation";
    case ErrorCode::DelayOutOfRange: return "DelayOutOfRange";
    case ErrorCode::InconsistentSpec: return "InconsistentSpec";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::InsufficientSensors: return "InsufficientSensors";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace dlm
