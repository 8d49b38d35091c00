#pragma once

#include <stdexcept>
#include <string>

namespace hecke01 {

enum class ErrorCode {
  InvalidInput,
  NonSymmetricMatrix,
  BadDiagonal,
  UnsupportedOrder,
  BadWeight,
  OddEdgeWeightMismatch,
  BadGenerator,
  LengthCapExceeded,
  CapExceeded,
  NotInSubgroup,
  NotInParabolic,
  NotPreserved,
  SprimeLookupFailed,
  CacheMismatch,
  VerificationFailure,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NonSymmetricMatrix: return "NonSymmetricMatrix";
    case ErrorCode::BadDiagonal: return "BadDiagonal";
    case ErrorCode::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorCode::BadWeight: return "BadWeight";
    case ErrorCode::OddEdgeWeightMismatch: return "OddEdgeWeightMismatch";
    case ErrorCode::BadGenerator: return "BadGenerator";
    case ErrorCode::LengthCapExceeded: return "LengthCapExceeded";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotInSubgroup: return "NotInSubgroup";
    case ErrorCode::NotInParabolic: return "NotInParabolic";
    case ErrorCode::NotPreserved: return "NotPreserved";
    case ErrorCode::SprimeLookupFailed: return "SprimeLookupFailed";
    case ErrorCode::CacheMismatch: return "CacheMismatch";
    case ErrorCode::VerificationFailure: return "VerificationFailure";
  }
  return "Unknown";
}

// Errors caused by malformed user input, as opposed to failed computations
// or failed verification.
inline bool is_input_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput:
    case ErrorCode::NonSymmetricMatrix:
    case ErrorCode::BadDiagonal:
    case ErrorCode::UnsupportedOrder:
    case ErrorCode::BadWeight:
    case ErrorCode::OddEdgeWeightMismatch:
    case ErrorCode::BadGenerator:
      return true;
    default:
      return false;
  }
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hecke01
