#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pawbar {

enum class ErrorCode {
  // linalg
  NotSymmetric,
  DidNotConverge,
  NotPSD,
  Singular,
  // measures
  DuplicatePoints,
  NonMonotoneQuantiles,
  NotPD,
  DimensionMismatch,
  SchemaError,
  // transport / interpolation
  SizeMismatch,
  MixedClass,
  DegenerateOutput,
  // graph
  NotStronglyConnected,
  NotConnected,
  BadWeight,
  BadProbability,
  BadEdge,
  // simulation / barycenter
  NonHomogeneous,
  AlignmentInconsistent,
  TooLarge,
  InvalidArgument,
  Io,
};

std::string_view to_string(ErrorCode code) noexcept;

/// True for failures of the numerics (as opposed to malformed input).
/// The CLI maps these to exit code 2.
bool is_numerical(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::DidNotConverge: return "DidNotConverge";
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::DuplicatePoints: return "DuplicatePoints";
    case ErrorCode::NonMonotoneQuantiles: return "NonMonotoneQuantiles";
    case ErrorCode::NotPD: return "NotPD";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::MixedClass: return "MixedClass";
    case ErrorCode::DegenerateOutput: return "DegenerateOutput";
    case ErrorCode::NotStronglyConnected: return "NotStronglyConnected";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::BadWeight: return "BadWeight";
    case ErrorCode::BadProbability: return "BadProbability";
    case ErrorCode::BadEdge: return "BadEdge";
    case ErrorCode::NonHomogeneous: return "NonHomogeneous";
    case ErrorCode::AlignmentInconsistent: return "AlignmentInconsistent";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

inline bool is_numerical(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DidNotConverge:
    case ErrorCode::NotPSD:
    case ErrorCode::Singular:
    case ErrorCode::DegenerateOutput:
      return true;
    default:
      return false;
  }
}

}  // namespace pawbar
