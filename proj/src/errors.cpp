#include "phasepoint/errors.hpp"

namespace phasepoint {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ContextMismatch: return "ContextMismatch";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::PrecisionLoss: return "PrecisionLoss";
    case ErrorCode::CompositionMismatch: return "CompositionMismatch";
    case ErrorCode::NotClifford: return "NotClifford";
    case ErrorCode::NotDefinedForEvenPrime: return "NotDefinedForEvenPrime";
    case ErrorCode::PolynomialSearchFailed: return "PolynomialSearchFailed";
    case ErrorCode::ShapeError: return "ShapeError";
    case ErrorCode::DegenerateFrame: return "DegenerateFrame";
    case ErrorCode::FiducialInvalid: return "FiducialInvalid";
    case ErrorCode::UsageError: return "UsageError";
    case ErrorCode::FeasibilityError: return "FeasibilityError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace phasepoint
