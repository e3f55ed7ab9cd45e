#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace phasepoint {

enum class ErrorCode {
  ContextMismatch,
  GroupTooLarge,
  OutOfRange,
  NotUnitary,
  NotHermitian,
  PrecisionLoss,
  CompositionMismatch,
  NotClifford,
  NotDefinedForEvenPrime,
  PolynomialSearchFailed,
  ShapeError,
  DegenerateFrame,
  FiducialInvalid,
  UsageError,
  FeasibilityError,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this type; `code()` is stable,
// the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace phasepoint
