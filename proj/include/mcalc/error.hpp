#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mcalc {

// Every engine failure carries one of these codes; the CLI prints the
// upper-case name returned by error_code_name().
enum class ErrorCode {
  kDivisionByZero,
  kFieldMismatch,
  kRingMismatch,
  kUnitIdeal,
  kNotZeroDimensional,
  kImageNotInKernel,
  kDimensionDropViolated,
  kNotFiniteColength,
  kSupportNotAtOrigin,
  kNoStabilization,
  kInfiniteHomology,
  kHypothesisFails,
  kNotDimensionOne,
  kNotParameter,
  kUnknownScenario,
  kParseError,
  kUnknownFieldKind,
  kBadCharacteristic,
  kSaturationCap,
  kInvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mcalc
