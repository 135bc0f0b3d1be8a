#include "mcalc/error.hpp"

namespace mcalc {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDivisionByZero: return "DIVISION_BY_ZERO";
    case ErrorCode::kFieldMismatch: return "FIELD_MISMATCH";
    case ErrorCode::kRingMismatch: return "RING_MISMATCH";
    case ErrorCode::kUnitIdeal: return "UNIT_IDEAL";
    case ErrorCode::kNotZeroDimensional: return "NOT_ZERO_DIMENSIONAL";
    case ErrorCode::kImageNotInKernel: return "IMAGE_NOT_IN_KERNEL";
    case ErrorCode::kDimensionDropViolated: return "DIMENSION_DROP_VIOLATED";
    case ErrorCode::kNotFiniteColength: return "NOT_FINITE_COLENGTH";
    case ErrorCode::kSupportNotAtOrigin: return "SUPPORT_NOT_AT_ORIGIN";
    case ErrorCode::kNoStabilization: return "NO_STABILIZATION";
    case ErrorCode::kInfiniteHomology: return "INFINITE_HOMOLOGY";
    case ErrorCode::kHypothesisFails: return "HYPOTHESIS_FAILS";
    case ErrorCode::kNotDimensionOne: return "NOT_DIMENSION_ONE";
    case ErrorCode::kNotParameter: return "NOT_PARAMETER";
    case ErrorCode::kUnknownScenario: return "UNKNOWN_SCENARIO";
    case ErrorCode::kParseError: return "PARSE_ERROR";
    case ErrorCode::kUnknownFieldKind: return "UNKNOWN_FIELD_KIND";
    case ErrorCode::kBadCharacteristic: return "BAD_CHARACTERISTIC";
    case ErrorCode::kSaturationCap: return "SATURATION_CAP";
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
  }
  return "UNKNOWN";
}

}  // namespace mcalc
