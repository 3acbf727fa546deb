#include "berlab/types.hpp"

namespace berlab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::ZeroKernelPoint: return "ZeroKernelPoint";
    case ErrorCode::PointOutsideDisc: return "PointOutsideDisc";
    case ErrorCode::PointTooLarge: return "PointTooLarge";
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::MissingSecondOperand: return "MissingSecondOperand";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::NotOrthogonal: return "NotOrthogonal";
    case ErrorCode::UnknownBoundId: return "UnknownBoundId";
    case ErrorCode::UnknownFixture: return "UnknownFixture";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace berlab
