#include "polyheap/error.hpp"

namespace polyheap {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NegativeAltitude: return "NegativeAltitude";
    case ErrorCode::ForbiddenCatastrophe: return "ForbiddenCatastrophe";
    case ErrorCode::NonzeroFinalAltitude: return "NonzeroFinalAltitude";
    case ErrorCode::UnknownToken: return "UnknownToken";
    case ErrorCode::InvalidPath: return "InvalidPath";
    case ErrorCode::NonUnitDivisor: return "NonUnitDivisor";
    case ErrorCode::NonUnitSqrt: return "NonUnitSqrt";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::NotFallen: return "NotFallen";
    case ErrorCode::Collision: return "Collision";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::NotStrict: return "NotStrict";
    case ErrorCode::NotAPyramid: return "NotAPyramid";
    case ErrorCode::NotHalfPyramid: return "NotHalfPyramid";
    case ErrorCode::NotStacked: return "NotStacked";
    case ErrorCode::RightWidthTooSmall: return "RightWidthTooSmall";
    case ErrorCode::SizeTooLarge: return "SizeTooLarge";
    case ErrorCode::ParityViolation: return "ParityViolation";
    case ErrorCode::PushDownFailed: return "PushDownFailed";
    case ErrorCode::NotStackedDirected: return "NotStackedDirected";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

}  // namespace polyheap
