#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace polyheap {

enum class ErrorCode {
  // paths
  NegativeAltitude,
  ForbiddenCatastrophe,
  NonzeroFinalAltitude,
  UnknownToken,
  InvalidPath,
  // series
  NonUnitDivisor,
  NonUnitSqrt,
  OrderMismatch,
  // heaps
  NotFallen,
  Collision,
  NotConnected,
  NotStrict,
  NotAPyramid,
  NotHalfPyramid,
  NotStacked,
  RightWidthTooSmall,
  SizeTooLarge,
  // animals
  ParityViolation,
  PushDownFailed,
  NotStackedDirected,
  // io
  InvalidInput,
};

std::string_view error_name(ErrorCode code);

/// Every failure raised by the library. `name()` is the stable identifier
/// printed by the CLI.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace polyheap
