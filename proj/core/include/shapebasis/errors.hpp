#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace shapebasis {

enum class ErrorCode {
  InvalidArgument,
  NonPositiveCheck,
  DegenerateShape,
  Infeasible,
  EmptyInput,
  IndexOutOfRange,
  PreconditionViolated,
  WindowTooSmall,
  PhiMassZero,
  ContainmentFailed,
  OverlappingSupports,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every recoverable failure in the library is reported as an Error carrying
/// a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace shapebasis
