#include "shapebasis/errors.hpp"

namespace shapebasis {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument:
      return "InvalidArgument";
    case ErrorCode::NonPositiveCheck:
      return "NonPositiveCheck";
    case ErrorCode::DegenerateShape:
      return "DegenerateShape";
    case ErrorCode::Infeasible:
      return "Infeasible";
    case ErrorCode::EmptyInput:
      return "EmptyInput";
    case ErrorCode::IndexOutOfRange:
      return "IndexOutOfRange";
    case ErrorCode::PreconditionViolated:
      return "PreconditionViolated";
    case ErrorCode::WindowTooSmall:
      return "WindowTooSmall";
    case ErrorCode::PhiMassZero:
      return "PhiMassZero";
    case ErrorCode::ContainmentFailed:
      return "ContainmentFailed";
    case ErrorCode::OverlappingSupports:
      return "OverlappingSupports";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what),
      code_(code) {}

}  // namespace shapebasis
