#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace parabose {

enum class ErrorCode {
  InvalidParameter,
  NonConvergence,
  OverflowRequiresLogSpace,
  QuadratureFailure,
  TruncationTooSmall,
  DegenerateState,
  NoRoot,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::OverflowRequiresLogSpace: return "OverflowRequiresLogSpace";
    case ErrorCode::QuadratureFailure: return "QuadratureFailure";
    case ErrorCode::TruncationTooSmall: return "TruncationTooSmall";
    case ErrorCode::DegenerateState: return "DegenerateState";
    case ErrorCode::NoRoot: return "NoRoot";
  }
  return "Unknown";
}

/// Every numeric failure in the library is reported with this type; the code
/// identifies the failure class so callers (the CLI in particular) can map it.
class NumericError : public std::runtime_error {
 public:
  NumericError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace parabose
