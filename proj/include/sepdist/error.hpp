#pragma once

#include <stdexcept>
#include <string>

namespace sepdist {

enum class ErrorCode {
  DimMismatch,
  NotHermitian,
  NotAState,
  NotUnitVector,
  NotSeparable,
  ZeroDirection,
  UnknownRegion,
  ParseError,
};

constexpr const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimMismatch: return "DimMismatch";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotAState: return "NotAState";
    case ErrorCode::NotUnitVector: return "NotUnitVector";
    case ErrorCode::NotSeparable: return "NotSeparable";
    case ErrorCode::ZeroDirection: return "ZeroDirection";
    case ErrorCode::UnknownRegion: return "UnknownRegion";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Exception type for every contract violation in the library. The code is
/// stable and is what callers (and the CLI exit-code mapping) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sepdist
