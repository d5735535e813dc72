#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace omeasure {

/// Machine-readable error categories. Every exception thrown by the library
/// carries one of these.
enum class ErrorCode {
  NotFinite,
  NotMonomial,
  OutOfDomain,
  OutOfRange,
  NoStdInterior,
  BracketDiverged,
  ToleranceUnreachable,
  UnsupportedImage,
  SyntaxError,
  ClassViolation,
  DimensionMismatch,
  InvalidArgument,
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotFinite: return "NotFinite";
    case ErrorCode::NotMonomial: return "NotMonomial";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NoStdInterior: return "NoStdInterior";
    case ErrorCode::BracketDiverged: return "BracketDiverged";
    case ErrorCode::ToleranceUnreachable: return "ToleranceUnreachable";
    case ErrorCode::UnsupportedImage: return "UnsupportedImage";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::ClassViolation: return "ClassViolation";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Error(ErrorCode code, const std::string& message, std::size_t position = npos)
      : std::runtime_error(format(code, message, position)),
        code_(code),
        position_(position),
        detail_(message) {}

  ErrorCode code() const noexcept { return code_; }
  /// Byte offset into the source text, or npos when not parse-related.
  std::size_t position() const noexcept { return position_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  static std::string format(ErrorCode code, const std::string& message, std::size_t position) {
    std::string out = error_code_name(code);
    if (position != npos) out += " at " + std::to_string(position);
    out += ": " + message;
    return out;
  }

  ErrorCode code_;
  std::size_t position_;
  std::string detail_;
};

}  // namespace omeasure
