#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ptn {

enum class ErrorCode {
  MissingFile,
  MalformedRow,
  SchemaViolation,
  IntegrityViolation,
  InvalidGraph,
  InvalidThreshold,
  InvalidArgument,
  MalformedNet,
  EmptyGraph,
  UnknownStop,
  UnknownRoute,
  Io,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MissingFile: return "MissingFile";
    case ErrorCode::MalformedRow: return "MalformedRow";
    case ErrorCode::SchemaViolation: return "SchemaViolation";
    case ErrorCode::IntegrityViolation: return "IntegrityViolation";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::InvalidThreshold: return "InvalidThreshold";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::MalformedNet: return "MalformedNet";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::UnknownStop: return "UnknownStop";
    case ErrorCode::UnknownRoute: return "UnknownRoute";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), message_(message) {}

  ErrorCode code() const noexcept { return code_; }
  /// The message without the code prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

}  // namespace ptn
