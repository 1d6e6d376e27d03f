#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ptrig {

enum class ErrorKind {
  InvalidArgument,
  InvalidInterval,
  DomainError,
  PoleError,
  NotBracketed,
  NonConvergence,
  EvaluationFailed,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. `cause()` is the kind of the
/// innermost error when one error wraps another (EvaluationFailed), and
/// equals `kind()` otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : Error(kind, message, kind) {}
  Error(ErrorKind kind, const std::string& message, ErrorKind cause)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        cause_(cause) {}

  ErrorKind kind() const noexcept { return kind_; }
  ErrorKind cause() const noexcept { return cause_; }

 private:
  ErrorKind kind_;
  ErrorKind cause_;
};

inline std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InvalidInterval: return "InvalidInterval";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::PoleError: return "PoleError";
    case ErrorKind::NotBracketed: return "NotBracketed";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::EvaluationFailed: return "EvaluationFailed";
  }
  return "Unknown";
}

}  // namespace ptrig
