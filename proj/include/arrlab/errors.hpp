#pragma once

#include <stdexcept>
#include <string>

namespace arrlab {

enum class ErrorKind {
  MalformedInput,
  DuplicateHyperplane,
  ZeroNormal,
  RowCountMismatch,
  Io,
  IndexOutOfRange,
  DimensionMismatch,
  DimensionTooSmall,
  RetryLimitExceeded,
  NotGeneric,
  OracleTooLarge,
  TooLarge,
  ZeroVector,
  NotEssential,
  Resonant,
  KOutOfRange,
};

const char* to_string(ErrorKind kind);

// Input errors (I/O and parse failures) map to CLI exit code 1, every other
// kind is a domain error and maps to exit code 2.
inline bool is_input_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedInput:
    case ErrorKind::DuplicateHyperplane:
    case ErrorKind::ZeroNormal:
    case ErrorKind::RowCountMismatch:
    case ErrorKind::Io:
      return true;
    default:
      return false;
  }
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace arrlab
