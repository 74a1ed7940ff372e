#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tkem {

enum class ErrorKind {
  EmptyInput,
  IllegalCharacter,
  LeadingOne,
  OrderTooSmall,
  OrderOutOfRange,
  ParameterOutOfRange,
  LengthMismatch,
  Disconnected,
  IndexOutOfRange,
  NonIntegralEntry,
  EigensolveFailure,
  SingularSolve,
  TooLarge,
  SameVertex,
  CheckpointMismatch,
};

std::string_view error_name(ErrorKind kind) noexcept;

/// Domain error raised by every library operation. The CLI maps these to
/// exit code 1 and reports error_name(kind()).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace tkem
