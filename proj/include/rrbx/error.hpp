#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rrbx {

enum class ErrorKind {
  FieldMismatch,
  ShapeError,
  NotASubspace,
  DegreeOutOfRange,
  DegreeError,
  InvalidInput,
  InvalidCocycle,
  BoundExceeded,
  ModeUnsupported,
  NotAbelian,
  NotAbelianExtension,
  NotACocycle,
  NotPreservingKernel,
  NotInKernel,
  NotMembers,
  SingularAutomorphism,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// All library failures are reported through this type; `kind()` is the
/// machine-checkable part, `what()` carries the human-readable context.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace rrbx
