#include "rrbx/error.hpp"

namespace rrbx {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::ShapeError: return "ShapeError";
    case ErrorKind::NotASubspace: return "NotASubspace";
    case ErrorKind::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorKind::DegreeError: return "DegreeError";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::InvalidCocycle: return "InvalidCocycle";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::ModeUnsupported: return "ModeUnsupported";
    case ErrorKind::NotAbelian: return "NotAbelian";
    case ErrorKind::NotAbelianExtension: return "NotAbelianExtension";
    case ErrorKind::NotACocycle: return "NotACocycle";
    case ErrorKind::NotPreservingKernel: return "NotPreservingKernel";
    case ErrorKind::NotInKernel: return "NotInKernel";
    case ErrorKind::NotMembers: return "NotMembers";
    case ErrorKind::SingularAutomorphism: return "SingularAutomorphism";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace rrbx
