#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cstkit {

/// Domain error categories. The CLI prints `name(kind)` on the diagnostic stream.
enum class ErrorKind {
  ConductorMismatch,
  ConductorTooLarge,
  DivisionByZero,
  ArityMismatch,
  NotDivisible,
  SingularMatrix,
  ShapeError,
  GroupTooLarge,
  NotFiniteOrder,
  NotReflectionGroup,
  Unsupported,
  NotInvariant,
  InternalInconsistency,
  FactorizationFailure,
  NoMatrixModel,
  KernelNotInvariant,
  InvalidParameter,
  ParseError,
};

constexpr std::string_view name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ConductorMismatch: return "ConductorMismatch";
    case ErrorKind::ConductorTooLarge: return "ConductorTooLarge";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::ShapeError: return "ShapeError";
    case ErrorKind::GroupTooLarge: return "GroupTooLarge";
    case ErrorKind::NotFiniteOrder: return "NotFiniteOrder";
    case ErrorKind::NotReflectionGroup: return "NotReflectionGroup";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::FactorizationFailure: return "FactorizationFailure";
    case ErrorKind::NoMatrixModel: return "NoMatrixModel";
    case ErrorKind::KernelNotInvariant: return "KernelNotInvariant";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace cstkit
