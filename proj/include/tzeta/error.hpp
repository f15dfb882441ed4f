#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tzeta {

enum class ErrorKind {
  GradeMismatch,
  InvalidCell,
  NotDoublyBounded,
  NotUnimodular,
  InvalidLevel,
  InvalidPeriod,
  RingMismatch,
  NoLimit,
  NotAGerm,
  UnsupportedGerm,
  DeskScaleExceeded,
  SchemaViolation,
  NonDisjointCells,
  Unsupported,
  Parse,
};

std::string_view to_string(ErrorKind kind);

/// Every failure in the library surfaces as this exception; `kind()` is the
/// machine-readable part, `what()` carries context such as cell indices.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace tzeta
