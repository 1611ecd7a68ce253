#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cubesym {

enum class ErrorKind {
  ParameterOutOfRange,
  SizeGuard,
  DimensionMismatch,
  Unreachable,
  VertexOutOfRange,
  DuplicateVertex,
  NoStructuredForm,
  SearchBudgetExceeded,
  NotTwoDistinguishable,
  Overflow,
  ParseError,
  InternalInconsistency,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries one of the kinds above so the
// CLI can map it onto an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cubesym
