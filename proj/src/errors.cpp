#include "cubesym/errors.hpp"

namespace cubesym {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorKind::SizeGuard: return "SizeGuard";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::Unreachable: return "Unreachable";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::DuplicateVertex: return "DuplicateVertex";
    case ErrorKind::NoStructuredForm: return "NoStructuredForm";
    case ErrorKind::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorKind::NotTwoDistinguishable: return "NotTwoDistinguishable";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

}  // namespace cubesym
