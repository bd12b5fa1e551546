#include "setval/error.hpp"

namespace setval {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidVertex: return "InvalidVertex";
    case ErrorCode::SelfLoopRejected: return "SelfLoopRejected";
    case ErrorCode::EdgeNotInGraph: return "EdgeNotInGraph";
    case ErrorCode::CycleBudgetExceeded: return "CycleBudgetExceeded";
    case ErrorCode::GroundSetMismatch: return "GroundSetMismatch";
    case ErrorCode::ElementOutOfRange: return "ElementOutOfRange";
    case ErrorCode::NotInjective: return "NotInjective";
    case ErrorCode::MissingLabel: return "MissingLabel";
    case ErrorCode::GroundSetTooSmall: return "GroundSetTooSmall";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NotEulerian: return "NotEulerian";
    case ErrorCode::NotSetIndexer: return "NotSetIndexer";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DuplicateEdgeConflict: return "DuplicateEdgeConflict";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

ParseError::ParseError(std::size_t line, const std::string& reason)
    : Error(ErrorCode::ParseError,
            (line == 0 ? std::string() : "line " + std::to_string(line) + ": ") + reason),
      line_(line),
      reason_(reason) {}

}  // namespace setval
