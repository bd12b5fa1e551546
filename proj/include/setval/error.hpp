#ifndef SETVAL_ERROR_HPP
#define SETVAL_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace setval {

enum class ErrorCode {
  InvalidVertex,
  SelfLoopRejected,
  EdgeNotInGraph,
  CycleBudgetExceeded,
  GroundSetMismatch,
  ElementOutOfRange,
  NotInjective,
  MissingLabel,
  GroundSetTooSmall,
  PreconditionViolated,
  NotEulerian,
  NotSetIndexer,
  TooLarge,
  BudgetExceeded,
  ParseError,
  DuplicateEdgeConflict,
  IoError,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Malformed input text. Line numbers are 1-based; 0 means "whole document".
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& reason);

  std::size_t line() const noexcept { return line_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t line_;
  std::string reason_;
};

}  // namespace setval

#endif  // SETVAL_ERROR_HPP
