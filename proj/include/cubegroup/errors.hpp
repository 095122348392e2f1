#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cubegroup {

/// Every failure the library reports carries one of these categories.
/// The CLI prints the category name verbatim, so treat names as stable.
enum class ErrorKind {
  ParseError,
  SelfCycle,
  NonDisjointCycles,
  UnknownLabel,
  DuplicateLabel,
  InvalidInvolution,
  DistinctLabelsRequired,
  LabelSetMismatch,
  RankCapExceeded,
  RankTooSmall,
  Usage,
  NotAdmissible,
  NotFourPeriodic,
  NotStandard,
  NotADecomposition,
  NotACubeGroup,
  NotInvolution,
  ClosureSizeMismatch,
  IllDefinedInvolution,
  InternalConsistency,
};

std::string_view to_string(ErrorKind kind);

/// Process exit code for a category: 1 for a domain "no" answer,
/// 2 for bad input or usage, 3 for an internal consistency failure.
int exit_code_for(ErrorKind kind);

class CubeError : public std::runtime_error {
 public:
  CubeError(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failures remember where they happened (1-based).
class ParseError : public CubeError {
 public:
  ParseError(ErrorKind kind, std::size_t line, std::size_t column,
             const std::string& message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace cubegroup
