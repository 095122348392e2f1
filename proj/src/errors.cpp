#include "cubegroup/errors.hpp"

namespace cubegroup {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SelfCycle: return "SelfCycle";
    case ErrorKind::NonDisjointCycles: return "NonDisjointCycles";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::InvalidInvolution: return "InvalidInvolution";
    case ErrorKind::DistinctLabelsRequired: return "DistinctLabelsRequired";
    case ErrorKind::LabelSetMismatch: return "LabelSetMismatch";
    case ErrorKind::RankCapExceeded: return "RankCapExceeded";
    case ErrorKind::RankTooSmall: return "RankTooSmall";
    case ErrorKind::Usage: return "Usage";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::NotFourPeriodic: return "NotFourPeriodic";
    case ErrorKind::NotStandard: return "NotStandard";
    case ErrorKind::NotADecomposition: return "NotADecomposition";
    case ErrorKind::NotACubeGroup: return "NotACubeGroup";
    case ErrorKind::NotInvolution: return "NotInvolution";
    case ErrorKind::ClosureSizeMismatch: return "ClosureSizeMismatch";
    case ErrorKind::IllDefinedInvolution: return "IllDefinedInvolution";
    case ErrorKind::InternalConsistency: return "InternalConsistency";
  }
  return "Unknown";
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAdmissible:
    case ErrorKind::NotFourPeriodic:
    case ErrorKind::NotStandard:
    case ErrorKind::NotADecomposition:
    case ErrorKind::NotACubeGroup:
    case ErrorKind::NotInvolution:
      return 1;
    case ErrorKind::ClosureSizeMismatch:
    case ErrorKind::IllDefinedInvolution:
    case ErrorKind::InternalConsistency:
      return 3;
    default:
      return 2;
  }
}

CubeError::CubeError(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind) {}

ParseError::ParseError(ErrorKind kind, std::size_t line, std::size_t column,
                       const std::string& message)
    : CubeError(kind, "line " + std::to_string(line) + ", column " +
                          std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

}  // namespace cubegroup
