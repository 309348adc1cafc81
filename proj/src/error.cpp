#include "latforge/error.hpp"

namespace latforge {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidBasis: return "InvalidBasis";
    case ErrorCode::kDependentRows: return "DependentRows";
    case ErrorCode::kRankDeficient: return "RankDeficient";
    case ErrorCode::kBoxTooLarge: return "BoxTooLarge";
    case ErrorCode::kBadParams: return "BadParams";
    case ErrorCode::kDegreeMismatch: return "DegreeMismatch";
    case ErrorCode::kInfeasibleRadius: return "InfeasibleRadius";
    case ErrorCode::kDegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kBadBlocking: return "BadBlocking";
    case ErrorCode::kBadStageParams: return "BadStageParams";
    case ErrorCode::kStageInfeasible: return "StageInfeasible";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

LatticeError::LatticeError(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

bool LatticeError::is_usage_error() const noexcept {
  // DependentRows can only surface mid-computation on a basis that passed
  // validation, so it is the one computational failure.
  return code_ != ErrorCode::kDependentRows;
}

ParseError::ParseError(std::size_t line, std::size_t column,
                       const std::string& message)
    : LatticeError(ErrorCode::kParseError,
                   "line " + std::to_string(line) + ", column " +
                       std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

}  // namespace latforge
