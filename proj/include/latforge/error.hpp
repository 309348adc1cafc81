#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace latforge {

enum class ErrorCode {
  kInvalidBasis,
  kDependentRows,
  kRankDeficient,
  kBoxTooLarge,
  kBadParams,
  kDegreeMismatch,
  kInfeasibleRadius,
  kDegreeTooSmall,
  kNotPrime,
  kBadBlocking,
  kBadStageParams,
  kStageInfeasible,
  kParseError,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library. The code identifies the contract that
// was violated; what() carries a human-readable diagnostic.
class LatticeError : public std::runtime_error {
 public:
  LatticeError(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

  // True for errors caused by bad inputs or parameters (as opposed to a
  // failure detected in the middle of a computation).
  bool is_usage_error() const noexcept;

 private:
  ErrorCode code_;
};

class ParseError : public LatticeError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace latforge
