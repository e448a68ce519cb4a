#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hyperlaw {

enum class ErrorCode {
  EmptyCell,
  OutOfRange,
  DuplicateLabel,
  OrderOutOfBounds,
  EmptyOperand,
  IndexOutOfRange,
  OrderTooLargeForExhaustive,
  OrderTooLargeForCanonical,
  NotAnIdentity,
  NotLaSemihypergroup,
  UnsupportedConverse,
  InfeasibleQuery,
  StepDoesNotDivideModulus,
  SyntaxError,
};

std::string_view error_code_name(ErrorCode code) noexcept;

// Every failure in the library is reported through this type. `args` holds
// the numeric payload named by the code, e.g. (row, col) for EmptyCell,
// (row, col, element) for OutOfRange and (line, column) for SyntaxError.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string const& message,
        std::vector<std::int64_t> args = {});

  ErrorCode code() const noexcept { return _code; }
  std::vector<std::int64_t> const& args() const noexcept { return _args; }

 private:
  ErrorCode                 _code;
  std::vector<std::int64_t> _args;
};

}  // namespace hyperlaw
