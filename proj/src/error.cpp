#include "hyperlaw/error.hpp"

#include <utility>

namespace hyperlaw {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyCell: return "EmptyCell";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::OrderOutOfBounds: return "OrderOutOfBounds";
    case ErrorCode::EmptyOperand: return "EmptyOperand";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::OrderTooLargeForExhaustive:
      return "OrderTooLargeForExhaustive";
    case ErrorCode::OrderTooLargeForCanonical:
      return "OrderTooLargeForCanonical";
    case ErrorCode::NotAnIdentity: return "NotAnIdentity";
    case ErrorCode::NotLaSemihypergroup: return "NotLaShg";
    case ErrorCode::UnsupportedConverse: return "UnsupportedConverse";
    case ErrorCode::InfeasibleQuery: return "InfeasibleQuery";
    case ErrorCode::StepDoesNotDivideModulus:
      return "StepDoesNotDivideModulus";
    case ErrorCode::SyntaxError: return "SyntaxError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, std::string const& message,
             std::vector<std::int64_t> args)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      _code(code),
      _args(std::move(args)) {}

}  // namespace hyperlaw
