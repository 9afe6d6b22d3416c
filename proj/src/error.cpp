#include "finann/error.hpp"

namespace finann {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ClosureExceedsCap: return "ClosureExceedsCap";
    case ErrorCode::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::NotAGroup: return "NotAGroup";
    case ErrorCode::SingularGenerator: return "SingularGenerator";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::NotAbelian: return "NotAbelian";
    case ErrorCode::TrivialGroup: return "TrivialGroup";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::EmptyGeneratorList: return "EmptyGeneratorList";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::InvalidHint: return "InvalidHint";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace finann
