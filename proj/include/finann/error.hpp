#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace finann {

enum class ErrorCode {
  ClosureExceedsCap,
  OrderCapExceeded,
  SearchBudgetExceeded,
  InvalidPermutation,
  NotAGroup,
  SingularGenerator,
  NotNormal,
  NotAbelian,
  TrivialGroup,
  SyntaxError,
  UnknownGenerator,
  EmptyGeneratorList,
  ParseError,
  NotPrime,
  InvalidHint,
  InvalidArgument,
  IoError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so that
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// True for the cap/budget family (closure, enumeration and search limits).
  bool is_limit() const noexcept {
    return code_ == ErrorCode::ClosureExceedsCap || code_ == ErrorCode::OrderCapExceeded ||
           code_ == ErrorCode::SearchBudgetExceeded;
  }

  bool is_parse() const noexcept {
    return code_ == ErrorCode::SyntaxError || code_ == ErrorCode::UnknownGenerator ||
           code_ == ErrorCode::EmptyGeneratorList || code_ == ErrorCode::ParseError ||
           code_ == ErrorCode::InvalidPermutation || code_ == ErrorCode::InvalidHint;
  }

 private:
  ErrorCode code_;
};

}  // namespace finann
