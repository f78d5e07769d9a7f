#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace covgroup {

enum class ErrorCode {
  InvalidTable,
  NotAssociative,
  NoIdentityAtZero,
  MissingInverse,
  NotLatinSquare,
  MalformedCycle,
  InvalidParameters,
  NotSubgroup,
  NotNormal,
  OrderBoundExceeded,
  PrimeDoesNotDivideOrder,
  GroupIsCyclic,
  NotProperSubgroup,
  NotSolvable,
  NoFactorWithMultipleComplements,
  EnumerationBoundExceeded,
  PreconditionViolation,
  ConsistencyViolation,
  ParseError,
  DuplicateName,
  OrderMismatch,
  UnknownGroup,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (and corpus reports) can tell the violated condition apart.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace covgroup
