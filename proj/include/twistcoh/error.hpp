#pragma once

#include <stdexcept>
#include <string>

namespace twistcoh {

enum class ErrorCode {
  InvalidInvariant,
  NotAssociative,
  NoIdentity,
  NoInverse,
  NotSubgroup,
  NotNormal,
  OrderCap,
  UnsupportedDegree,
  ModulusMismatch,
  Overflow,
  NotACocycle,
  NotPointwiseTrivial,
  TransgressionNotBijective,
  NoClassFound,
  DeltaNotSubgroup,
  InvalidExtension,
  ProfileInconsistent,
  Mismatch,
  MismatchAt,
  ParseError,
  UnresolvedRef,
  ValidationFailed,
  InvalidArgument,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace twistcoh
