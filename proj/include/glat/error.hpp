#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace glat {

enum class ErrorCode {
  NotAPermutation,
  ClosureTooLarge,
  NotAHomomorphism,
  NotUnimodular,
  NotASubgroup,
  GroupMismatch,
  InvalidCocycle,
  InvalidArgument,
  NotInRationalSpan,
  NoInvertibleIntertwiner,
  InternalContradiction,
  NotFiniteIndex,
  UnknownName,
  ParseError,
  SeedlessViolation,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the library. The code is stable and machine
/// readable; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace glat
