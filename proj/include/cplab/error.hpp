#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cplab {

enum class ErrorCode {
  CapExceeded,
  InvalidPermutation,
  InvalidWord,
  NotNormal,
  NotSoluble,
  NotAPGroup,
  NotBijective,
  NotHomomorphism,
  NotCoprime,
  NotCoprimeToP,
  NotFound,
  NonUnique,
  NotNilpotent,
  NotInvariant,
  PreconditionViolated,
  DivisionByZero,
  NotIrreducible,
  NotElementaryAbelianLayer,
  UnknownSpec,
  ParseError,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so
// callers (tests, the suite runner, the CLI) can dispatch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cplab
