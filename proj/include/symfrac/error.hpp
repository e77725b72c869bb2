#pragma once

#include <stdexcept>
#include <string>

namespace symfrac {

enum class ErrorKind {
  DivisionByNonUnit,
  MixedRings,
  InvalidRing,
  ParseError,
  NotDivisible,
  MixedContext,
  NotSymmetric,
  NonInvertible,
  DivisionByZeroFraction,
  DenominatorVanishes,
  SingularBlock,
  InvalidRange,
  RangeError,
  UnsupportedRing,
  Indeterminate,
  InsufficientTraces,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (and tests) can branch on the cause instead of the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace symfrac
