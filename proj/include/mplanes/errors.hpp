#pragma once

#include <stdexcept>
#include <string>

namespace mplanes {

enum class ErrorCode {
  NonZeroScalar,
  InvalidGrade,
  NullCone,
  AmbiguousRotor,
  NotUnitBivector,
  NotPositivelyOriented,
  Superluminal,
  DegenerateDirection,
  MalformedBoost,
  NotEven,
  NotUnitTimelike,
  OppositeOrientation,
  ZeroVector,
  DegenerateD,
  NotUnitVector,
};

const char* to_string(ErrorCode code);

// Raised when an operation's mathematical precondition does not hold.
class DomainError : public std::domain_error {
 public:
  DomainError(ErrorCode code, const std::string& what)
      : std::domain_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by the text/JSON readers.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace mplanes
