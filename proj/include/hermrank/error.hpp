#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hermrank {

enum class ErrorKind {
  NotPrime,
  EvenN,
  TooLarge,
  NotADivisor,
  ZeroInput,
  DependentPoints,
  BadParams,
  BasisSearchFailed,
  NotInSubfield,
  BadT,
  TooLargeToEnumerate,
  Malformed,
  ParamsMismatch,
};

std::string_view to_string(ErrorKind kind);

// All recoverable library errors are reported through this exception type.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hermrank
