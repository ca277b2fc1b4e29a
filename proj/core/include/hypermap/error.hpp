#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hypermap {

enum class ErrorCode {
  InvalidArgument,
  ParseError,
  NonTransitive,
  CapExceeded,
  NotUnimodular,
  SearchExhausted,
  SearchBoundExceeded,
  SearchBudgetExhausted,
  BoundTooSmall,
  NonIntegralGenus,
  NotInStabilizer,
  Disconnected,
  BadPrime,
  NoEligibleQ,
  DegreeCapExceeded,
  NotAGroupWithinCap,
  Io,
};

std::string_view to_string(ErrorCode code);

/// Every failure in the library is reported as an Error carrying a code;
/// the pipeline prefixes the stage name to the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hypermap
