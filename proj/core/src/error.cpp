#include "hypermap/error.hpp"

#include "hypermap/bigint.hpp"

namespace hypermap {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NonTransitive: return "NonTransitive";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::SearchBoundExceeded: return "SearchBoundExceeded";
    case ErrorCode::SearchBudgetExhausted: return "SearchBudgetExhausted";
    case ErrorCode::BoundTooSmall: return "BoundTooSmall";
    case ErrorCode::NonIntegralGenus: return "NonIntegralGenus";
    case ErrorCode::NotInStabilizer: return "NotInStabilizer";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::BadPrime: return "BadPrime";
    case ErrorCode::NoEligibleQ: return "NoEligibleQ";
    case ErrorCode::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorCode::NotAGroupWithinCap: return "NotAGroupWithinCap";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

BigInt factorial(std::uint64_t n) {
  BigInt r = 1;
  for (std::uint64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace hypermap
