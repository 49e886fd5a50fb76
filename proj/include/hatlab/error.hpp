#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hatlab {

enum class ErrorCode {
  kInvalidGameSpec,
  kLoopInVisibility,
  kNonSurjectiveInnings,
  kTooFewPrisoners,
  kTooFewColors,
  kUnknownPrisonerId,
  kColorOutOfSpace,
  kInapplicableConditions,
  kDuplicateTarget,
  kMismatchedPredictor,
  kRequiresCompleteVisibility,
  kRequiresSquareGame,
  kRequiresSimultaneous,
  kRequiresTwoColors,
  kRequiresFiniteGame,
  kRequiresFiniteColors,
  kNotACycle,
  kRequiresS1S2,
  kRequiresS4S5S6,
  kRequiresS1S4,
  kRequiresIntColors,
  kParityDomainMismatch,
  kRequiresOmegaCompleteSimultaneous,
  kRequiresMultiInning,
  kFillOutsideSubcolors,
  kNotRobust,
  kNotFiniteError,
  kSpaceTooLarge,
  kSampledReportNotConclusive,
  kGraphHasCycle,
  kEdgePresent,
  kUnknownTheorem,
  kBudgetExceeded,
  kTooManyNodes,
  kInvalidArgument,
  kInternal,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this type; `code()` names the
// failed precondition and `what()` names the offending element.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail) {
  throw Error(code, detail);
}

}  // namespace hatlab
