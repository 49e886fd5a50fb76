#include "hatlab/color.hpp"

#include "hatlab/error.hpp"

namespace hatlab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidGameSpec: return "InvalidGameSpec";
    case ErrorCode::kLoopInVisibility: return "LoopInVisibility";
    case ErrorCode::kNonSurjectiveInnings: return "NonSurjectiveInnings";
    case ErrorCode::kTooFewPrisoners: return "TooFewPrisoners";
    case ErrorCode::kTooFewColors: return "TooFewColors";
    case ErrorCode::kUnknownPrisonerId: return "UnknownPrisonerId";
    case ErrorCode::kColorOutOfSpace: return "ColorOutOfSpace";
    case ErrorCode::kInapplicableConditions: return "InapplicableConditions";
    case ErrorCode::kDuplicateTarget: return "DuplicateTarget";
    case ErrorCode::kMismatchedPredictor: return "MismatchedPredictor";
    case ErrorCode::kRequiresCompleteVisibility: return "RequiresCompleteVisibility";
    case ErrorCode::kRequiresSquareGame: return "RequiresSquareGame";
    case ErrorCode::kRequiresSimultaneous: return "RequiresSimultaneous";
    case ErrorCode::kRequiresTwoColors: return "RequiresTwoColors";
    case ErrorCode::kRequiresFiniteGame: return "RequiresFiniteGame";
    case ErrorCode::kRequiresFiniteColors: return "RequiresFiniteColors";
    case ErrorCode::kNotACycle: return "NotACycle";
    case ErrorCode::kRequiresS1S2: return "RequiresS1S2";
    case ErrorCode::kRequiresS4S5S6: return "RequiresS4S5S6";
    case ErrorCode::kRequiresS1S4: return "RequiresS1S4";
    case ErrorCode::kRequiresIntColors: return "RequiresIntColors";
    case ErrorCode::kParityDomainMismatch: return "ParityDomainMismatch";
    case ErrorCode::kRequiresOmegaCompleteSimultaneous: return "RequiresOmegaCompleteSimultaneous";
    case ErrorCode::kRequiresMultiInning: return "RequiresMultiInning";
    case ErrorCode::kFillOutsideSubcolors: return "FillOutsideSubcolors";
    case ErrorCode::kNotRobust: return "NotRobust";
    case ErrorCode::kNotFiniteError: return "NotFiniteError";
    case ErrorCode::kSpaceTooLarge: return "SpaceTooLarge";
    case ErrorCode::kSampledReportNotConclusive: return "SampledReportNotConclusive";
    case ErrorCode::kGraphHasCycle: return "GraphHasCycle";
    case ErrorCode::kEdgePresent: return "EdgePresent";
    case ErrorCode::kUnknownTheorem: return "UnknownTheorem";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kTooManyNodes: return "TooManyNodes";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

ColorSpace ColorSpace::modular(std::uint32_t n) {
  if (n < 2) fail(ErrorCode::kTooFewColors, "mod(" + std::to_string(n) + ") needs n >= 2");
  return ColorSpace(Kind::kModular, n);
}

ColorSpace ColorSpace::integers() { return ColorSpace(Kind::kIntegers, 0); }

Color ColorSpace::normalize(const Color& x) const {
  if (kind_ == Kind::kIntegers) return x;
  Color r = x % modulus_;
  if (r < 0) r += modulus_;
  return r;
}

Color ColorSpace::add(const Color& x, const Color& y) const { return normalize(x + y); }
Color ColorSpace::sub(const Color& x, const Color& y) const { return normalize(x - y); }
Color ColorSpace::negate(const Color& x) const { return normalize(-x); }

bool ColorSpace::contains(const Color& x) const {
  return kind_ == Kind::kIntegers || (x >= 0 && x < modulus_);
}

std::string ColorSpace::describe() const {
  return kind_ == Kind::kIntegers ? "int" : "mod(" + std::to_string(modulus_) + ")";
}

std::string to_string(const Color& c) { return c.str(); }

}  // namespace hatlab
