#pragma once

#include <stdexcept>
#include <string>

namespace mero {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define MERO_DEFINE_ERROR(Name)                                        \
    class Name : public Error {                                       \
    public:                                                            \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    }

// exact algebra
MERO_DEFINE_ERROR(DegreeMismatch);
MERO_DEFINE_ERROR(VariableCountMismatch);
MERO_DEFINE_ERROR(BothZero);

// rational maps
MERO_DEFINE_ERROR(AllZero);
MERO_DEFINE_ERROR(DimensionMismatch);
MERO_DEFINE_ERROR(CoefficientOverflowBudgetExceeded);
MERO_DEFINE_ERROR(NotASurfaceSource);
MERO_DEFINE_ERROR(RootFindingFailed);
MERO_DEFINE_ERROR(LineInsideIndeterminacy);
MERO_DEFINE_ERROR(ExpressionDomainError);

// graph geometry
MERO_DEFINE_ERROR(MetricMismatch);
MERO_DEFINE_ERROR(RegionEmpty);
MERO_DEFINE_ERROR(UnsupportedDimension);

// convergence testers
MERO_DEFINE_ERROR(ExceptionalSetNotFinite);
MERO_DEFINE_ERROR(RoucheViolation);
MERO_DEFINE_ERROR(PropagationViolation);
MERO_DEFINE_ERROR(NonRationalTerm);

// dynamics
MERO_DEFINE_ERROR(ScheduleTooShort);
MERO_DEFINE_ERROR(NoDichotomyEvidence);
MERO_DEFINE_ERROR(CurveFitFailed);

// cli / scenario files
MERO_DEFINE_ERROR(UnknownExample);

#undef MERO_DEFINE_ERROR

/// Scenario file errors carry a position so the CLI can point at the
/// offending line.
class ScenarioParseError : public Error {
public:
    ScenarioParseError(const std::string& what, int line, int column)
        : Error("ScenarioParseError: " + what + " (line " + std::to_string(line) +
                ", column " + std::to_string(column) + ")"),
          line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace mero
