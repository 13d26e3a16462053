#pragma once

#include <stdexcept>
#include <string>

namespace ucat {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define UCAT_DEFINE_ERROR(NAME)                                      \
    struct NAME : Error {                                            \
        explicit NAME(const std::string& msg = #NAME) : Error(msg) {} \
    }

UCAT_DEFINE_ERROR(NonMonotoneBreakpoints);
UCAT_DEFINE_ERROR(NegativeValue);
UCAT_DEFINE_ERROR(SupportViolation);
UCAT_DEFINE_ERROR(OutOfDomain);
UCAT_DEFINE_ERROR(EmptyInterval);
UCAT_DEFINE_ERROR(NonpositiveExponent);
UCAT_DEFINE_ERROR(UndecidedComparison);
UCAT_DEFINE_ERROR(UnsupportedExponent);
UCAT_DEFINE_ERROR(HasZeros);
UCAT_DEFINE_ERROR(GraphMismatch);
UCAT_DEFINE_ERROR(NoPath);
UCAT_DEFINE_ERROR(NotATree);
UCAT_DEFINE_ERROR(TooLarge);
UCAT_DEFINE_ERROR(NonplanarFaceValues);
UCAT_DEFINE_ERROR(BadTiling);
UCAT_DEFINE_ERROR(RefinementMismatch);
UCAT_DEFINE_ERROR(UnknownDataset);
UCAT_DEFINE_ERROR(NotASweepOutput);
UCAT_DEFINE_ERROR(PreconditionViolated);
UCAT_DEFINE_ERROR(LengthMismatch);
UCAT_DEFINE_ERROR(NotSorted);
UCAT_DEFINE_ERROR(OutOfSupport);
UCAT_DEFINE_ERROR(ParseError);

#undef UCAT_DEFINE_ERROR

} // namespace ucat
