#pragma once

#include <stdexcept>
#include <string>

namespace involute {

// Thrown when an input violates a documented precondition. The CLI maps
// these to exit code 2.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

#define INVOLUTE_ERROR(Name)                                                   \
    class Name : public ValidationError {                                      \
    public:                                                                    \
        explicit Name(const std::string& what) : ValidationError(#Name ": " + what) {} \
    };

INVOLUTE_ERROR(IndexOutOfDomain)
INVOLUTE_ERROR(InvalidWeight)
INVOLUTE_ERROR(ZeroNorm)
INVOLUTE_ERROR(DivisionByZero)
INVOLUTE_ERROR(NotIrreducible)
INVOLUTE_ERROR(NoPositiveStationary)
INVOLUTE_ERROR(UnsupportedFamily)
INVOLUTE_ERROR(NotStochastic)
INVOLUTE_ERROR(ZeroNotAccessible)
INVOLUTE_ERROR(OutOfRange)
INVOLUTE_ERROR(Singular)
INVOLUTE_ERROR(ParseError)
INVOLUTE_ERROR(QuadratureNonConvergence)

#undef INVOLUTE_ERROR

// Internal invariant broken; maps to exit code 1.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace involute
