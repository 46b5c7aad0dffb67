#pragma once

#include <stdexcept>
#include <string>

namespace maxsub {

// Base class for all domain errors raised by the library. The CLI maps these
// to exit code 1 (or 3 for MismatchError); parse problems in user-supplied
// expressions raise SyntaxError.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SyntaxError : Error {
    using Error::Error;
};

// quotient() where the divisor does not divide the dividend
struct NotDivisibleError : Error {
    using Error::Error;
};

// quotient() where some prime has an infinite exponent in both operands
struct AmbiguousInfiniteQuotientError : Error {
    using Error::Error;
};

struct NotASubfieldError : Error {
    using Error::Error;
};

struct InfinitelyManyMaximalSubringsError : Error {
    using Error::Error;
};

struct LimitExceededError : Error {
    using Error::Error;
};

struct NoIrreducibleOfThatDegreeError : Error {
    using Error::Error;
};

// order (or another size parameter) beyond the configured cap
struct CapExceededError : Error {
    using Error::Error;
};

struct BadSpecError : Error {
    using Error::Error;
};

struct AlgebraicallyClosedBaseError : Error {
    using Error::Error;
};

// a theorem check disagreed with the brute-force oracle; fatal by design
struct MismatchError : Error {
    using Error::Error;
};

struct OverflowError : Error {
    using Error::Error;
};

}  // namespace maxsub
