#pragma once

#include <stdexcept>
#include <string>

namespace mordell {

// Base for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& m) : std::runtime_error(m) {}
};

// Malformed or inconsistent caller data (bad file, wrong sizes, zero where
// nonzero required). CLI maps this to exit code 2.
struct InvalidInputError : Error {
    using Error::Error;
};

// Input is well formed but outside what the implementation handles exactly
// (numeric-only basis for classification, oracle in dimension != 2, search
// spaces past the enumeration budget). CLI maps this to exit code 3.
struct UnsupportedError : Error {
    using Error::Error;
};

// A mathematical precondition failed at runtime: span not closed under
// multiplication, nilpotents present, a field that is not totally real,
// a non-unital map, rank deficiency.
struct DomainError : Error {
    using Error::Error;
};

// Budget exhausted before a certificate was produced. CLI maps the
// no-certified-box case to exit code 4.
struct BudgetError : Error {
    using Error::Error;
};

// Matrix span is not a unital commutative algebra (not closed under
// products, not commutative, or no unit inside the span).
struct NotAnAlgebraError : InvalidInputError {
    using InvalidInputError::InvalidInputError;
};

// Algebra contains nonzero nilpotents (trace form degenerate).
struct NotSemisimpleError : InvalidInputError {
    using InvalidInputError::InvalidInputError;
};

} // namespace mordell
