#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kr2 {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct MixedCyclotomicOrders : Error {
    MixedCyclotomicOrders(long a, long b)
        : Error("cannot mix cyclotomic scalars of order " + std::to_string(a) +
                " and " + std::to_string(b)) {}
};

struct DivisionByZeroPoly : Error {
    DivisionByZeroPoly() : Error("polynomial division by zero") {}
};

struct ZeroPolynomial : Error {
    ZeroPolynomial() : Error("operation undefined for the zero polynomial") {}
};

struct MissingImage : Error {
    explicit MissingImage(char var)
        : Error(std::string("substitution has no image for variable ") + var) {}
};

struct MissingBinding : Error {
    explicit MissingBinding(char var)
        : Error(std::string("evaluation point has no binding for variable ") + var) {}
};

struct ConstraintViolation : Error {
    explicit ConstraintViolation(const std::string& what) : Error("invalid parameters: " + what) {}
};

struct ParamMismatch : Error {
    ParamMismatch() : Error("operands belong to different threefolds") {}
};

struct NotOnX : Error {
    NotOnX() : Error("point does not satisfy the defining equation") {}
};

struct CapExceeded : Error {
    explicit CapExceeded(long cap)
        : Error("derivation did not vanish within " + std::to_string(cap) + " iterations") {}
};

struct InvalidArgument : Error {
    using Error::Error;
};

/// Pinpoints a rejected token in CLI expression input.
struct ParseDiagnostic {
    std::size_t offset = 0;   // byte offset into the source text
    std::string expected;     // description of what the parser wanted
    std::string found;        // the offending lexeme ("end of input" at the end)
};

struct ParseError : Error {
    ParseDiagnostic diagnostic;
    explicit ParseError(ParseDiagnostic d)
        : Error("parse error at offset " + std::to_string(d.offset) + ": expected " +
                d.expected + ", found " + d.found),
          diagnostic(std::move(d)) {}
};

}  // namespace kr2
