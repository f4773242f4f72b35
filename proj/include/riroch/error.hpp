#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace riroch {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Arithmetic between graded classes of different truncation dimensions.
// Mixed-dimension arithmetic is always an error, never an implicit coercion.
struct DimensionMismatch : Error {
    using Error::Error;
};

// An operation was invoked outside its domain: series division with no
// invertible alignment, symmetric powers beyond the supported order,
// paper-compat mode on an unsupported variety, and the like.
struct DomainError : Error {
    using Error::Error;
};

// Structurally well-formed input that fails a validation rule
// (variety shape, expression limits).
struct ValidationError : Error {
    using Error::Error;
};

// Syntax error in the expression DSL. `offset` is the 0-based byte offset
// of the offending token in the input text.
struct ParseError : Error {
    std::size_t offset;
    ParseError(std::size_t off, const std::string& message) : Error(message), offset(off) {}
};

} // namespace riroch
