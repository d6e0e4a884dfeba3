#pragma once

#include <stdexcept>
#include <string>

namespace dold {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text (space descriptors, sign patterns, presentation files).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Structurally valid input outside the mathematical domain of an operation
/// (parity violations, invalid sign patterns, inhomogeneous relations, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Input exceeds a configured work bound (search spaces, basis sizes).
class LimitError : public Error {
public:
    using Error::Error;
};

}  // namespace dold
