#pragma once

#include <stdexcept>
#include <string>

namespace smtop {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed literal or document (bad rational string, invalid JSON).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Well-formed input with the wrong shape (missing field, wrong type).
class SchemaError : public Error {
public:
    using Error::Error;
};

/// Input that parses but violates a mathematical invariant.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Argument outside an operation's domain (negative abscissa, unknown label).
class DomainError : public Error {
public:
    using Error::Error;
};

} // namespace smtop
