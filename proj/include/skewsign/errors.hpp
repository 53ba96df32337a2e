#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace skewsign {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class FieldMismatchError : public Error {
public:
    using Error::Error;
};

class DivisionByZeroError : public Error {
public:
    using Error::Error;
};

/// Requested modulus is not a prime in [2, 2^31).
class InvalidFieldError : public Error {
public:
    using Error::Error;
};

class ZeroScalarError : public Error {
public:
    using Error::Error;
};

class IndexOutOfRangeError : public Error {
public:
    using Error::Error;
};

class InvalidPermutationError : public Error {
public:
    using Error::Error;
};

class DimensionMismatchError : public Error {
public:
    using Error::Error;
};

/// The selected principal block is singular, so no Schur complement exists.
class SingularBlockError : public Error {
public:
    using Error::Error;
};

class InvalidParamsError : public Error {
public:
    using Error::Error;
};

/// A reduction step produced a matrix outside the expected family.
/// Indicates a bug, not bad input.
class StructureViolationError : public Error {
public:
    using Error::Error;
};

/// Exhaustive enumeration was asked for a matrix above the size guard.
class TooLargeError : public Error {
public:
    using Error::Error;
};

/// Input matrix violates a precondition (wrong shape or entry domain).
class InputError : public Error {
public:
    using Error::Error;
};

/// extract_witness was called on a pair that is not a violation.
class NotAViolationError : public Error {
public:
    using Error::Error;
};

class ZeroParamError : public Error {
public:
    using Error::Error;
};

/// A self-check on a certificate or witness failed before returning it.
/// Always a bug in this library, never a property of the input.
class InternalCheckError : public Error {
public:
    using Error::Error;
};

/// Text-format parse failure; carries a 1-based line and column.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error("parse error at line " + std::to_string(line) + ", column " +
                std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace skewsign
