#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace commalg {

/// Every failure the library reports is an `Error` tagged with one of these kinds.
enum class ErrorKind {
    ZeroInverse,
    FieldMismatch,
    ShapeMismatch,
    AmbientMismatch,
    NotSquare,
    BothZero,
    NotCoprime,
    ZeroPolynomial,
    NotInClass,
    NotMonic,
    DegreeZero,
    IndexOutOfRange,
    BadExponent,
    BadOmega,
    BadDimensions,
    PairInvariantViolated,
    NotNilpotent,
    InvalidSpec,
    ParseError,
    FieldError,
    RaggedRows,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Raised by `restrict_to_class`; carries the first exponent outside the class.
class NotInClassError : public Error {
public:
    NotInClassError(std::size_t exponent, const std::string& message)
        : Error(ErrorKind::NotInClass, message), exponent_(exponent) {}

    std::size_t exponent() const noexcept { return exponent_; }

private:
    std::size_t exponent_;
};

/// Raised by `poly_crt` when moduli i and j share a factor.
class NotCoprimeError : public Error {
public:
    NotCoprimeError(std::size_t i, std::size_t j, const std::string& message)
        : Error(ErrorKind::NotCoprime, message), i_(i), j_(j) {}

    std::size_t first() const noexcept { return i_; }
    std::size_t second() const noexcept { return j_; }

private:
    std::size_t i_;
    std::size_t j_;
};

/// JSON input errors; line and column are 1-based when known.
class ParseError : public Error {
public:
    ParseError(ErrorKind kind, const std::string& message, std::optional<std::size_t> line = {},
               std::optional<std::size_t> column = {})
        : Error(kind, message), line_(line), column_(column) {}

    std::optional<std::size_t> line() const noexcept { return line_; }
    std::optional<std::size_t> column() const noexcept { return column_; }

private:
    std::optional<std::size_t> line_;
    std::optional<std::size_t> column_;
};

}  // namespace commalg
