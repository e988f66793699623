#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace blanchfield {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class SingularMatrix : public Error {
public:
    explicit SingularMatrix(const std::string& what = "singular matrix") : Error(what) {}
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// Raised when input data violates a named structural invariant.
class InvariantViolation : public Error {
public:
    explicit InvariantViolation(std::string invariant)
        : Error("invariant violated: " + invariant), invariant_(std::move(invariant)) {}
    const std::string& invariant() const noexcept { return invariant_; }

private:
    std::string invariant_;
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error("parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": " +
                message),
          line_(line), column_(column) {}
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// A numerical evaluation landed too close to a singular point.
class Indeterminate : public Error {
public:
    using Error::Error;
};

}  // namespace blanchfield
