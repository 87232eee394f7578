#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace adfbn {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A formula or interpretation refers to atoms the model does not have.
class ModelMismatch : public Error {
public:
    using Error::Error;
};

/// An exhaustive scan would exceed the configured enumeration budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// An operation was called outside its domain (e.g. reduct of a non-model,
/// cycle signs of a network that is not sign-definite).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Syntax or semantic error in a model file, with a 1-based source position.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace adfbn
