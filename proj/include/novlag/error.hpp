#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace novlag {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input violates an operation's precondition (bad multidegree, wrong arity,
/// non-Novikov element passed where one is required, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// The element is not a total derivative; raised by antiderivative().
class NotExact : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace novlag
