#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace figura {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

// A figurate family was requested with a bad parameter (e.g. t < 3).
class InvalidKind : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

// An exact computation left the signed 64-bit range.
class OverflowError : public Error {
public:
    using Error::Error;
};

class NotAPoset : public Error {
public:
    using Error::Error;
};

class UnknownElement : public Error {
public:
    using Error::Error;
};

class IncompleteRepresentation : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace figura
