#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace discover {

/// Base of every recoverable error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Syntactically malformed input (XML, JSON, CSV). Line is 1-based, 0 if unknown.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
        : Error(format(what, line, column)), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    static std::string format(const std::string& what, std::size_t line, std::size_t column) {
        if (line == 0) return what;
        std::string out = "line " + std::to_string(line);
        if (column != 0) out += ", column " + std::to_string(column);
        return out + ": " + what;
    }

    std::size_t line_;
    std::size_t column_;
};

/// Well-formed input that violates the content contract (empty trace, missing label, ...).
class FormatError : public ParseError {
public:
    using ParseError::ParseError;
};

/// A model that breaks a structural invariant, e.g. a pair in both include and exclude.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// File could not be opened, read or written.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace discover
