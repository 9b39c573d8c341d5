#pragma once

#include <stdexcept>
#include <string>

namespace randlab {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on caller-supplied data does not hold.
class InputError : public Error {
public:
    using Error::Error;
};

/// Lookup outside the domain of a finite table.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A configured resource cap (depth, program length, memory) would be exceeded.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// A series or matrix description is inconsistent (missing tail form,
/// non-monotone approximation row, bad schedule).
class SpecificationError : public Error {
public:
    using Error::Error;
};

/// An invariant that the construction guarantees was observed to fail.
/// Seeing one of these means a bug in this library.
class InternalError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int column)
        : Error(format(msg, line, column)), line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    static std::string format(const std::string& msg, int line, int column) {
        if (line <= 0) return msg;
        return std::to_string(line) + ":" + std::to_string(column) + ": " + msg;
    }
    int line_;
    int column_;
};

}  // namespace randlab
