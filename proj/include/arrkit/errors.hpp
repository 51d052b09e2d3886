#pragma once

#include <stdexcept>
#include <string>

namespace arrkit {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FieldMismatchError : Error {
    using Error::Error;
};

struct DivisionByZeroError : Error {
    using Error::Error;
};

struct ShapeError : Error {
    using Error::Error;
};

struct ValidationError : Error {
    using Error::Error;
};

struct PreconditionError : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(const std::string& msg, int line, int column)
        : Error(msg + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
          line(line), column(column) {}
    int line;
    int column;
};

struct LookupError : Error {
    using Error::Error;
};

// Raised when two independently computed routes disagree; never expected.
struct InternalInconsistencyError : Error {
    using Error::Error;
};

}  // namespace arrkit
