#pragma once

#include <stdexcept>
#include <string>

namespace monreg {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// An operation was called with arguments violating its contract
/// (mismatched variable counts, improper ideals, non weakly stable input, ...).
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

/// Text input could not be parsed; carries 1-based line/column.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int column)
        : Error(what + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line(line),
          column(column) {}
    int line;
    int column;
};

/// A degree window failed its stabilization check even after widening.
class WindowInstabilityError : public Error {
public:
    explicit WindowInstabilityError(const std::string& what) : Error(what) {}
};

/// A size cap was exceeded (generator counts, exponent range, ...).
class CapExceededError : public Error {
public:
    explicit CapExceededError(const std::string& what) : Error(what) {}
};

}  // namespace monreg
