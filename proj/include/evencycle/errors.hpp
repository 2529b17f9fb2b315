#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace evencycle {

/// Division by a zero field element.
class DivisionByZero : public std::domain_error {
public:
    DivisionByZero() : std::domain_error("division by zero in F_{2^d}") {}
};

/// An algebraic identity that must hold by construction did not. Always a bug.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Caller-side misuse (bad sizes, out-of-range parameters, rejected inputs).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace evencycle
