#pragma once

#include <stdexcept>
#include <string>

namespace cellsim {

/// Invalid argument or violated precondition (bad cell id, bad weights,
/// unequal lengths where a measure pairs positions, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A hop distance or diameter was requested on a graph whose vertices are
/// not all mutually reachable.
class GraphNotConnected : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed graph or trace file. `line()` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace cellsim
