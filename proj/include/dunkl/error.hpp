#pragma once

#include <stdexcept>
#include <string>

namespace dunkl {

/// Raised when an argument violates an operation's precondition
/// (non-finite input, empty radius grid, exponent ordering, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two grid-bound objects were combined although they live on different grids.
class GridMismatch : public std::invalid_argument {
 public:
  GridMismatch() : std::invalid_argument("grid functions are bound to different grids") {}
};

/// A numerical self-check failed (e.g. a translate of a real function came
/// back with a non-negligible imaginary part).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input file; carries the 1-based line number when known.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace dunkl
