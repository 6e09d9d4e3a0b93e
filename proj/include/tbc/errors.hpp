#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tbc {

// Malformed edge-list input. Carries the 1-based line number when known.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A caller-supplied argument is out of its documented domain.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An internal invariant was violated (a bug, not bad input).
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Exact walk counts exceeded the 128-bit counter.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// The brute-force oracle refuses graphs beyond its size guard.
class SizeGuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace tbc
