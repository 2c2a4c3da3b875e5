#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace absorb {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A textual spec (ring, ideal, polynomial, config) failed to parse.
/// Positions are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A configured size limit (order cap, lattice cap, budget) was hit.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// An internal construction failed its own verification. Always a bug.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace absorb
