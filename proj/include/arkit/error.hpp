#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace arkit {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed `.cg` / `g 1` document. Line and column are 1-based; column 0
// means the whole line and line 0 a document-level problem such as an
// incomplete colouring.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error(line == 0 ? what
                        : "line " + std::to_string(line) + ", col " +
                              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// A parameter lies outside the range an operation is defined for.
class RangeError : public Error {
 public:
  using Error::Error;
};

// The instance exceeds what an exhaustive oracle can handle.
class TooLargeError : public Error {
 public:
  using Error::Error;
};

}  // namespace arkit
