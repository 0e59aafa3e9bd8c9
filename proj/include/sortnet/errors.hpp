#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sortnet {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Mismatched channel counts, word lengths, or a structural invariant of a
// comparator/layer/network being violated.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Exhaustive operations refuse to run beyond their channel bound.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Argument outside the accepted range of an operation (n, d, k, ...).
class RangeError : public Error {
 public:
  using Error::Error;
};

// Precondition on the meaning of the input failed, e.g. "not a sorting network".
class DomainError : public Error {
 public:
  using Error::Error;
};

// Internal consistency failure; indicates a bug in an encoder or transformation.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line), detail_(what) {}

  std::size_t line() const noexcept { return line_; }
  // Message without the line prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t line_;
  std::string detail_;
};

}  // namespace sortnet
