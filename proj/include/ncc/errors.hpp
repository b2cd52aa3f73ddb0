#pragma once

#include <stdexcept>
#include <string>

namespace ncc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A requested size exceeds a configured ceiling (e.g. partitions of [n]).
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

/// Operands of incompatible shape: word length vs. partition size,
/// mismatched variable counts or truncation orders.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside the domain of an operation
/// (crossing partition where a non-crossing one is required, a functional of
/// the wrong mode, a negative convolution power, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Division by an element without invertible body.
class NonInvertibleError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input. Carries the 1-based line number when known.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace ncc
