#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace slalom {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed word or braid text. `column()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t column)
      : Error(message + " at column " + std::to_string(column)), column_(column) {}

  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

/// An argument is outside the domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Exponent arithmetic left the 64-bit range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A numeric procedure failed to converge or to resolve a path.
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace slalom
