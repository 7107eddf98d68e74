#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hybridres {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial text or ideal file. Positions are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Operands belong to different rings.
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

class UnknownVariable : public Error {
 public:
  using Error::Error;
};

/// A mathematically meaningless request: HS of a unit ideal, order
/// mismatch for a frame, blowing up along a divisor, ...
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Raised when an invariant the algorithms rely on is violated.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace hybridres
