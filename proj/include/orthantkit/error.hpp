#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace orthantkit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input. Carries a 1-based line/column when known (0 otherwise).
class InputError : public Error {
 public:
  InputError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(line ? what + " at line " + std::to_string(line) +
                         (column ? ", column " + std::to_string(column) : std::string())
                   : what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A parameter outside the operation's domain (e.g. d out of range).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Resource guard tripped: a development or construction would exceed its cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A query needs vertices that lie outside the developed region.
class InsufficientRadius : public Error {
 public:
  using Error::Error;
};

class ObstructedTransport : public Error {
 public:
  using Error::Error;
};

class SpanObstructed : public Error {
 public:
  using Error::Error;
};

class FlagPreconditionFailed : public Error {
 public:
  using Error::Error;
};

/// Cube complex whose gluings are inconsistent.
class MalformedComplex : public Error {
 public:
  using Error::Error;
};

}  // namespace orthantkit
