#pragma once

#include <stdexcept>
#include <string>

namespace akns {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

// A differential polynomial has no antiderivative in the differential ring.
class NotExact : public Error {
 public:
  NotExact(const std::string& witness)
      : Error("not a total derivative; obstruction at monomial " + witness),
        witness_(witness) {}
  const std::string& witness() const { return witness_; }

 private:
  std::string witness_;
};

// Truncated input is too short for the requested verification order.
class DepthError : public Error {
 public:
  DepthError(const std::string& what, int required)
      : Error(what + " (required depth " + std::to_string(required) + ")"),
        required_(required) {}
  int required() const { return required_; }

 private:
  int required_;
};

// Term-wise integration of a series with a nonzero x^-1 coefficient.
class LogObstruction : public Error {
 public:
  LogObstruction() : Error("logarithmic obstruction: nonzero residue") {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : Error(msg + " at line " + std::to_string(line) + ", column " +
              std::to_string(column)),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Internal consistency checks that must never fire.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace akns
