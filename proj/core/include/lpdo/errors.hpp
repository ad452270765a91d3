#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lpdo {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
  DivisionByZero() : Error("division by zero") {}
};

/// A substitution made a denominator vanish identically.
class SubstitutionError : public Error {
public:
  using Error::Error;
};

/// A value supplied as a root of the characteristic polynomial is not one.
class NotARoot : public Error {
public:
  using Error::Error;
};

class SingularMatrix : public Error {
public:
  SingularMatrix() : Error("change of variables matrix is singular") {}
};

class ParseError : public Error {
public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace lpdo
