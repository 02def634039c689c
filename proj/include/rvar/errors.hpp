#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rvar {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arguments outside an operation's domain (k > n, t out of range, mismatched (k,n), ...).
class InvalidParameters : public Error {
 public:
  using Error::Error;
};

/// An interval [lo, hi] was requested with lo not below hi.
class EmptyInterval : public Error {
 public:
  using Error::Error;
};

/// A point, subset or matrix lies outside the domain an operation is defined on.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A matrix does not have the band structure of Y_beta^gamma (or N_gamma != I).
class ShapeError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// LDU decomposition without pivoting hit a zero pivot.
class DecompositionError : public Error {
 public:
  /// `index` is the 1-based size of the first vanishing leading principal minor.
  DecompositionError(std::size_t index, const std::string& what)
      : Error(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// Enumeration would exceed the configured point budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A state the mathematics rules out was reached. Always a bug or a disproof.
class InternalError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace rvar
