#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace c2ka {

/// Base of every exception raised by the analysis library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input text. Line and column are 1-based; 0 means unknown.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t line, std::size_t column)
      : Error(format(message, line, column)), message_(message), line_(line), column_(column) {}

  const std::string& message() const { return message_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& message, std::size_t line, std::size_t column) {
    if (line == 0) return message;
    return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
  }

  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

/// A statement form the guarded-command fragment does not support (loops, abort, ...).
class UnknownConstruct : public SyntaxError {
 public:
  using SyntaxError::SyntaxError;
};

/// A behaviour term uses an operator the stimulus action is not defined for here.
class UnsupportedTerm : public Error {
 public:
  using Error::Error;
};

/// An interaction claims an edge the communication graph does not have.
class EdgeMismatch : public Error {
 public:
  using Error::Error;
};

class ZeroDenominator : public Error {
 public:
  using Error::Error;
};

}  // namespace c2ka
