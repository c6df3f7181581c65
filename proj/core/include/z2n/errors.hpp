#ifndef Z2N_ERRORS_HPP
#define Z2N_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace z2n {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an input is well-formed text but violates a module constraint.
/// The CLI maps every subclass to exit code 3.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class DegreeArityError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class SymbolError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class ChartError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// An operation needed a homogeneous operand and got a mixed one.
class DegreeError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A morphism image does not carry the degree of its target coordinate.
class DegreeMismatch : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class DomainError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A blackbox disagrees with its own normal-form decomposition.
class NotAnOperatorOfOrderK : public Error {
 public:
  NotAnOperatorOfOrderK(const std::string& what, std::string witness)
      : Error(what), witness_(std::move(witness)) {}

  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

/// Text that does not match the grammar. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace z2n

#endif  // Z2N_ERRORS_HPP
