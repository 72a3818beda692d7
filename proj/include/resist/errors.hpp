#pragma once

#include <stdexcept>
#include <string>

namespace resist {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid exact-arithmetic operation (division by zero, zero denominator).
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input. line() is 1-based; 0 when input is not line-oriented.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_ = 0;
};

/// Operation applied to a matrix of incompatible shape.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Vertex or row/column label outside {1..n}, or an otherwise invalid index set.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// Singular matrix where an inverse was required.
/// stage() is the 0-based elimination column at which no pivot was found.
class SingularMatrixError : public Error {
 public:
  SingularMatrixError(const std::string& what, int stage)
      : Error(what + " (pivot stage " + std::to_string(stage) + ")"), stage_(stage) {}
  int stage() const { return stage_; }

 private:
  int stage_;
};

/// Input violates an operation's documented precondition
/// (graph not balanced/strongly connected, size guard exceeded, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Two supposedly-equal computation routes disagreed. Signals corrupted
/// inputs or an internal bug; never silently reconciled.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace resist
