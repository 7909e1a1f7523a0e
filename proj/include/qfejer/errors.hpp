#pragma once

#include <stdexcept>
#include <string>

namespace qfejer {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when a semigroup element does not belong to the active system's P
/// (e.g. 3 in the system generated by powers of 2).
struct InvalidSemigroupElementError : Error {
  using Error::Error;
};

/// Thrown when two elements from different dynamical systems are combined.
struct SystemMismatchError : Error {
  using Error::Error;
};

/// Thrown when a degree cannot be expressed in the exponent group of the
/// chosen Folner sequence (e.g. degree 3/1 against a cyclic base-2 sequence).
struct DegreeOutsideGroupError : Error {
  using Error::Error;
};

/// Thrown when an enumeration would exceed the configured size budget.
struct BudgetExceededError : Error {
  using Error::Error;
};

/// Syntax error with 1-based source position.
struct ParseError : Error {
  int line;
  int column;
  ParseError(const std::string& msg, int line_, int column_)
      : Error(msg + " (line " + std::to_string(line_) + ", column " +
              std::to_string(column_) + ")"),
        line(line_),
        column(column_) {}
};

}  // namespace qfejer
