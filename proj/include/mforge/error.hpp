#pragma once

#include <stdexcept>
#include <string>

namespace mforge {

// All library errors derive from Error so callers can catch one type.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Caller violated a precondition (bad argument, mixed fields, bad index).
struct UsageError : Error {
  using Error::Error;
};

// Attempt to mix elements of Q(sqrt d) and Q(sqrt d') with d != d'.
struct FieldMismatchError : UsageError {
  using UsageError::UsageError;
};

struct DivisionByZeroError : Error {
  using Error::Error;
};

// Exact linear solve hit a singular matrix.
struct SingularMatrixError : Error {
  using Error::Error;
};

// div_exact was asked to divide by a non-divisor.
struct NotDivisibleError : Error {
  using Error::Error;
};

// Degenerate ("parasitic") parameter combination for a candidate map.
struct DegeneracyError : Error {
  using Error::Error;
};

// A map turned out to be ramified outside {0, 1, infinity}.
struct NotBelyiError : Error {
  using Error::Error;
};

// Numeric iteration failed to converge.
struct NumericError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

} // namespace mforge
