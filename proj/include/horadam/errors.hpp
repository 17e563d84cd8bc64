#pragma once

// Exceptions thrown by the library. The CLI maps them to exit codes:
// UsageError -> 2, the degenerate-input family -> 3, InternalError -> 4.

#include <stdexcept>

namespace horadam {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// malformed request: unknown kind or identity, missing index, bad flag value
struct UsageError : Error {
  using Error::Error;
};

struct DivisionByZero : Error {
  using Error::Error;
};

// zero-norm QuadElem or singular Mat2 asked for an inverse
struct NotInvertible : Error {
  using Error::Error;
};

// q = 0 where a division by q is required (negative indices, q-powers)
struct DegenerateQ : Error {
  using Error::Error;
};

// D = p^2 - 4q = 0 where distinct roots are required
struct RepeatedRoot : Error {
  using Error::Error;
};

// Pythagorean construction collapsed to a zero component
struct DegenerateTriple : Error {
  using Error::Error;
};

// broken invariant inside the library; always a bug
struct InternalError : Error {
  using Error::Error;
};

}  // namespace horadam
