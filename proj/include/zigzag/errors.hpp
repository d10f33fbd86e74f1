#pragma once

#include <stdexcept>
#include <string>

namespace zigzag {

/// Base class for every error this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A argument violated a documented precondition (bad n, empty host list, ...).
struct InvalidParameter : Error {
  using Error::Error;
};

/// The operation does not apply to the object's current state
/// (step 1 twice, blow-up after the final step, ...).
struct InvalidState : Error {
  using Error::Error;
};

/// A blow-up or attachment names a location that is not legal there.
struct InvalidLocation : Error {
  using Error::Error;
};

/// A contraction would break the chain-plus-leaves shape.
struct LinearityViolation : Error {
  using Error::Error;
};

/// Mixing polynomials over different variable sets.
struct VariableMismatch : Error {
  using Error::Error;
};

/// Text input rejected, with position.
struct ParseError : Error {
  int line;
  int col;
  ParseError(int line_, int col_, const std::string& what_)
      : Error("line " + std::to_string(line_) + ", col " + std::to_string(col_) +
              ": " + what_),
        line(line_),
        col(col_) {}
};

/// The operation needs data the object does not carry (e.g. a canonical
/// record for a hand-assembled graph with no construction history).
struct UnsupportedInput : Error {
  using Error::Error;
};

/// Two independent internal routes disagreed. Always a bug, never user error.
struct InternalCheckFailure : Error {
  using Error::Error;
};

}  // namespace zigzag
