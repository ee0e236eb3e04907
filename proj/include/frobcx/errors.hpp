#pragma once

#include <stdexcept>

namespace frobcx {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operands live over different variable counts.
struct ContextMismatchError : Error {
  using Error::Error;
};

/// Exponent arithmetic left the representable range.
struct OverflowError : Error {
  using Error::Error;
};

/// Colon by the zero ideal.
struct UndefinedColonError : Error {
  using Error::Error;
};

/// A documented precondition was violated by the caller.
struct PreconditionError : Error {
  using Error::Error;
};

/// An internal consistency equation failed; indicates a bug, not bad input.
struct FormulaViolationError : Error {
  using Error::Error;
};

/// Malformed input text.
struct ParseError : Error {
  using Error::Error;
};

/// Structurally valid input rejected by validation.
struct InputError : Error {
  using Error::Error;
};

struct NotSquareFreeError : InputError {
  using InputError::InputError;
};

struct ZeroIdealError : InputError {
  using InputError::InputError;
};

struct UnitIdealError : InputError {
  using InputError::InputError;
};

}  // namespace frobcx
