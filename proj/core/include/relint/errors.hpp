#pragma once

#include <stdexcept>
#include <string>

namespace relint {

// Base of every error raised by the library. The CLI maps InputError (and
// subclasses) to exit code 2 and everything else to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: dimension mismatches, unparsable rationals, bad JSON.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Instance exceeds the desk-scale limits (ambient dimension or row count).
class DeskScaleLimit : public InputError {
 public:
  using InputError::InputError;
};

class EmptySetError : public Error {
 public:
  using Error::Error;
};

class NotMemberError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold. The message names
/// the violated clause.
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

/// The separating functional of a duality certificate came out horizontal,
/// which can only happen when the qualification condition fails.
class QualificationFailure : public Error {
 public:
  using Error::Error;
};

/// Two routes that must agree did not. Always a bug in the oracles;
/// never a user error.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

/// Arithmetic on extended reals hit an indeterminate form such as +inf - +inf.
class IndeterminateForm : public Error {
 public:
  using Error::Error;
};

}  // namespace relint
