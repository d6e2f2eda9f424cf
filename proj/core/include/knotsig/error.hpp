#pragma once

#include <stdexcept>
#include <string>

namespace knotsig {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or mathematically invalid user input (bad matrix, bad table).
class InputError : public Error {
 public:
  using Error::Error;
};

class OddDimensionError : public InputError {
 public:
  using InputError::InputError;
};

class NotUnimodularError : public InputError {
 public:
  using InputError::InputError;
};

/// A caller-supplied interval endpoint is a root of the polynomial.
class EndpointIsRootError : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroError : public Error {
 public:
  using Error::Error;
};

/// The circle point is omega = 1, where the signature is undefined.
class PointIsOneError : public InputError {
 public:
  using InputError::InputError;
};

class AbscissaOutOfRangeError : public InputError {
 public:
  using InputError::InputError;
};

/// An internal consistency check failed. Indicates a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace knotsig
