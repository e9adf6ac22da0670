#pragma once

#include <stdexcept>
#include <string>

namespace krullcert {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different polynomial rings.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// A certificate, presentation or chain does not have the expected shape
/// (wrong depth, index out of bounds, ...).
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// The input is outside the class of presentations a procedure supports.
class UnsupportedClass : public Error {
 public:
  using Error::Error;
};

/// The input violates a mathematical precondition (not a dependence
/// relation, not divisible by the minimal polynomial, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Malformed text or JSON document.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace krullcert
