#pragma once

#include <stdexcept>
#include <string>

namespace pentad {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ArithmeticError : Error {
  using Error::Error;
};

struct SingularMatrix : Error {
  using Error::Error;
};

struct NotSymmetric : Error {
  using Error::Error;
};

struct NotSquare : Error {
  using Error::Error;
};

struct NotSymmetrizable : Error {
  using Error::Error;
};

struct CompletionFailed : Error {
  using Error::Error;
};

struct InvalidPentad : Error {
  using Error::Error;
};

struct InvalidLocal : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct OutOfRange : Error {
  using Error::Error;
};

struct InvalidArgument : Error {
  using Error::Error;
};

struct DegenerateIndexSet : Error {
  using Error::Error;
};

/// Raised when an expansion exceeds the configured total-dimension cap.
struct ExpansionLimit : Error {
  using Error::Error;
};

/// Malformed input files, strings or flags.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace pentad
