#pragma once

#include <stdexcept>
#include <string>

namespace medianforge {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range input: unknown vertex, bad JSON, duplicate edge.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A configured ceiling (cell count, orientation count, rational size) was hit.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// A postcondition the algorithms guarantee did not hold.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// Raised when deleting an edge class does not leave exactly two components.
/// This only happens on non-median input.
class HalfspaceError : public Error {
 public:
  using Error::Error;
};

}  // namespace medianforge
