#pragma once

#include <stdexcept>
#include <string>

namespace multisect {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input documents and triangulations.
class InputError : public Error {
 public:
  using Error::Error;
};

/// An operation was called on data that does not meet its requirements.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A construction would exceed the configured resource ceiling.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace multisect
