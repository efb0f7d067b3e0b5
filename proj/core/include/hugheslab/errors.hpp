#pragma once

#include <stdexcept>
#include <string>

namespace hugheslab {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A full-enumeration request would exceed the configured element cap.
/// Enumeration refuses explicitly instead of truncating.
class CapExceededError : public Error {
public:
  using Error::Error;
};

/// Malformed textual input (cycle notation, catalog records).
class ParseError : public Error {
public:
  using Error::Error;
};

/// A precondition on arguments was violated (degree mismatch, non-prime
/// parameter, seed outside the parent group, ...).
class InvalidArgumentError : public Error {
public:
  using Error::Error;
};

} // namespace hugheslab
