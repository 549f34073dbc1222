#pragma once

#include <stdexcept>
#include <string>

namespace syzlab {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller supplied something outside an operation's contract.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// A configured computational cap (degree cap, exponent range) was hit.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Always a bug.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace syzlab
