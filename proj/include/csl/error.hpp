#pragma once

#include <stdexcept>
#include <string>

namespace csl {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (element, quaternion, matrix or config syntax).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Mathematically invalid request: division by zero, tag mismatch, a matrix
/// outside SO(3,K), a non-submodule passed to an index computation, ...
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A configured enumeration bound would be exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace csl
