#pragma once

#include <stdexcept>
#include <string>

namespace wcc {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (non-unit tangent, bad sample arrays, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Parameter outside the admissible domain of a curve or an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// No weighted geodesic joins the two points.
class NotConnectable : public Error {
 public:
  using Error::Error;
};

/// A root finder could not establish or find a unique root.
class RootFindError : public Error {
 public:
  using Error::Error;
};

}  // namespace wcc
