#pragma once

#include <stdexcept>
#include <string>

namespace sebp {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on user-supplied parameters does not hold.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An exact computation would exceed its configured size cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Quadrature or root finding did not converge.
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace sebp
