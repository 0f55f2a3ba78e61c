#pragma once

#include <stdexcept>
#include <string>

namespace ratiodist {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Precondition violated: invalid parameters, degenerate correlation, empty input.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Result would leave the double exponent range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Iterative scheme exhausted its level or node budget.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// NaN or infinity produced inside a computation.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Evaluation point where the density may diverge.
class SingularityError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace ratiodist
