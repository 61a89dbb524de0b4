#pragma once

#include <stdexcept>
#include <string>

namespace wdlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arguments disagree on the number of alternatives, or an index is out of range.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A value violates its type invariant (non-permutation, negative weight, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An exact search would exceed its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A reduction could not be built for the given instance.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// Extension point with no construction wired in.
class NotImplementedError : public Error {
 public:
  using Error::Error;
};

}  // namespace wdlab
