#pragma once

#include <stdexcept>
#include <string>

namespace circramsey {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: signature or length mismatch, parse failure, broken invariant of an argument.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A hard size cap was exceeded. The message names the cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Two circle points (or a point and a cut) differ by an exact multiple of 1/n.
class GenericityViolation : public Error {
 public:
  using Error::Error;
};

/// Work would exceed the caller-supplied budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// An internal cross-check failed (e.g. closed formula disagrees with brute force).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace circramsey
