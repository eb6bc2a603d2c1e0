#pragma once

#include <stdexcept>
#include <string>

namespace zp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical precondition was violated (k < 2 for zeta, k = 0 rescale, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed user input: job files, operator tables, chart mismatches.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A numerical procedure failed to reach the requested accuracy.
class NumericFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace zp
