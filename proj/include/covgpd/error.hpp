#pragma once

#include <stdexcept>
#include <string>

namespace covgpd {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input or a violated precondition.
class InputError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed its configured size bound.
class BoundExceeded : public InputError {
 public:
  using InputError::InputError;
};

/// A checked theorem failed on concrete data. Always a bug.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace covgpd
