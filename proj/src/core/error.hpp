#pragma once

#include <stdexcept>
#include <string>

namespace codered {

// Base of every error thrown by the library. The C API maps each subclass to
// its own status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input or a violated precondition.
class UsageError : public Error {
 public:
  using Error::Error;
};

// Input is well formed but mathematically outside what the routine accepts,
// e.g. a non-primitive word passed for insertion or a singular column set.
class DomainError : public Error {
 public:
  using Error::Error;
};

// The randomized input was unlucky; resampling may succeed.
class RetryableError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace codered
