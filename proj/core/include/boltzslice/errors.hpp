#pragma once

#include <stdexcept>
#include <string>

namespace boltzslice {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition on an argument failed (lo > hi, p outside (0,1), ...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// A function evaluation produced a non-finite value.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Invalid experiment, mode set or sampler configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

class EmptyTraceError : public Error {
 public:
  using Error::Error;
};

// A slice region turned out empty. Only reachable through a sampler bug.
class EmptySliceError : public Error {
 public:
  using Error::Error;
};

// Requested decomposition or sampler is not defined for this objective.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

}  // namespace boltzslice
