#pragma once

#include <stdexcept>
#include <string>

namespace persrep {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arguments come from different monoid instances or rings.
class InstanceMismatch : public Error {
 public:
  using Error::Error;
};

// Operation is not defined for this monoid/ring combination.
class Unsupported : public Error {
 public:
  using Error::Error;
};

// A g1 ⪯ g2 precondition was violated.
class DivisibilityError : public Error {
 public:
  using Error::Error;
};

// Input data failed validation (bad presentation, diagram, or file).
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace persrep
