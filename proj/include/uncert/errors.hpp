#pragma once

#include <stdexcept>
#include <string>

namespace uncert {

// Input or precondition violation. The CLI maps these to exit code 1.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// normalize() on a vector whose norm is below the null threshold.
class NullVectorError : public ValidationError {
 public:
  NullVectorError() : ValidationError("null vector") {}
};

// (C -/+ iD)|psi> vanishes: psi already saturates the sum relation, so no
// orthogonal state can be built from it.
class AlreadySaturatedError : public ValidationError {
 public:
  AlreadySaturatedError()
      : ValidationError("state already saturates; no perp needed") {}
};

// Filesystem / stream failures. The CLI maps these to exit code 2.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace uncert
