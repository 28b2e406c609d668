#pragma once

#include <stdexcept>
#include <string>

namespace wordsep {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operand shapes do not conform (mat-vec, products, tensors, machine parts).
struct DimensionError : Error {
  using Error::Error;
};

// A documented precondition on an argument was violated.
struct InvalidArgument : Error {
  using Error::Error;
};

}  // namespace wordsep
