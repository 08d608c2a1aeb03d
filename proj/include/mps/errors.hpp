#pragma once

#include <stdexcept>
#include <string>

namespace mps {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text (market files, rational literals).
struct ParseError : Error {
  using Error::Error;
};

// Structurally valid input that violates a model invariant.
struct ValidationError : Error {
  using Error::Error;
};

// The market admits no allowable deterministic allocation.
struct InfeasibleError : Error {
  using Error::Error;
};

// Instance exceeds a configured enumeration cap.
struct SizeCapError : Error {
  using Error::Error;
};

// A state the algorithms guarantee unreachable was reached anyway.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace mps
