#pragma once

#include <stdexcept>
#include <string>

namespace postrop {

// Malformed or out-of-range input (bad subset, wrong arity, invalid necklace, ...).
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A documented precondition of an operation does not hold.
struct PreconditionError : std::logic_error {
  using std::logic_error::logic_error;
};

// An invariant that the mathematics guarantees failed; indicates a bug.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

// Checked 64-bit arithmetic overflowed; callers may retry with big integers.
struct OverflowError : std::overflow_error {
  using std::overflow_error::overflow_error;
};

}  // namespace postrop
