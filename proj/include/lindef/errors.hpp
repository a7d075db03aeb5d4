#pragma once

#include <stdexcept>
#include <string>

namespace lindef {

// Malformed input: bad files, out-of-range vertices, ambient mismatches.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input is well formed but outside the scope of the requested operation.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A documented precondition of an algorithm does not hold.
struct PreconditionError : std::logic_error {
  using std::logic_error::logic_error;
};

// The computation would exceed a configured size cap.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal consistency check failed. Always a bug (or a false theorem).
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace lindef
