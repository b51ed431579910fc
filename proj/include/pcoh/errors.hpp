#pragma once

#include <stdexcept>
#include <string>

namespace pcoh {

// Malformed or out-of-contract input (CLI exit code 2).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Polyvector degree outside 0..2 would be required.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotCocycleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Jet computations disagree between order N and the stabilization order.
struct JetInstabilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal identity check failed; always a bug.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace pcoh
