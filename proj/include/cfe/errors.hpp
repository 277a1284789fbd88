#pragma once

#include <stdexcept>
#include <string>

namespace cfe {

// Bad inputs: config violations, dimension mismatches, precondition failures.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// External backend failures: process errors, timeouts, unparseable output.
// Infeasibility is not an error; it is reported through Solution::status.
struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace cfe
