#pragma once

#include "cfe/linear_model.hpp"
#include "cfe/simplex.hpp"

namespace cfe {

struct EnumerationOptions {
  int max_binaries = 20;
  double integrality_tol = 1e-5;
  LpOptions lp;
};

/// Exact MILP oracle: depth-first enumeration of the free binary variables,
/// pruned by the LP-relaxation bound at each node. Binaries already fixed
/// through their bounds are not enumerated. Worst case 2^k LP solves, so the
/// free-binary count is capped by max_binaries.
Solution solve_enumeration(const LinearModel& model,
                           const EnumerationOptions& opts = {});

}  // namespace cfe
