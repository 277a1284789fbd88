#pragma once

#include <vector>

#include "cfe/linear_model.hpp"

namespace cfe {

struct LpOptions {
  double feasibility_tol = 1e-7;
  double pivot_tol = 1e-9;
  int max_iters = 200000;
};

/// Dense two-phase primal simplex for models without free binary variables.
/// General bounds are handled by shifting/splitting; finite upper bounds
/// become explicit rows. Intended as the correctness oracle on small
/// instances, not a production LP code.
Solution solve_simplex(const LinearModel& model, const LpOptions& opts = {});

/// Same engine with per-variable bound overrides; used by the enumeration
/// solver to pin binaries without mutating the model.
Solution solve_lp_with_bounds(const LinearModel& model,
                              const std::vector<double>& lower,
                              const std::vector<double>& upper,
                              const LpOptions& opts = {});

}  // namespace cfe
