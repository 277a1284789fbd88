#include "cfe/branch_bound.hpp"

#include <cmath>
#include <vector>

namespace cfe {

namespace {

struct SearchState {
  const LinearModel* model;
  const EnumerationOptions* opts;
  std::vector<int> binaries;  // free binary variable indices, model order
  std::vector<double> lb, ub;
  Solution best;
  bool have_best = false;
  bool root_unbounded = false;

  void dfs(bool root) {
    if (root_unbounded) return;
    Solution relax = solve_lp_with_bounds(*model, lb, ub, opts->lp);
    if (relax.status == Solution::Status::Infeasible) return;
    if (relax.status == Solution::Status::Unbounded) {
      if (root) root_unbounded = true;
      return;
    }
    if (relax.status != Solution::Status::Optimal) return;
    if (have_best && relax.objective >= best.objective - 1e-9) return;

    // Branch on the first fractional binary in model order.
    int branch_var = -1;
    for (int b : binaries) {
      const double v = relax.values[b];
      if (std::abs(v - std::round(v)) > opts->integrality_tol) {
        branch_var = b;
        break;
      }
    }
    if (branch_var < 0) {
      // All binaries integral: the relaxation bound is attained here.
      best = relax;
      for (int b : binaries) best.values[b] = std::round(best.values[b]);
      have_best = true;
      return;
    }
    const double save_lb = lb[branch_var], save_ub = ub[branch_var];
    for (double val : {0.0, 1.0}) {
      lb[branch_var] = ub[branch_var] = val;
      dfs(false);
    }
    lb[branch_var] = save_lb;
    ub[branch_var] = save_ub;
  }
};

}  // namespace

Solution solve_enumeration(const LinearModel& model,
                           const EnumerationOptions& opts) {
  const int free_binaries = model.num_free_binaries();
  if (free_binaries > opts.max_binaries)
    throw ValidationError("solve_enumeration: " +
                          std::to_string(free_binaries) +
                          " free binaries exceed the cap of " +
                          std::to_string(opts.max_binaries));

  SearchState st;
  st.model = &model;
  st.opts = &opts;
  const int n = model.num_variables();
  st.lb.resize(n);
  st.ub.resize(n);
  for (int j = 0; j < n; ++j) {
    st.lb[j] = model.variable(j).lower;
    st.ub[j] = model.variable(j).upper;
    const auto& v = model.variable(j);
    if (v.kind == VarKind::Binary && v.upper - v.lower > 0.5)
      st.binaries.push_back(j);
  }
  st.dfs(true);
  if (st.root_unbounded) return Solution{Solution::Status::Unbounded, {}, 0.0};
  if (!st.have_best) return Solution{Solution::Status::Infeasible, {}, 0.0};
  return st.best;
}

}  // namespace cfe
