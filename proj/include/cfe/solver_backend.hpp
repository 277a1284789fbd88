#pragma once

#include <optional>
#include <string>

#include "cfe/branch_bound.hpp"
#include "cfe/linear_model.hpp"

namespace cfe {

/// External MILP solver invoked as a subprocess. The command template must
/// contain {mps} and {sol} placeholders; the solver is expected to write a
/// solution file of the form
///     objective <value>
///     <varname> <value>
///     ...
/// or a single line `infeasible`.
struct BackendConfig {
  std::string command_template;
  double timeout_seconds = 600.0;
  double feasibility_tol = 1e-7;
  double integrality_tol = 1e-5;

  void validate() const;
};

Solution solve_external(const LinearModel& model, const BackendConfig& backend);

/// Parses the solution-file payload against a model (exposed for tests).
Solution parse_solution_text(const LinearModel& model, const std::string& text);

/// Backend from the CFE_SOLVER_CMD environment variable, when set.
std::optional<BackendConfig> backend_from_env();

/// How rolling/CLI solves stand-alone models: a configured external command
/// when available, otherwise the built-in enumeration solver.
struct SolverDispatch {
  std::optional<BackendConfig> backend;
  EnumerationOptions enumeration;

  Solution solve(const LinearModel& model) const;
};

}  // namespace cfe
