#include "cfe/linear_model.hpp"

namespace cfe {

int LinearModel::add_variable(Variable v) {
  if (var_index_.count(v.name))
    throw ValidationError("duplicate variable name: " + v.name);
  if (v.kind == VarKind::Binary &&
      (v.lower < 0.0 || v.upper > 1.0 || v.lower > v.upper))
    throw ValidationError("binary variable bounds outside [0,1]: " + v.name);
  const int idx = static_cast<int>(variables_.size());
  var_index_.emplace(v.name, idx);
  variables_.push_back(std::move(v));
  objective_.push_back(0.0);
  return idx;
}

int LinearModel::add_continuous(const std::string& name, double lower,
                                double upper) {
  return add_variable(Variable{name, VarKind::Continuous, lower, upper});
}

int LinearModel::add_binary(const std::string& name) {
  return add_variable(Variable{name, VarKind::Binary, 0.0, 1.0});
}

void LinearModel::add_constraint(const std::string& name,
                                 std::vector<std::pair<int, double>> coeffs,
                                 RowSense sense, double rhs) {
  if (row_index_.count(name))
    throw ValidationError("duplicate constraint name: " + name);
  for (const auto& [var, coeff] : coeffs) {
    (void)coeff;
    if (var < 0 || var >= num_variables())
      throw ValidationError("constraint " + name +
                            " references unknown variable index " +
                            std::to_string(var));
  }
  row_index_.emplace(name, static_cast<int>(constraints_.size()));
  constraints_.push_back(Constraint{name, std::move(coeffs), sense, rhs});
}

void LinearModel::add_objective_term(int var, double coeff) {
  if (var < 0 || var >= num_variables())
    throw ValidationError("objective references unknown variable index " +
                          std::to_string(var));
  objective_[var] += coeff;
}

void LinearModel::fix(int var, double value) { set_bounds(var, value, value); }

void LinearModel::set_bounds(int var, double lower, double upper) {
  if (var < 0 || var >= num_variables())
    throw ValidationError("set_bounds: unknown variable index " +
                          std::to_string(var));
  if (lower > upper)
    throw ValidationError("set_bounds: lower > upper for " +
                          variables_[var].name);
  variables_[var].lower = lower;
  variables_[var].upper = upper;
}

int LinearModel::num_binaries() const {
  int n = 0;
  for (const auto& v : variables_)
    if (v.kind == VarKind::Binary) ++n;
  return n;
}

int LinearModel::num_free_binaries() const {
  int n = 0;
  for (const auto& v : variables_)
    if (v.kind == VarKind::Binary && v.upper - v.lower > 0.5) ++n;
  return n;
}

int LinearModel::index_of(const std::string& name) const {
  auto it = var_index_.find(name);
  return it == var_index_.end() ? -1 : it->second;
}

double LinearModel::objective_value(const std::vector<double>& x) const {
  double v = objective_constant_;
  for (int i = 0; i < num_variables(); ++i) v += objective_[i] * x[i];
  return v;
}

const char* to_string(Solution::Status s) {
  switch (s) {
    case Solution::Status::Optimal: return "optimal";
    case Solution::Status::Infeasible: return "infeasible";
    case Solution::Status::Unbounded: return "unbounded";
    case Solution::Status::Limit: return "limit";
  }
  return "unknown";
}

}  // namespace cfe
