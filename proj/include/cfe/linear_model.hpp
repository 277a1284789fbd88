#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cfe/errors.hpp"

namespace cfe {

enum class VarKind { Continuous, Binary };
enum class RowSense { LE, EQ, GE };

constexpr double kInfinity = 1e30;  // bounds at or beyond this are infinite

struct Variable {
  std::string name;
  VarKind kind = VarKind::Continuous;
  double lower = 0.0;
  double upper = kInfinity;
};

struct Constraint {
  std::string name;
  std::vector<std::pair<int, double>> coeffs;  // (variable index, coefficient)
  RowSense sense = RowSense::LE;
  double rhs = 0.0;
};

/// Generic minimization MILP in sparse row form. Variables and rows keep
/// insertion order; names are unique.
class LinearModel {
 public:
  int add_continuous(const std::string& name, double lower, double upper);
  int add_binary(const std::string& name);
  void add_constraint(const std::string& name,
                      std::vector<std::pair<int, double>> coeffs,
                      RowSense sense, double rhs);
  // Accumulates into the objective row.
  void add_objective_term(int var, double coeff);
  void add_objective_constant(double c) { objective_constant_ += c; }

  // Pins a variable to a value via its bounds.
  void fix(int var, double value);
  void set_bounds(int var, double lower, double upper);

  int num_variables() const { return static_cast<int>(variables_.size()); }
  int num_constraints() const { return static_cast<int>(constraints_.size()); }
  int num_binaries() const;
  // Binaries still free to take either value (lower < upper).
  int num_free_binaries() const;

  const Variable& variable(int i) const { return variables_[i]; }
  const Constraint& constraint(int i) const { return constraints_[i]; }
  const std::vector<Variable>& variables() const { return variables_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  const std::vector<double>& objective() const { return objective_; }
  double objective_constant() const { return objective_constant_; }

  int index_of(const std::string& name) const;  // -1 when absent

  double objective_value(const std::vector<double>& x) const;

 private:
  int add_variable(Variable v);

  std::vector<Variable> variables_;
  std::vector<Constraint> constraints_;
  std::vector<double> objective_;  // dense, aligned with variables_
  double objective_constant_ = 0.0;
  std::unordered_map<std::string, int> var_index_;
  std::unordered_map<std::string, int> row_index_;
};

struct Solution {
  enum class Status { Optimal, Infeasible, Unbounded, Limit };
  Status status = Status::Limit;
  std::vector<double> values;  // aligned with model variable indices
  double objective = 0.0;

  bool optimal() const { return status == Status::Optimal; }
};

const char* to_string(Solution::Status s);

}  // namespace cfe
