#include "cfe/simplex.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>

namespace cfe {

namespace {

// Standard-form column derived from one model variable: x = shift + sign*y
// with y >= 0. Free variables produce two columns (positive/negative part).
struct ColumnMap {
  int var = -1;
  double shift = 0.0;
  double sign = 1.0;
};

struct StdRow {
  std::vector<std::pair<int, double>> coeffs;  // indices into std columns
  RowSense sense;
  double rhs;
};

class Tableau {
 public:
  Tableau(const std::vector<StdRow>& rows, int num_cols,
          const std::vector<double>& costs, const LpOptions& opts)
      : opts_(opts), n_struct_(num_cols), costs_(costs) {
    const int m = static_cast<int>(rows.size());
    // Count slack/artificial columns.
    int n_slack = 0, n_art = 0;
    for (const auto& row : rows) {
      const bool flip = row.rhs < 0.0;
      const RowSense s = !flip ? row.sense
                        : (row.sense == RowSense::LE   ? RowSense::GE
                           : row.sense == RowSense::GE ? RowSense::LE
                                                       : RowSense::EQ);
      if (s == RowSense::LE) ++n_slack;
      if (s == RowSense::GE) { ++n_slack; ++n_art; }
      if (s == RowSense::EQ) ++n_art;
    }
    n_total_ = n_struct_ + n_slack + n_art;
    art_begin_ = n_total_ - n_art;
    tab_ = Eigen::MatrixXd::Zero(m, n_total_ + 1);
    basis_.assign(m, -1);

    int slack_at = n_struct_;
    int art_at = art_begin_;
    for (int i = 0; i < m; ++i) {
      double mult = rows[i].rhs < 0.0 ? -1.0 : 1.0;
      for (const auto& [j, a] : rows[i].coeffs) tab_(i, j) += mult * a;
      tab_(i, n_total_) = mult * rows[i].rhs;
      RowSense s = rows[i].sense;
      if (mult < 0.0)
        s = s == RowSense::LE ? RowSense::GE
            : s == RowSense::GE ? RowSense::LE : RowSense::EQ;
      if (s == RowSense::LE) {
        tab_(i, slack_at) = 1.0;
        basis_[i] = slack_at++;
      } else if (s == RowSense::GE) {
        tab_(i, slack_at++) = -1.0;
        tab_(i, art_at) = 1.0;
        basis_[i] = art_at++;
      } else {
        tab_(i, art_at) = 1.0;
        basis_[i] = art_at++;
      }
    }
  }

  // Returns Optimal/Infeasible/Unbounded/Limit; on Optimal fills `x` with the
  // structural column values.
  Solution::Status run(std::vector<double>* x) {
    // Phase 1: minimize the sum of artificials.
    if (art_begin_ < n_total_) {
      Eigen::VectorXd cost1 = Eigen::VectorXd::Zero(n_total_);
      for (int j = art_begin_; j < n_total_; ++j) cost1(j) = 1.0;
      build_cost_row(cost1);
      const Solution::Status st = iterate(/*allow_artificials=*/true);
      if (st != Solution::Status::Optimal) return st;
      if (-z_(n_total_) > opts_.feasibility_tol)
        return Solution::Status::Infeasible;
      if (!purge_artificials()) return Solution::Status::Infeasible;
    }

    Eigen::VectorXd cost2 = Eigen::VectorXd::Zero(n_total_);
    for (int j = 0; j < n_struct_; ++j) cost2(j) = costs_[j];
    build_cost_row(cost2);
    const Solution::Status st = iterate(/*allow_artificials=*/false);
    if (st != Solution::Status::Optimal) return st;

    x->assign(n_struct_, 0.0);
    for (int i = 0; i < rows(); ++i)
      if (basis_[i] < n_struct_) (*x)[basis_[i]] = tab_(i, n_total_);
    return Solution::Status::Optimal;
  }

 private:
  int rows() const { return static_cast<int>(tab_.rows()); }

  void build_cost_row(const Eigen::VectorXd& costs) {
    z_ = Eigen::VectorXd::Zero(n_total_ + 1);
    z_.head(n_total_) = costs;
    for (int i = 0; i < rows(); ++i) {
      const double cb = costs(basis_[i]);
      if (cb != 0.0) z_ -= cb * tab_.row(i).transpose();
    }
  }

  void pivot(int r, int c) {
    tab_.row(r) /= tab_(r, c);
    for (int i = 0; i < rows(); ++i) {
      if (i == r) continue;
      const double f = tab_(i, c);
      if (f != 0.0) tab_.row(i) -= f * tab_.row(r);
    }
    const double fz = z_(c);
    if (fz != 0.0) z_ -= fz * tab_.row(r).transpose();
    basis_[r] = c;
  }

  Solution::Status iterate(bool allow_artificials) {
    const int price_end = allow_artificials ? n_total_ : art_begin_;
    int iters = 0;
    // Dantzig pricing with a switch to Bland's rule to break cycles.
    const int bland_after = 20 * (rows() + n_total_);
    while (true) {
      if (++iters > opts_.max_iters) return Solution::Status::Limit;
      const bool bland = iters > bland_after;
      int enter = -1;
      double best = -opts_.pivot_tol;
      for (int j = 0; j < price_end; ++j) {
        const double rc = z_(j);
        if (rc < best) {
          enter = j;
          if (bland) break;
          best = rc;
        }
      }
      if (enter < 0) return Solution::Status::Optimal;

      int leave = -1;
      double best_ratio = std::numeric_limits<double>::infinity();
      for (int i = 0; i < rows(); ++i) {
        const double a = tab_(i, enter);
        if (a > opts_.pivot_tol) {
          const double ratio = tab_(i, n_total_) / a;
          if (ratio < best_ratio - 1e-12 ||
              (ratio < best_ratio + 1e-12 &&
               (leave < 0 || basis_[i] < basis_[leave]))) {
            best_ratio = ratio;
            leave = i;
          }
        }
      }
      if (leave < 0) return Solution::Status::Unbounded;
      pivot(leave, enter);
    }
  }

  // Pivots zero-valued basic artificials out of the basis; redundant rows
  // are blanked. Returns false only if a positive artificial survived.
  bool purge_artificials() {
    for (int i = 0; i < rows(); ++i) {
      if (basis_[i] < art_begin_) continue;
      if (std::abs(tab_(i, n_total_)) > opts_.feasibility_tol) return false;
      int enter = -1;
      for (int j = 0; j < art_begin_; ++j)
        if (std::abs(tab_(i, j)) > opts_.pivot_tol) { enter = j; break; }
      if (enter >= 0) {
        pivot(i, enter);
      } else {
        tab_.row(i).setZero();  // dependent row; its artificial stays at 0
      }
    }
    return true;
  }

  LpOptions opts_;
  int n_struct_;
  int n_total_ = 0;
  int art_begin_ = 0;
  std::vector<double> costs_;
  Eigen::MatrixXd tab_;
  Eigen::VectorXd z_;
  std::vector<int> basis_;
};

bool is_free_lower(double lb) { return lb <= -kInfinity; }
bool is_free_upper(double ub) { return ub >= kInfinity; }

}  // namespace

Solution solve_lp_with_bounds(const LinearModel& model,
                              const std::vector<double>& lower,
                              const std::vector<double>& upper,
                              const LpOptions& opts) {
  const int n = model.num_variables();
  if (static_cast<int>(lower.size()) != n ||
      static_cast<int>(upper.size()) != n)
    throw ValidationError("solve_lp_with_bounds: bound arrays must match "
                          "the variable count");

  Solution sol;
  sol.values.assign(n, 0.0);

  // Map variables to shifted nonnegative columns; substitute fixed ones.
  std::vector<ColumnMap> columns;
  std::vector<int> first_col(n, -1);   // variable -> first std column
  std::vector<int> second_col(n, -1);  // negative part of a free variable
  std::vector<double> col_upper;       // finite residual upper bounds
  for (int j = 0; j < n; ++j) {
    const double lb = lower[j], ub = upper[j];
    if (lb > ub + 1e-12)
      return Solution{Solution::Status::Infeasible, {}, 0.0};
    if (!is_free_lower(lb) && ub - lb <= 1e-12) {
      sol.values[j] = lb;  // fixed
      continue;
    }
    if (!is_free_lower(lb)) {
      first_col[j] = static_cast<int>(columns.size());
      columns.push_back({j, lb, 1.0});
      col_upper.push_back(is_free_upper(ub) ? kInfinity : ub - lb);
    } else if (!is_free_upper(ub)) {
      first_col[j] = static_cast<int>(columns.size());
      columns.push_back({j, ub, -1.0});
      col_upper.push_back(kInfinity);
    } else {
      first_col[j] = static_cast<int>(columns.size());
      columns.push_back({j, 0.0, 1.0});
      col_upper.push_back(kInfinity);
      second_col[j] = static_cast<int>(columns.size());
      columns.push_back({j, 0.0, -1.0});
      col_upper.push_back(kInfinity);
    }
  }
  const int ncols = static_cast<int>(columns.size());

  // Rows in standard-column space, then one row per finite residual upper.
  std::vector<StdRow> rows;
  rows.reserve(model.num_constraints() + ncols);
  for (int r = 0; r < model.num_constraints(); ++r) {
    const auto& row = model.constraint(r);
    StdRow sr;
    sr.sense = row.sense;
    sr.rhs = row.rhs;
    for (const auto& [var, a] : row.coeffs) {
      if (a == 0.0) continue;
      if (first_col[var] < 0) {
        sr.rhs -= a * sol.values[var];
        continue;
      }
      const auto& c1 = columns[first_col[var]];
      sr.rhs -= a * c1.shift;
      sr.coeffs.emplace_back(first_col[var], a * c1.sign);
      if (second_col[var] >= 0)
        sr.coeffs.emplace_back(second_col[var], -a);
    }
    if (sr.coeffs.empty()) {
      const double resid = sr.rhs;
      const bool ok = (sr.sense == RowSense::LE && resid >= -opts.feasibility_tol) ||
                      (sr.sense == RowSense::GE && resid <= opts.feasibility_tol) ||
                      (sr.sense == RowSense::EQ &&
                       std::abs(resid) <= opts.feasibility_tol);
      if (!ok) return Solution{Solution::Status::Infeasible, {}, 0.0};
      continue;
    }
    rows.push_back(std::move(sr));
  }
  for (int c = 0; c < ncols; ++c)
    if (col_upper[c] < kInfinity)
      rows.push_back(StdRow{{{c, 1.0}}, RowSense::LE, col_upper[c]});

  // Objective over standard columns.
  std::vector<double> costs(ncols, 0.0);
  for (int c = 0; c < ncols; ++c)
    costs[c] = model.objective()[columns[c].var] * columns[c].sign;

  if (ncols == 0) {
    sol.status = Solution::Status::Optimal;
    sol.objective = model.objective_value(sol.values);
    return sol;
  }

  Tableau tableau(rows, ncols, costs, opts);
  std::vector<double> y;
  sol.status = tableau.run(&y);
  if (sol.status != Solution::Status::Optimal) {
    sol.values.clear();
    return sol;
  }
  for (int c = 0; c < ncols; ++c)
    sol.values[columns[c].var] += columns[c].sign * y[c];
  for (int j = 0; j < n; ++j)
    if (first_col[j] >= 0) sol.values[j] += columns[first_col[j]].shift;
  sol.objective = model.objective_value(sol.values);
  return sol;
}

Solution solve_simplex(const LinearModel& model, const LpOptions& opts) {
  if (model.num_free_binaries() > 0)
    throw ValidationError(
        "solve_simplex: model still has free binary variables");
  std::vector<double> lb(model.num_variables()), ub(model.num_variables());
  for (int j = 0; j < model.num_variables(); ++j) {
    lb[j] = model.variable(j).lower;
    ub[j] = model.variable(j).upper;
  }
  return solve_lp_with_bounds(model, lb, ub, opts);
}

}  // namespace cfe
