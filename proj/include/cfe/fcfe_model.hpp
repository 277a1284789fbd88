#pragma once

#include <string>
#include <vector>

#include "cfe/linear_model.hpp"
#include "cfe/system_config.hpp"
#include "cfe/time_grid.hpp"

namespace cfe {

/// Named mapping from formulation quantities to model variable indices.
/// Market-committed quantities (purchase statuses and powers, DA sell) hold
/// one variable per MTU shared by all slots of that MTU; this encodes the
/// within-hour equality by construction instead of with equality rows.
struct VarIndex {
  // MTU-indexed: [source][mtu] / [mtu].
  std::vector<std::vector<int>> x_g;  // green-buy status
  std::vector<std::vector<int>> p_g;  // green power (DA stage when stochastic)
  std::vector<int> x_ng, p_ng;        // non-green status / power
  std::vector<int> p_sell_da;         // DA sell commitment (stochastic)
  // Slot-indexed.
  std::vector<int> v;  // green-vs-nongreen exclusivity helper
  std::vector<int> x_chg, x_dchg, p_chg, p_dchg;
  std::vector<int> p_net, p_net_plus, p_net_minus;  // deterministic only
  std::vector<int> soc;  // length T+1, soc[0] = initial state
  // Compliance blocks: day-indexed in daily mode, MTU-indexed in hourly.
  std::vector<int> u;
  // Stochastic second stage: [scenario][source][slot] / [scenario][slot].
  std::vector<std::vector<std::vector<int>>> p_g_rt;
  std::vector<std::vector<int>> p_ng_rt, p_sell_rt, p_curt;
  // Context the extractor needs back.
  ExportPolicy export_policy = ExportPolicy::SellBack;
  ComplianceMode mode = ComplianceMode::Daily;
};

struct BuildResult {
  LinearModel model;
  VarIndex vars;
  std::vector<std::string> warnings;
  double big_m = 0.0;
};

/// Assembles the deterministic flexible-CFE MILP: net-cost objective,
/// battery dynamics, power balance, import/export split, sourcing rules with
/// big-M status linking, per-source energy budgets, and CF block selection.
/// Under ExportPolicy::NoSell the sell revenue term is dropped and the
/// negative net-power part acts as curtailment.
BuildResult build_fcfe(const TimeGrid& grid, const SystemConfig& config,
                       const ForecastBundle& forecast);

/// Slot-expanded solution of the deterministic program.
struct Plan {
  std::vector<std::vector<double>> x_g, p_g;  // [source][slot]
  std::vector<double> x_ng, p_ng;
  std::vector<double> v, x_chg, x_dchg, p_chg, p_dchg;
  std::vector<double> p_net, p_net_plus, p_net_minus;
  std::vector<double> soc;  // length T+1
  std::vector<double> u;    // per compliance block
  double objective = 0.0;
  ExportPolicy export_policy = ExportPolicy::SellBack;

  // Blocks (days or MTUs) planned carbon-free, i.e. u == 0.
  std::vector<int> cf_blocks() const;
};

Plan extract_plan(const Solution& solution, const VarIndex& vars,
                  const TimeGrid& grid, double integrality_tol = 1e-5);

struct Violation {
  std::string constraint;
  int index = 0;
  double residual = 0.0;
};

/// Re-checks every formulation constraint numerically on a slot-expanded
/// plan. An empty report means feasible within tolerance; violations are
/// data, not errors.
std::vector<Violation> validate_plan(const Plan& plan, const TimeGrid& grid,
                                     const SystemConfig& config,
                                     const ForecastBundle& forecast,
                                     double tol = 1e-6);

/// Net cost of a plan: purchase cost minus sell revenue (revenue dropped
/// under no-sell).
double plan_cost(const Plan& plan, const SystemConfig& config,
                 const TimeGrid& grid);

// Shared name helpers (stochastic builder reuses the first-stage block).
namespace names {
std::string mtu(const char* stem, int h);
std::string slot(const char* stem, int t);
std::string day(const char* stem, int d);
std::string src_mtu(const char* stem, int i, int h);
std::string src_slot(const char* stem, int i, int t);
}  // namespace names

}  // namespace cfe
