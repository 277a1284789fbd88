#pragma once

// Internal: first-stage blocks shared between the deterministic and
// two-stage stochastic builders.

#include "cfe/fcfe_model.hpp"

namespace cfe::detail {

// Purchase status binaries (x_g per source/MTU, x_ng per MTU), the per-slot
// exclusivity binary v, battery status binaries, and the CF selection u.
void add_status_variables(LinearModel& model, const TimeGrid& grid,
                          const SystemConfig& config, VarIndex& vars);

// Battery power/SoC variables plus rate caps, ramps, mode exclusivity and
// the SoC recurrence with terminal floors.
void add_battery(LinearModel& model, const TimeGrid& grid,
                 const SystemConfig& config, VarIndex& vars);

// Green/non-green mutual exclusion through v.
void add_source_exclusivity(LinearModel& model, const TimeGrid& grid,
                            const SystemConfig& config, VarIndex& vars);

// CB-count cap and the u upper-bound linking rows.
void add_cf_selection(LinearModel& model, const TimeGrid& grid,
                      const SystemConfig& config, VarIndex& vars);

// Big-M sourcing box eps*x <= p <= M*x as two rows.
void add_status_link(LinearModel& model, const std::string& ub_name,
                     const std::string& lb_name, int p, int x, double big_m,
                     double eps);

int compliance_block_of_mtu(const TimeGrid& grid, ComplianceMode mode, int h);

}  // namespace cfe::detail
