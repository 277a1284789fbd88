#include "cfe/fcfe_model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "fcfe_common.hpp"

namespace cfe {

namespace names {

namespace {
std::string tag(const char* stem, char kind, int width, int idx) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%s_%c%0*d", stem, kind, width, idx);
  return buf;
}
}  // namespace

std::string mtu(const char* stem, int h) { return tag(stem, 'h', 3, h); }
std::string slot(const char* stem, int t) { return tag(stem, 't', 4, t); }
std::string day(const char* stem, int d) { return tag(stem, 'd', 2, d); }
std::string src_mtu(const char* stem, int i, int h) {
  return tag((std::string(stem) + std::to_string(i + 1)).c_str(), 'h', 3, h);
}
std::string src_slot(const char* stem, int i, int t) {
  return tag((std::string(stem) + std::to_string(i + 1)).c_str(), 't', 4, t);
}

}  // namespace names

namespace detail {

int compliance_block_of_mtu(const TimeGrid& grid, ComplianceMode mode, int h) {
  return mode == ComplianceMode::Daily ? grid.day_of_mtu(h) : h;
}

void add_status_variables(LinearModel& model, const TimeGrid& grid,
                          const SystemConfig& config, VarIndex& vars) {
  const int T = grid.num_slots();
  const int H = grid.num_mtus();
  const int N = static_cast<int>(config.sources.size());
  const bool battery_on = config.battery.enabled();

  vars.x_g.resize(N);
  for (int i = 0; i < N; ++i)
    for (int h = 0; h < H; ++h)
      vars.x_g[i].push_back(model.add_binary(names::src_mtu("xg", i, h)));
  for (int h = 0; h < H; ++h)
    vars.x_ng.push_back(model.add_binary(names::mtu("xng", h)));
  for (int t = 0; t < T; ++t)
    vars.v.push_back(model.add_binary(names::slot("v", t)));
  for (int t = 0; t < T; ++t) {
    const int xc = model.add_binary(names::slot("xchg", t));
    const int xd = model.add_binary(names::slot("xdchg", t));
    if (!battery_on) {
      model.fix(xc, 0.0);
      model.fix(xd, 0.0);
    }
    vars.x_chg.push_back(xc);
    vars.x_dchg.push_back(xd);
  }
  const int blocks = config.policy.mode == ComplianceMode::Daily ? grid.days
                                                                 : H;
  for (int b = 0; b < blocks; ++b)
    vars.u.push_back(model.add_binary(config.policy.mode ==
                                              ComplianceMode::Daily
                                          ? names::day("u", b)
                                          : names::mtu("u", b)));
  vars.export_policy = config.policy.export_policy;
  vars.mode = config.policy.mode;
}

void add_battery(LinearModel& model, const TimeGrid& grid,
                 const SystemConfig& config, VarIndex& vars) {
  const int T = grid.num_slots();
  const BatteryParams& b = config.battery;
  const double dt = grid.dt_hours();

  for (int t = 0; t < T; ++t)
    vars.p_chg.push_back(model.add_continuous(names::slot("Pchg", t), 0.0,
                                              b.charge_rate_max_kw));
  for (int t = 0; t < T; ++t)
    vars.p_dchg.push_back(model.add_continuous(names::slot("Pdchg", t), 0.0,
                                               b.discharge_rate_max_kw));
  const auto last_slots = grid.last_slot_of_day();
  for (int t = 0; t <= T; ++t) {
    double lo = b.soc_min_pct;
    double hi = b.soc_max_pct;
    if (t == 0) lo = hi = b.soc_init_pct;
    // End-of-day states must leave enough charge for the next day.
    for (int ls : last_slots)
      if (t == ls + 1) lo = std::max(lo, b.terminal_soc_pct);
    vars.soc.push_back(model.add_continuous(names::slot("SoC", t), lo, hi));
  }

  for (int t = 0; t < T; ++t) {
    model.add_constraint(names::slot("chgcap", t),
                         {{vars.p_chg[t], 1.0},
                          {vars.x_chg[t], -b.charge_rate_max_kw}},
                         RowSense::LE, 0.0);
    model.add_constraint(names::slot("dchgcap", t),
                         {{vars.p_dchg[t], 1.0},
                          {vars.x_dchg[t], -b.discharge_rate_max_kw}},
                         RowSense::LE, 0.0);
  }
  for (int t = 1; t < T; ++t) {
    model.add_constraint(
        names::slot("chgrampup", t),
        {{vars.p_chg[t], 1.0}, {vars.p_chg[t - 1], -1.0}}, RowSense::LE,
        b.charge_ramp_kw);
    model.add_constraint(
        names::slot("chgrampdn", t),
        {{vars.p_chg[t - 1], 1.0}, {vars.p_chg[t], -1.0}}, RowSense::LE,
        b.charge_ramp_kw);
    model.add_constraint(
        names::slot("dchgrampup", t),
        {{vars.p_dchg[t], 1.0}, {vars.p_dchg[t - 1], -1.0}}, RowSense::LE,
        b.discharge_ramp_kw);
    model.add_constraint(
        names::slot("dchgrampdn", t),
        {{vars.p_dchg[t - 1], 1.0}, {vars.p_dchg[t], -1.0}}, RowSense::LE,
        b.discharge_ramp_kw);
  }
  for (int t = 0; t < T; ++t)
    model.add_constraint(
        names::slot("battmode", t),
        {{vars.x_chg[t], 1.0}, {vars.x_dchg[t], 1.0}}, RowSense::LE, 1.0);

  const double k_chg = 100.0 * b.eta_charge * dt / b.capacity_kwh;
  const double k_dchg = 100.0 * dt / (b.eta_discharge * b.capacity_kwh);
  for (int t = 0; t < T; ++t)
    model.add_constraint(names::slot("socrec", t),
                         {{vars.soc[t + 1], 1.0},
                          {vars.soc[t], -1.0},
                          {vars.p_chg[t], -k_chg},
                          {vars.p_dchg[t], k_dchg}},
                         RowSense::EQ, 0.0);
}

void add_source_exclusivity(LinearModel& model, const TimeGrid& grid,
                            const SystemConfig& config, VarIndex& vars) {
  const int T = grid.num_slots();
  const int N = static_cast<int>(config.sources.size());
  for (int i = 0; i < N; ++i)
    for (int t = 0; t < T; ++t)
      model.add_constraint(
          names::src_slot("gv", i, t),
          {{vars.x_g[i][grid.mtu_of_slot(t)], 1.0}, {vars.v[t], -1.0}},
          RowSense::LE, 0.0);
  for (int t = 0; t < T; ++t)
    model.add_constraint(
        names::slot("vng", t),
        {{vars.v[t], 1.0}, {vars.x_ng[grid.mtu_of_slot(t)], 1.0}},
        RowSense::LE, 1.0);
}

void add_cf_selection(LinearModel& model, const TimeGrid& grid,
                      const SystemConfig& config, VarIndex& vars) {
  const int H = grid.num_mtus();
  std::vector<std::pair<int, double>> count;
  count.reserve(vars.u.size());
  for (int uvar : vars.u) count.emplace_back(uvar, 1.0);
  model.add_constraint(
      "cbcount", std::move(count), RowSense::LE,
      static_cast<double>(config.policy.horizon - config.policy.cf_required));
  for (int h = 0; h < H; ++h) {
    const int block =
        compliance_block_of_mtu(grid, config.policy.mode, h);
    model.add_constraint(names::mtu("ulink", h),
                         {{vars.x_ng[h], 1.0}, {vars.u[block], -1.0}},
                         RowSense::LE, 0.0);
  }
}

void add_status_link(LinearModel& model, const std::string& ub_name,
                     const std::string& lb_name, int p, int x, double big_m,
                     double eps) {
  model.add_constraint(ub_name, {{p, 1.0}, {x, -big_m}}, RowSense::LE, 0.0);
  model.add_constraint(lb_name, {{x, eps}, {p, -1.0}}, RowSense::LE, 0.0);
}

}  // namespace detail

BuildResult build_fcfe(const TimeGrid& grid, const SystemConfig& config,
                       const ForecastBundle& forecast) {
  grid.validate();
  BuildResult out;
  out.warnings = config.validate(grid);
  validate_forecast(forecast, grid);

  const int T = grid.num_slots();
  const int H = grid.num_mtus();
  const int N = static_cast<int>(config.sources.size());
  const double dt = grid.dt_hours();
  const double eps = config.constants.epsilon_status_kw;
  const double big_m = effective_big_m(config, forecast.p_load);
  out.big_m = big_m;

  const double peak_load =
      *std::max_element(forecast.p_load.begin(), forecast.p_load.end());
  if (big_m < peak_load + config.battery.charge_rate_max_kw)
    out.warnings.push_back(
        "big-M below peak load + charge rate; imports may be clipped");

  LinearModel& model = out.model;
  VarIndex& vars = out.vars;

  detail::add_status_variables(model, grid, config, vars);

  vars.p_g.resize(N);
  for (int i = 0; i < N; ++i)
    for (int h = 0; h < H; ++h)
      vars.p_g[i].push_back(
          model.add_continuous(names::src_mtu("Pg", i, h), 0.0, kInfinity));
  for (int h = 0; h < H; ++h)
    vars.p_ng.push_back(
        model.add_continuous(names::mtu("Png", h), 0.0, kInfinity));

  detail::add_battery(model, grid, config, vars);

  for (int t = 0; t < T; ++t)
    vars.p_net.push_back(
        model.add_continuous(names::slot("Pnet", t), -kInfinity, kInfinity));
  for (int t = 0; t < T; ++t)
    vars.p_net_plus.push_back(
        model.add_continuous(names::slot("Pnetp", t), 0.0, kInfinity));
  for (int t = 0; t < T; ++t)
    vars.p_net_minus.push_back(
        model.add_continuous(names::slot("Pnetm", t), 0.0, kInfinity));

  // Net cost: purchases minus (under sell-back) export revenue.
  for (int t = 0; t < T; ++t) {
    const int h = grid.mtu_of_slot(t);
    model.add_objective_term(vars.p_ng[h], dt * config.tariff.nongreen_buy_da[t]);
    for (int i = 0; i < N; ++i)
      model.add_objective_term(vars.p_g[i][h], dt * config.sources[i].buy_da[t]);
    if (config.policy.export_policy == ExportPolicy::SellBack)
      model.add_objective_term(vars.p_net_minus[t], -dt * config.tariff.sell_da[t]);
  }

  // Power balance and the import/export split.
  for (int t = 0; t < T; ++t) {
    const int h = grid.mtu_of_slot(t);
    model.add_constraint(names::slot("balance", t),
                         {{vars.p_net[t], 1.0},
                          {vars.p_chg[t], -1.0},
                          {vars.p_dchg[t], 1.0}},
                         RowSense::EQ, forecast.p_load[t] - forecast.p_renew[t]);
    std::vector<std::pair<int, double>> imp{{vars.p_net_plus[t], 1.0},
                                            {vars.p_ng[h], -1.0}};
    for (int i = 0; i < N; ++i) imp.emplace_back(vars.p_g[i][h], -1.0);
    model.add_constraint(names::slot("import", t), std::move(imp),
                         RowSense::EQ, 0.0);
    model.add_constraint(names::slot("netsplit", t),
                         {{vars.p_net[t], 1.0},
                          {vars.p_net_plus[t], -1.0},
                          {vars.p_net_minus[t], 1.0}},
                         RowSense::EQ, 0.0);
    model.add_constraint(names::slot("absub", t),
                         {{vars.p_net[t], 1.0},
                          {vars.p_net_plus[t], -1.0},
                          {vars.p_net_minus[t], -1.0}},
                         RowSense::LE, 0.0);
    model.add_constraint(names::slot("abslb", t),
                         {{vars.p_net[t], -1.0},
                          {vars.p_net_plus[t], -1.0},
                          {vars.p_net_minus[t], -1.0}},
                         RowSense::LE, 0.0);
  }

  // Sourcing status boxes per MTU (shared variables make per-slot rows
  // duplicates).
  for (int h = 0; h < H; ++h) {
    for (int i = 0; i < N; ++i)
      detail::add_status_link(model, names::src_mtu("gub", i, h),
                              names::src_mtu("glb", i, h), vars.p_g[i][h],
                              vars.x_g[i][h], big_m, eps);
    detail::add_status_link(model, names::mtu("ngub", h),
                            names::mtu("nglb", h), vars.p_ng[h], vars.x_ng[h],
                            big_m, eps);
  }

  detail::add_source_exclusivity(model, grid, config, vars);

  for (int i = 0; i < N; ++i) {
    if (!config.sources[i].allocation_kwh) continue;
    std::vector<std::pair<int, double>> row;
    row.reserve(H);
    for (int h = 0; h < H; ++h)
      row.emplace_back(vars.p_g[i][h], dt * grid.slots_per_mtu);
    model.add_constraint("budget_g" + std::to_string(i + 1), std::move(row),
                         RowSense::LE, *config.sources[i].allocation_kwh);
  }

  detail::add_cf_selection(model, grid, config, vars);
  return out;
}

namespace {

std::vector<double> expand_mtu(const std::vector<int>& ids,
                               const Solution& sol, const TimeGrid& grid,
                               bool binary, double /*tol*/) {
  std::vector<double> out(grid.num_slots());
  for (int t = 0; t < grid.num_slots(); ++t) {
    double v = sol.values[ids[grid.mtu_of_slot(t)]];
    if (binary) v = std::round(v);
    out[t] = v;
  }
  return out;
}

std::vector<double> per_slot(const std::vector<int>& ids, const Solution& sol,
                             bool binary) {
  std::vector<double> out(ids.size());
  for (size_t t = 0; t < ids.size(); ++t) {
    double v = sol.values[ids[t]];
    if (binary) v = std::round(v);
    out[t] = v;
  }
  return out;
}

}  // namespace

std::vector<int> Plan::cf_blocks() const {
  std::vector<int> out;
  for (size_t b = 0; b < u.size(); ++b)
    if (u[b] < 0.5) out.push_back(static_cast<int>(b));
  return out;
}

Plan extract_plan(const Solution& solution, const VarIndex& vars,
                  const TimeGrid& grid, double integrality_tol) {
  if (!solution.optimal())
    throw ValidationError(std::string("extract_plan: solution status is ") +
                          to_string(solution.status));
  (void)integrality_tol;
  Plan plan;
  const int N = static_cast<int>(vars.x_g.size());
  plan.x_g.resize(N);
  plan.p_g.resize(N);
  for (int i = 0; i < N; ++i) {
    plan.x_g[i] = expand_mtu(vars.x_g[i], solution, grid, true, 0);
    plan.p_g[i] = expand_mtu(vars.p_g[i], solution, grid, false, 0);
  }
  plan.x_ng = expand_mtu(vars.x_ng, solution, grid, true, 0);
  plan.p_ng = expand_mtu(vars.p_ng, solution, grid, false, 0);
  plan.v = per_slot(vars.v, solution, true);
  plan.x_chg = per_slot(vars.x_chg, solution, true);
  plan.x_dchg = per_slot(vars.x_dchg, solution, true);
  plan.p_chg = per_slot(vars.p_chg, solution, false);
  plan.p_dchg = per_slot(vars.p_dchg, solution, false);
  if (!vars.p_net.empty()) {
    plan.p_net = per_slot(vars.p_net, solution, false);
    plan.p_net_plus = per_slot(vars.p_net_plus, solution, false);
    plan.p_net_minus = per_slot(vars.p_net_minus, solution, false);
  }
  plan.soc = per_slot(vars.soc, solution, false);
  plan.u = per_slot(vars.u, solution, true);
  plan.objective = solution.objective;
  plan.export_policy = vars.export_policy;
  return plan;
}

namespace {

struct Reporter {
  std::vector<Violation>* report;
  double tol;
  void le(const std::string& name, int idx, double lhs, double rhs) {
    if (lhs > rhs + tol) report->push_back({name, idx, lhs - rhs});
  }
  void eq(const std::string& name, int idx, double lhs, double rhs) {
    if (std::abs(lhs - rhs) > tol)
      report->push_back({name, idx, lhs - rhs});
  }
};

}  // namespace

std::vector<Violation> validate_plan(const Plan& plan, const TimeGrid& grid,
                                     const SystemConfig& config,
                                     const ForecastBundle& forecast,
                                     double tol) {
  std::vector<Violation> report;
  Reporter check{&report, tol};
  const int T = grid.num_slots();
  const int N = static_cast<int>(plan.x_g.size());
  const double dt = grid.dt_hours();
  const BatteryParams& b = config.battery;
  const double eps = config.constants.epsilon_status_kw;
  const double big_m = effective_big_m(config, forecast.p_load);

  // Market-committed series must be constant within each MTU.
  auto check_blocked = [&](const char* name, const std::vector<double>& s) {
    for (int t = 0; t < T; ++t) {
      const int first = grid.first_slot_of_mtu(grid.mtu_of_slot(t));
      if (std::abs(s[t] - s[first]) > tol)
        report.push_back({std::string("hourly_") + name, t, s[t] - s[first]});
    }
  };
  check_blocked("xng", plan.x_ng);
  check_blocked("Png", plan.p_ng);
  for (int i = 0; i < N; ++i) {
    check_blocked("xg", plan.x_g[i]);
    check_blocked("Pg", plan.p_g[i]);
  }

  const double k_chg = 100.0 * b.eta_charge * dt / b.capacity_kwh;
  const double k_dchg = 100.0 * dt / (b.eta_discharge * b.capacity_kwh);
  for (int t = 0; t < T; ++t) {
    check.le("chgcap", t, plan.p_chg[t],
             b.charge_rate_max_kw * plan.x_chg[t]);
    check.le("dchgcap", t, plan.p_dchg[t],
             b.discharge_rate_max_kw * plan.x_dchg[t]);
    check.le("battmode", t, plan.x_chg[t] + plan.x_dchg[t], 1.0);
    if (t >= 1) {
      check.le("chgramp", t, std::abs(plan.p_chg[t] - plan.p_chg[t - 1]),
               b.charge_ramp_kw);
      check.le("dchgramp", t, std::abs(plan.p_dchg[t] - plan.p_dchg[t - 1]),
               b.discharge_ramp_kw);
    }
    check.eq("socrec", t,
             plan.soc[t + 1] - plan.soc[t] - k_chg * plan.p_chg[t] +
                 k_dchg * plan.p_dchg[t],
             0.0);
  }
  for (int t = 0; t <= T; ++t) {
    check.le("socmax", t, plan.soc[t], b.soc_max_pct);
    check.le("socmin", t, b.soc_min_pct, plan.soc[t]);
  }
  for (int ls : grid.last_slot_of_day())
    check.le("terminal_soc", ls + 1, b.terminal_soc_pct, plan.soc[ls + 1]);

  for (int t = 0; t < T; ++t) {
    check.eq("balance", t,
             plan.p_net[t] - plan.p_chg[t] + plan.p_dchg[t],
             forecast.p_load[t] - forecast.p_renew[t]);
    double buy = plan.p_ng[t];
    for (int i = 0; i < N; ++i) buy += plan.p_g[i][t];
    check.eq("import", t, plan.p_net_plus[t], buy);
    check.eq("netsplit", t,
             plan.p_net[t] - plan.p_net_plus[t] + plan.p_net_minus[t], 0.0);
    check.le("absrelax", t, std::abs(plan.p_net[t]),
             plan.p_net_plus[t] + plan.p_net_minus[t]);
    check.le("nonneg_netp", t, 0.0, plan.p_net_plus[t]);
    check.le("nonneg_netm", t, 0.0, plan.p_net_minus[t]);

    for (int i = 0; i < N; ++i) {
      check.le("gub", t, plan.p_g[i][t], big_m * plan.x_g[i][t]);
      check.le("glb", t, eps * plan.x_g[i][t], plan.p_g[i][t]);
      check.le("gv", t, plan.x_g[i][t], plan.v[t]);
    }
    check.le("ngub", t, plan.p_ng[t], big_m * plan.x_ng[t]);
    check.le("nglb", t, eps * plan.x_ng[t], plan.p_ng[t]);
    check.le("vng", t, plan.v[t] + plan.x_ng[t], 1.0);

    const int block = detail::compliance_block_of_mtu(
        grid, config.policy.mode, grid.mtu_of_slot(t));
    check.le("ulink", t, plan.x_ng[t], plan.u[block]);
  }

  for (int i = 0; i < N; ++i) {
    if (!config.sources[i].allocation_kwh) continue;
    double energy = 0.0;
    for (int t = 0; t < T; ++t) energy += dt * plan.p_g[i][t];
    check.le("budget", i, energy, *config.sources[i].allocation_kwh);
  }
  double cb = 0.0;
  for (double uv : plan.u) cb += uv;
  check.le("cbcount", 0, cb,
           static_cast<double>(config.policy.horizon -
                               config.policy.cf_required));
  return report;
}

double plan_cost(const Plan& plan, const SystemConfig& config,
                 const TimeGrid& grid) {
  const double dt = grid.dt_hours();
  double cost = 0.0;
  for (int t = 0; t < grid.num_slots(); ++t) {
    cost += dt * config.tariff.nongreen_buy_da[t] * plan.p_ng[t];
    for (size_t i = 0; i < plan.p_g.size(); ++i)
      cost += dt * config.sources[i].buy_da[t] * plan.p_g[i][t];
    if (plan.export_policy == ExportPolicy::SellBack)
      cost -= dt * config.tariff.sell_da[t] * plan.p_net_minus[t];
  }
  return cost;
}

}  // namespace cfe
