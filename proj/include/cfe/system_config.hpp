#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cfe/time_grid.hpp"

namespace cfe {

/// Battery energy storage parameters. SoC quantities are percent of capacity.
struct BatteryParams {
  double capacity_kwh = 100.0;
  double eta_charge = 0.95;
  double eta_discharge = 0.8835;
  double charge_rate_max_kw = 20.0;
  double discharge_rate_max_kw = 20.0;
  double charge_ramp_kw = 20.0;     // max change between consecutive slots
  double discharge_ramp_kw = 20.0;
  double soc_min_pct = 20.0;
  double soc_max_pct = 80.0;
  double terminal_soc_pct = 40.0;   // floor on end-of-day SoC
  double soc_init_pct = 50.0;

  bool enabled() const {
    return charge_rate_max_kw > 0.0 || discharge_rate_max_kw > 0.0;
  }
  void validate() const;
};

/// One green energy seller: prices per slot, optional energy allocation.
/// An absent allocation means the source is unlimited.
struct GreenSource {
  std::string id;
  std::vector<double> buy_da;  // THB/kWh, length T
  std::vector<double> buy_rt;  // THB/kWh, length T
  std::optional<double> allocation_kwh;
};

struct Tariff {
  std::vector<double> nongreen_buy_da;  // THB/kWh, length T
  std::vector<double> nongreen_buy_rt;
  std::vector<double> sell_da;
  std::vector<double> sell_rt;
};

enum class ComplianceMode { Daily, Hourly };
enum class ExportPolicy { SellBack, NoSell };

/// Require cf_required CF blocks within a horizon of `horizon` blocks.
/// Daily mode: horizon must equal D. Hourly mode: horizon must equal H.
struct CompliancePolicy {
  ComplianceMode mode = ComplianceMode::Daily;
  int cf_required = 0;   // X
  int horizon = 7;       // Y
  ExportPolicy export_policy = ExportPolicy::SellBack;
};

/// Big-M and the status-linking epsilon. big_m_kw <= 0 means "derive from
/// the forecast" as 1.5 * (max load + charge rate).
struct ModelConstants {
  double big_m_kw = 0.0;
  double epsilon_status_kw = 0.001;
};

struct ForecastBundle {
  std::vector<double> p_renew;  // kW, length T
  std::vector<double> p_load;   // kW, length T
};

struct SystemConfig {
  BatteryParams battery;
  Tariff tariff;
  std::vector<GreenSource> sources;
  CompliancePolicy policy;
  ModelConstants constants;
  double pv_capacity_kw = 15.0;  // clamp ceiling for sampled renewables

  // Throws ValidationError on hard violations (lengths, tariff ordering,
  // battery ranges); returns warnings for soft ones (RT rates more
  // favorable than DA).
  std::vector<std::string> validate(const TimeGrid& grid) const;
};

void validate_forecast(const ForecastBundle& forecast, const TimeGrid& grid);

/// Effective big-M: the configured value, or 1.5*(max load + charge rate)
/// when unset.
double effective_big_m(const SystemConfig& config,
                       const std::vector<double>& p_load_max_candidates);

}  // namespace cfe
