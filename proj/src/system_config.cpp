#include "cfe/system_config.hpp"

#include <algorithm>
#include <cmath>

namespace cfe {

void BatteryParams::validate() const {
  if (capacity_kwh <= 0.0)
    throw ValidationError("battery: capacity must be > 0");
  if (eta_charge <= 0.0 || eta_charge > 1.0)
    throw ValidationError("battery: eta_charge must be in (0, 1]");
  if (eta_discharge <= 0.0 || eta_discharge > 1.0)
    throw ValidationError("battery: eta_discharge must be in (0, 1]");
  if (charge_rate_max_kw < 0.0 || discharge_rate_max_kw < 0.0 ||
      charge_ramp_kw < 0.0 || discharge_ramp_kw < 0.0)
    throw ValidationError("battery: rates and ramps must be >= 0");
  if (!(0.0 <= soc_min_pct && soc_min_pct <= terminal_soc_pct &&
        terminal_soc_pct <= soc_max_pct && soc_max_pct <= 100.0))
    throw ValidationError(
        "battery: need 0 <= soc_min <= terminal_soc <= soc_max <= 100");
  if (soc_init_pct < soc_min_pct || soc_init_pct > soc_max_pct)
    throw ValidationError("battery: soc_init must lie in [soc_min, soc_max]");
}

namespace {

void check_series(const std::vector<double>& s, int len, const char* name,
                  std::vector<std::string>* errors) {
  if (static_cast<int>(s.size()) != len) {
    errors->push_back(std::string(name) + ": expected length " +
                      std::to_string(len) + ", got " +
                      std::to_string(s.size()));
    return;
  }
  for (double v : s)
    if (v <= 0.0) {
      errors->push_back(std::string(name) + ": prices must be > 0");
      return;
    }
}

}  // namespace

std::vector<std::string> SystemConfig::validate(const TimeGrid& grid) const {
  battery.validate();
  const int T = grid.num_slots();

  std::vector<std::string> errors;
  check_series(tariff.nongreen_buy_da, T, "tariff.nongreen_buy_da", &errors);
  check_series(tariff.nongreen_buy_rt, T, "tariff.nongreen_buy_rt", &errors);
  check_series(tariff.sell_da, T, "tariff.sell_da", &errors);
  check_series(tariff.sell_rt, T, "tariff.sell_rt", &errors);
  for (const auto& src : sources) {
    check_series(src.buy_da, T, ("source " + src.id + ".buy_da").c_str(),
                 &errors);
    check_series(src.buy_rt, T, ("source " + src.id + ".buy_rt").c_str(),
                 &errors);
    if (src.allocation_kwh && *src.allocation_kwh < 0.0)
      errors.push_back("source " + src.id + ": allocation must be >= 0");
  }
  if (!errors.empty()) throw ValidationError(errors.front());

  // Tariff ordering: the buy/sell complementarity argument needs the DA sell
  // rate strictly below every DA buy rate.
  for (int t = 0; t < T; ++t) {
    if (tariff.sell_da[t] >= tariff.nongreen_buy_da[t])
      throw ValidationError(
          "tariff: sell_da must be < nongreen_buy_da at every slot (slot " +
          std::to_string(t) + ")");
    for (const auto& src : sources)
      if (tariff.sell_da[t] >= src.buy_da[t])
        throw ValidationError("tariff: sell_da must be < " + src.id +
                              ".buy_da at every slot (slot " +
                              std::to_string(t) + ")");
  }

  std::vector<std::string> warnings;
  for (int t = 0; t < T; ++t) {
    if (tariff.nongreen_buy_rt[t] < tariff.nongreen_buy_da[t]) {
      warnings.push_back("tariff: RT non-green buy rate below DA rate");
      break;
    }
  }
  for (int t = 0; t < T; ++t) {
    if (tariff.sell_rt[t] > tariff.sell_da[t]) {
      warnings.push_back("tariff: RT sell rate above DA rate");
      break;
    }
  }
  for (const auto& src : sources) {
    for (int t = 0; t < T; ++t) {
      if (src.buy_rt[t] < src.buy_da[t]) {
        warnings.push_back("source " + src.id + ": RT rate below DA rate");
        break;
      }
    }
  }

  const int Y = policy.mode == ComplianceMode::Daily ? grid.days
                                                     : grid.num_mtus();
  if (policy.horizon != Y)
    throw ValidationError("compliance: horizon must equal " +
                          std::to_string(Y) +
                          (policy.mode == ComplianceMode::Daily ? " (days)"
                                                                : " (MTUs)"));
  if (policy.cf_required < 0 || policy.cf_required > policy.horizon)
    throw ValidationError("compliance: need 0 <= cf_required <= horizon");

  if (constants.epsilon_status_kw < 0.0)
    throw ValidationError("constants: epsilon_status must be >= 0");

  return warnings;
}

void validate_forecast(const ForecastBundle& forecast, const TimeGrid& grid) {
  const int T = grid.num_slots();
  if (static_cast<int>(forecast.p_renew.size()) != T ||
      static_cast<int>(forecast.p_load.size()) != T)
    throw ValidationError("forecast: series must have length T = " +
                          std::to_string(T));
  for (double v : forecast.p_renew)
    if (v < 0.0) throw ValidationError("forecast: p_renew must be >= 0");
  for (double v : forecast.p_load)
    if (v < 0.0) throw ValidationError("forecast: p_load must be >= 0");
}

double effective_big_m(const SystemConfig& config,
                       const std::vector<double>& p_load) {
  if (config.constants.big_m_kw > 0.0) return config.constants.big_m_kw;
  double max_load = 0.0;
  for (double v : p_load) max_load = std::max(max_load, v);
  return 1.5 * (max_load + config.battery.charge_rate_max_kw);
}

}  // namespace cfe
