#pragma once

#include <vector>

#include "cfe/errors.hpp"

namespace cfe {

/// Slot/MTU/day indexing for a planning horizon. Slots are the operational
/// resolution (15 min by default), MTUs the market commitment granularity
/// (hourly by default), days the compliance blocks. All indices are 0-based.
struct TimeGrid {
  int slot_minutes = 15;
  int slots_per_mtu = 4;
  int mtus_per_day = 24;
  int days = 7;

  int slots_per_day() const { return slots_per_mtu * mtus_per_day; }
  int num_slots() const { return days * slots_per_day(); }  // T
  int num_mtus() const { return days * mtus_per_day; }      // H
  double dt_hours() const { return slot_minutes / 60.0; }

  int mtu_of_slot(int t) const { return t / slots_per_mtu; }
  int day_of_slot(int t) const { return t / slots_per_day(); }
  int day_of_mtu(int h) const { return h / mtus_per_day; }
  int first_slot_of_mtu(int h) const { return h * slots_per_mtu; }

  // Indices of the final slot of each day: {spd-1, 2*spd-1, ...}.
  std::vector<int> last_slot_of_day() const;

  void validate() const;
};

/// Validating constructor; throws ValidationError on a zero/negative argument.
TimeGrid build_time_grid(int slot_minutes, int slots_per_mtu, int mtus_per_day,
                         int days);

}  // namespace cfe
