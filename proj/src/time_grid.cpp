#include "cfe/time_grid.hpp"

#include <string>

namespace cfe {

std::vector<int> TimeGrid::last_slot_of_day() const {
  std::vector<int> out;
  out.reserve(days);
  for (int d = 1; d <= days; ++d) out.push_back(d * slots_per_day() - 1);
  return out;
}

void TimeGrid::validate() const {
  auto check = [](int v, const char* name) {
    if (v < 1)
      throw ValidationError(std::string("TimeGrid: ") + name +
                            " must be >= 1, got " + std::to_string(v));
  };
  check(slot_minutes, "slot_minutes");
  check(slots_per_mtu, "slots_per_mtu");
  check(mtus_per_day, "mtus_per_day");
  check(days, "days");
}

TimeGrid build_time_grid(int slot_minutes, int slots_per_mtu, int mtus_per_day,
                         int days) {
  TimeGrid grid{slot_minutes, slots_per_mtu, mtus_per_day, days};
  grid.validate();
  return grid;
}

}  // namespace cfe
