#pragma once

#include <random>
#include <vector>

#include "depot_roster/evaluator.hpp"
#include "depot_roster/model.hpp"

namespace depot_roster {

// Every repair stage only clears assignments, so a later stage can never
// re-violate what an earlier stage fixed. Each stage is the identity on input
// that already satisfies its constraint, and then draws nothing from the rng.

/// Keeps one uniformly chosen shift for every worker-day holding several.
template <std::uniform_random_bit_generator Urbg>
void repair_one_shift_per_day(RegularRoster& roster, Urbg& rng) {
  for (int d = 0; d < roster.days(); ++d) {
    for (int s = 0; s < roster.workers(); ++s) {
      const int held = roster.shifts_worked(d, s);
      if (held <= 1) continue;
      int keep = std::uniform_int_distribution<int>(0, held - 1)(rng);
      for (int t = 0; t < roster.shifts(); ++t) {
        if (!roster.at(d, t, s)) continue;
        if (keep-- != 0) roster.set(d, t, s, false);
      }
    }
  }
}

/// Forward scan per worker: the 8th day of a working run is cleared and the
/// run restarts, so runs never exceed seven days.
inline void repair_consecutive_days(RegularRoster& roster) {
  for (int s = 0; s < roster.workers(); ++s) {
    int run = 0;
    for (int d = 0; d < roster.days(); ++d) {
      if (!roster.works(d, s)) {
        run = 0;
        continue;
      }
      if (++run == kMaxConsecutiveDays + 1) {
        roster.clear_day(d, s);
        run = 0;
      }
    }
  }
}

/// Removes uniformly random working days from every worker above
/// floor(attendance_cap * D) until the count equals the cap.
template <std::uniform_random_bit_generator Urbg>
void repair_attendance_cap(RegularRoster& roster, const ProblemInstance& inst, Urbg& rng) {
  const int cap = attendance_cap_days(inst.params, roster.days());
  std::vector<int> worked;
  for (int s = 0; s < roster.workers(); ++s) {
    worked.clear();
    for (int d = 0; d < roster.days(); ++d) {
      if (roster.works(d, s)) worked.push_back(d);
    }
    while (static_cast<int>(worked.size()) > cap) {
      const auto i = std::uniform_int_distribution<std::size_t>(0, worked.size() - 1)(rng);
      roster.clear_day(worked[i], s);
      worked.erase(worked.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }
}

/// One shift per day, then the consecutive-day limit, then the attendance cap.
template <std::uniform_random_bit_generator Urbg>
void repair_all(RegularRoster& roster, const ProblemInstance& inst, Urbg& rng) {
  repair_one_shift_per_day(roster, rng);
  repair_consecutive_days(roster);
  repair_attendance_cap(roster, inst, rng);
}

template <std::uniform_random_bit_generator Urbg>
RegularRoster repaired(RegularRoster roster, const ProblemInstance& inst, Urbg& rng) {
  repair_all(roster, inst, rng);
  return roster;
}

}  // namespace depot_roster
