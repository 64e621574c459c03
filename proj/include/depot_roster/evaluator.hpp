#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "depot_roster/model.hpp"

namespace depot_roster {

/// Parcels per hour, indexed [day][hour].
using HourlyMatrix = std::vector<std::array<long, kHoursPerDay>>;

struct CoverageReport {
  HourlyMatrix capacity;
  HourlyMatrix shortfall;
};

namespace detail {

inline void require_roster_matches(const RegularRoster& roster, const ProblemInstance& inst) {
  if (!roster.matches(inst)) {
    throw contract_error("roster dimensions " + std::to_string(roster.days()) + "x" +
                         std::to_string(roster.shifts()) + "x" + std::to_string(roster.workers()) +
                         " do not match instance " + std::to_string(inst.days) + "x" +
                         std::to_string(inst.shift_count()) + "x" + std::to_string(inst.regular_pool));
  }
}

inline void require_demand_shape(const ProblemInstance& inst) {
  if (static_cast<int>(inst.demand.size()) != inst.days) {
    throw contract_error("demand has " + std::to_string(inst.demand.size()) + " rows for " +
                         std::to_string(inst.days) + " days");
  }
  for (const auto& row : inst.demand) {
    if (row.size() != kHoursPerDay) throw contract_error("demand row does not have 24 hourly values");
  }
}

// Regulars on each shift of day d.
inline std::vector<int> shift_headcount(const RegularRoster& roster, int d) {
  std::vector<int> heads(roster.shifts(), 0);
  const auto day = roster.day(d);
  const auto workers = static_cast<std::size_t>(roster.workers());
  for (int t = 0; t < roster.shifts(); ++t) {
    const auto row = day.subspan(t * workers, workers);
    for (auto bit : row) heads[t] += bit;
  }
  return heads;
}

}  // namespace detail

/// capacity[d][h] = regular_rate * (regulars on shifts covering h on day d).
inline HourlyMatrix regular_capacity(const RegularRoster& roster, const ProblemInstance& inst) {
  detail::require_roster_matches(roster, inst);
  HourlyMatrix cap(inst.days);
  for (int d = 0; d < inst.days; ++d) {
    const auto heads = detail::shift_headcount(roster, d);
    for (int h = 0; h < kHoursPerDay; ++h) {
      long n = 0;
      for (int t : inst.catalog.shifts_covering(h)) n += heads[t];
      cap[d][h] = n * inst.params.regular_rate;
    }
  }
  return cap;
}

/// Capacity of regulars plus temps, and the remaining shortfall against demand.
inline CoverageReport coverage(const RegularRoster& roster, const TempPlan& temps,
                               const ProblemInstance& inst) {
  detail::require_demand_shape(inst);
  if (temps.days() != inst.days || temps.shifts() != inst.shift_count()) {
    throw contract_error("temp plan dimensions do not match instance");
  }
  CoverageReport report{regular_capacity(roster, inst), HourlyMatrix(inst.days)};
  for (int d = 0; d < inst.days; ++d) {
    for (int h = 0; h < kHoursPerDay; ++h) {
      long temp_heads = 0;
      for (int t : inst.catalog.shifts_covering(h)) temp_heads += temps.at(d, t);
      report.capacity[d][h] += temp_heads * inst.params.temp_rate;
      report.shortfall[d][h] = std::max(0L, inst.demand[d][h] - report.capacity[d][h]);
    }
  }
  return report;
}

/// Derives the temporary hires needed to cover every hour.
///
/// Hours are scanned in ascending order. When hour h is short by w parcels,
/// ceil(w / temp_rate) temps join the covering shift that ends latest (lowest
/// index on ties), and their capacity is credited to every hour of that shift
/// before the scan continues. The result always covers demand; it is not
/// guaranteed to use the fewest possible temps.
inline TempPlan decode_temp_plan(const RegularRoster& roster, const ProblemInstance& inst) {
  detail::require_roster_matches(roster, inst);
  detail::require_demand_shape(inst);
  const auto& catalog = inst.catalog;
  const long regular_rate = inst.params.regular_rate;
  const long temp_rate = inst.params.temp_rate;

  TempPlan plan(inst.days, catalog.size());
  std::array<long, kHoursPerDay> cap{};
  for (int d = 0; d < inst.days; ++d) {
    const auto heads = detail::shift_headcount(roster, d);
    for (int h = 0; h < kHoursPerDay; ++h) {
      long n = 0;
      for (int t : catalog.shifts_covering(h)) n += heads[t];
      cap[h] = n * regular_rate;
    }
    for (int h = 0; h < kHoursPerDay; ++h) {
      const long shortfall = inst.demand[d][h] - cap[h];
      if (shortfall <= 0) continue;
      const long hires = (shortfall + temp_rate - 1) / temp_rate;
      const int t = catalog.top_up_shift(h);
      plan.add(d, t, static_cast<int>(hires));
      const auto& iv = catalog[t];
      for (int k = iv.start; k < iv.end; ++k) cap[k] += hires * temp_rate;
    }
  }
  return plan;
}

/// Person-days: every roster entry plus every temporary hire.
inline long objective(const RegularRoster& roster, const TempPlan& temps) {
  if (roster.days() != temps.days() || roster.shifts() != temps.shifts()) {
    throw contract_error("roster and temp plan dimensions differ");
  }
  return roster.person_days() + temps.total();
}

/// Decode plus objective: one fitness evaluation.
inline Solution evaluate(RegularRoster roster, const ProblemInstance& inst) {
  Solution sol;
  sol.temps = decode_temp_plan(roster, inst);
  sol.objective = objective(roster, sol.temps);
  sol.roster = std::move(roster);
  return sol;
}

enum class ViolationKind {
  coverage,          // (a) capacity below demand
  multiple_shifts,   // (b) more than one shift in a day
  consecutive_days,  // (c) eight or more consecutive working days
  attendance,        // (d) working days above the attendance cap
  objective,         // (e) stored objective inconsistent with the schedule
  dimensions,
};

inline char violation_code(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::coverage: return 'a';
    case ViolationKind::multiple_shifts: return 'b';
    case ViolationKind::consecutive_days: return 'c';
    case ViolationKind::attendance: return 'd';
    case ViolationKind::objective: return 'e';
    case ViolationKind::dimensions: return 'x';
  }
  return '?';
}

/// One failed check. Coordinates that do not apply are -1.
struct Violation {
  ViolationKind kind;
  int day = -1;
  int hour = -1;
  int worker = -1;
  std::string message;
};

inline constexpr int kMaxConsecutiveDays = 7;

/// Runs checks (a) through (e) in order and returns every violation found.
inline std::vector<Violation> check_feasibility(const Solution& sol, const ProblemInstance& inst) {
  std::vector<Violation> out;
  if (!sol.roster.matches(inst) || sol.temps.days() != inst.days ||
      sol.temps.shifts() != inst.shift_count()) {
    out.push_back({ViolationKind::dimensions, -1, -1, -1, "solution dimensions do not match instance"});
    return out;
  }
  const auto& roster = sol.roster;

  const auto cov = coverage(roster, sol.temps, inst);
  for (int d = 0; d < inst.days; ++d) {
    for (int h = 0; h < kHoursPerDay; ++h) {
      if (cov.shortfall[d][h] > 0) {
        out.push_back({ViolationKind::coverage, d, h, -1,
                       "capacity " + std::to_string(cov.capacity[d][h]) + " below demand " +
                           std::to_string(inst.demand[d][h])});
      }
    }
  }

  for (int d = 0; d < inst.days; ++d) {
    for (int s = 0; s < inst.regular_pool; ++s) {
      const int n = roster.shifts_worked(d, s);
      if (n > 1) {
        out.push_back({ViolationKind::multiple_shifts, d, -1, s,
                       "assigned " + std::to_string(n) + " shifts in one day"});
      }
    }
  }

  for (int s = 0; s < inst.regular_pool; ++s) {
    int run = 0;
    for (int d = 0; d < inst.days; ++d) {
      run = roster.works(d, s) ? run + 1 : 0;
      // Report each over-long run once, at its first day.
      if (run == kMaxConsecutiveDays + 1) {
        const int start = d - kMaxConsecutiveDays;
        out.push_back({ViolationKind::consecutive_days, start, -1, s,
                       "works more than 7 consecutive days starting day " + std::to_string(start)});
      }
    }
  }

  const int cap = attendance_cap_days(inst.params, inst.days);
  for (int s = 0; s < inst.regular_pool; ++s) {
    int worked = 0;
    for (int d = 0; d < inst.days; ++d) worked += roster.works(d, s);
    if (worked > cap) {
      out.push_back({ViolationKind::attendance, -1, -1, s,
                     "works " + std::to_string(worked) + " days, cap is " + std::to_string(cap)});
    }
  }

  const long expected = objective(roster, sol.temps);
  if (sol.objective != expected) {
    out.push_back({ViolationKind::objective, -1, -1, -1,
                   "objective field " + std::to_string(sol.objective) + " but schedule has " +
                       std::to_string(expected) + " person-days"});
  }
  return out;
}

inline std::string describe(const Violation& v) {
  std::string s = "(";
  s += violation_code(v.kind);
  s += ")";
  if (v.day >= 0) s += " day " + std::to_string(v.day);
  if (v.hour >= 0) s += " hour " + std::to_string(v.hour);
  if (v.worker >= 0) s += " worker " + std::to_string(v.worker);
  s += ": " + v.message;
  return s;
}

}  // namespace depot_roster
