#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>
#include <thread>
#include <vector>

#include "depot_roster/evaluator.hpp"
#include "depot_roster/genes.hpp"
#include "depot_roster/model.hpp"

namespace depot_roster {

// The oracle searches the same space the metaheuristics search: every
// roster that satisfies checks (b)-(d), with temps fixed by the greedy
// decoder. Its optimum is therefore a bound for GA/SA, not the optimum of
// the joint integer program over rosters and temp counts.

struct OracleResult {
  long objective = 0;
  Solution solution;           // lexicographically first minimiser
  std::uint64_t states = 0;    // rosters enumerated
  std::uint64_t feasible = 0;  // rosters passing (b)-(d)
};

inline constexpr double kDefaultOracleGuard = 1e7;

/// (shifts + 1)^(days * workers), as a double so that huge spaces do not overflow.
inline double oracle_state_count(const ProblemInstance& inst) {
  return std::pow(static_cast<double>(inst.shift_count() + 1),
                  static_cast<double>(inst.days) * inst.regular_pool);
}

namespace detail {

inline bool satisfies_day_limits(const RegularRoster& roster, int attendance_cap) {
  for (int s = 0; s < roster.workers(); ++s) {
    int run = 0;
    int worked = 0;
    for (int d = 0; d < roster.days(); ++d) {
      if (roster.works(d, s)) {
        ++worked;
        if (++run > kMaxConsecutiveDays) return false;
      } else {
        run = 0;
      }
    }
    if (worked > attendance_cap) return false;
  }
  return true;
}

struct OracleBest {
  long objective = std::numeric_limits<long>::max();
  std::uint64_t index = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t feasible = 0;
};

// Gene g = d * S + s; gene 0 is the most significant digit, state order is
// off, shift 0, shift 1, ...
inline void set_from_index(RegularRoster& roster, std::vector<int>& digits, std::uint64_t index,
                           int base) {
  const int workers = roster.workers();
  for (auto g = static_cast<int>(digits.size()) - 1; g >= 0; --g) {
    digits[g] = static_cast<int>(index % base);
    index /= base;
    set_gene(roster, g / workers, g % workers, digits[g] - 1);
  }
}

inline OracleBest scan_range(const ProblemInstance& inst, std::uint64_t lo, std::uint64_t hi) {
  OracleBest best;
  if (lo >= hi) return best;
  const int base = inst.shift_count() + 1;
  const int workers = inst.regular_pool;
  const int cap = attendance_cap_days(inst.params, inst.days);
  auto roster = RegularRoster::for_instance(inst);
  std::vector<int> digits(static_cast<std::size_t>(inst.days) * workers, 0);
  set_from_index(roster, digits, lo, base);

  for (std::uint64_t idx = lo; idx < hi; ++idx) {
    if (satisfies_day_limits(roster, cap)) {
      ++best.feasible;
      const long obj = objective(roster, decode_temp_plan(roster, inst));
      if (obj < best.objective) {
        best.objective = obj;
        best.index = idx;
      }
    }
    // Odometer increment from the least significant gene.
    for (auto g = static_cast<int>(digits.size()) - 1; g >= 0; --g) {
      if (++digits[g] == base) {
        digits[g] = 0;
        set_gene(roster, g / workers, g % workers, kOff);
      } else {
        set_gene(roster, g / workers, g % workers, digits[g] - 1);
        break;
      }
    }
  }
  return best;
}

}  // namespace detail

/// Exhaustive minimum of the decoded objective. Refuses instances whose
/// state count exceeds `guard_limit`. The result does not depend on `threads`.
inline OracleResult enumerate_optimal(const ProblemInstance& inst,
                                      double guard_limit = kDefaultOracleGuard, int threads = 1) {
  const double states = oracle_state_count(inst);
  if (states > guard_limit) {
    std::ostringstream msg;
    msg << "search space of " << states << " rosters exceeds guard limit " << guard_limit;
    throw search_space_error(msg.str(), states);
  }
  const auto total = static_cast<std::uint64_t>(std::llround(states));
  const auto chunks = static_cast<std::uint64_t>(std::max(threads, 1));

  std::vector<detail::OracleBest> partial(chunks);
  auto bounds = [&](std::uint64_t c) { return total / chunks * c + std::min(c, total % chunks); };
  if (chunks == 1) {
    partial[0] = detail::scan_range(inst, 0, total);
  } else {
    std::vector<std::jthread> pool;
    for (std::uint64_t c = 0; c < chunks; ++c) {
      pool.emplace_back([&, c] { partial[c] = detail::scan_range(inst, bounds(c), bounds(c + 1)); });
    }
  }

  detail::OracleBest best;
  for (const auto& p : partial) {
    best.feasible += p.feasible;
    if (p.objective < best.objective || (p.objective == best.objective && p.index < best.index)) {
      best.objective = p.objective;
      best.index = p.index;
    }
  }

  // The all-off roster is always feasible, so a minimiser exists.
  auto roster = RegularRoster::for_instance(inst);
  std::vector<int> digits(static_cast<std::size_t>(inst.days) * inst.regular_pool, 0);
  detail::set_from_index(roster, digits, best.index, inst.shift_count() + 1);

  OracleResult result;
  result.solution = evaluate(std::move(roster), inst);
  result.objective = result.solution.objective;
  result.states = total;
  result.feasible = best.feasible;
  return result;
}

}  // namespace depot_roster
