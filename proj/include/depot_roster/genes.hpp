#pragma once

#include <random>

#include "depot_roster/model.hpp"

namespace depot_roster {

// A worker-day gene is categorical: off, or one shift index.
inline constexpr int kOff = -1;

/// The shift worker s holds on day d, or kOff. Assumes at most one shift.
inline int gene(const RegularRoster& roster, int d, int s) noexcept {
  for (int t = 0; t < roster.shifts(); ++t) {
    if (roster.at(d, t, s)) return t;
  }
  return kOff;
}

inline void set_gene(RegularRoster& roster, int d, int s, int state) noexcept {
  roster.clear_day(d, s);
  if (state != kOff) roster.set(d, state, s);
}

/// Uniform over off and every shift (shifts + 1 outcomes).
template <std::uniform_random_bit_generator Urbg>
int sample_gene(int shifts, Urbg& rng) {
  std::uniform_int_distribution<int> pick(kOff, shifts - 1);
  return pick(rng);
}

/// Uniform over the shifts + 1 states other than `current`.
template <std::uniform_random_bit_generator Urbg>
int sample_other_gene(int current, int shifts, Urbg& rng) {
  std::uniform_int_distribution<int> pick(kOff, shifts - 2);
  const int g = pick(rng);
  return g >= current ? g + 1 : g;
}

/// Unrepaired random roster: each worker-day is off with probability 0.5,
/// otherwise a uniformly chosen shift.
template <std::uniform_random_bit_generator Urbg>
RegularRoster sample_roster(const ProblemInstance& inst, Urbg& rng) {
  auto roster = RegularRoster::for_instance(inst);
  std::bernoulli_distribution off(0.5);
  std::uniform_int_distribution<int> shift(0, inst.shift_count() - 1);
  for (int d = 0; d < inst.days; ++d) {
    for (int s = 0; s < inst.regular_pool; ++s) {
      if (!off(rng)) roster.set(d, shift(rng), s);
    }
  }
  return roster;
}

}  // namespace depot_roster
