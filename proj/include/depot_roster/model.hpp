#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "depot_roster/errors.hpp"

namespace depot_roster {

inline constexpr int kHoursPerDay = 24;

/// Half-open interval [start, end) of whole hours within one day.
struct ShiftInterval {
  int start = 0;
  int end = 0;

  int length() const noexcept { return end - start; }
  bool contains(int hour) const noexcept { return start <= hour && hour < end; }

  friend bool operator==(const ShiftInterval&, const ShiftInterval&) = default;
};

/// The daily shift pattern. Shifts may overlap; every hour of the day must be
/// covered by at least one shift so that any demand can be staffed.
class ShiftCatalog {
 public:
  /// The depot's six 8-hour shifts.
  ShiftCatalog()
      : ShiftCatalog({{0, 8}, {5, 13}, {8, 16}, {12, 20}, {14, 22}, {16, 24}}) {}

  explicit ShiftCatalog(std::vector<ShiftInterval> shifts) : shifts_(std::move(shifts)) {
    if (shifts_.empty()) throw contract_error("shift catalog is empty");
    for (std::size_t t = 0; t < shifts_.size(); ++t) {
      const auto& iv = shifts_[t];
      if (iv.start < 0 || iv.end > kHoursPerDay || iv.start >= iv.end) {
        throw contract_error("shift " + std::to_string(t) + " is not a valid interval within the day");
      }
    }
    for (int h = 0; h < kHoursPerDay; ++h) {
      for (int t = 0; t < size(); ++t) {
        if (shifts_[t].contains(h)) covering_[h].push_back(t);
      }
      if (covering_[h].empty()) {
        throw contract_error("hour " + std::to_string(h) + " is not covered by any shift");
      }
      // Latest end wins; strict comparison keeps the lowest index on ties.
      int pick = covering_[h].front();
      for (int t : covering_[h]) {
        if (shifts_[t].end > shifts_[pick].end) pick = t;
      }
      top_up_shift_[h] = pick;
    }
  }

  static const ShiftCatalog& standard() {
    static const ShiftCatalog catalog;
    return catalog;
  }

  int size() const noexcept { return static_cast<int>(shifts_.size()); }
  const std::vector<ShiftInterval>& shifts() const noexcept { return shifts_; }

  const ShiftInterval& operator[](int shift_id) const {
    if (shift_id < 0 || shift_id >= size()) {
      throw std::out_of_range("shift id " + std::to_string(shift_id) + " out of range");
    }
    return shifts_[shift_id];
  }

  /// Hours h with start <= h < end, ascending.
  std::vector<int> shift_hours(int shift_id) const {
    const auto& iv = (*this)[shift_id];
    std::vector<int> hours(iv.length());
    std::iota(hours.begin(), hours.end(), iv.start);
    return hours;
  }

  /// Indices of all shifts whose interval contains `hour`, ascending.
  const std::vector<int>& shifts_covering(int hour) const {
    if (hour < 0 || hour >= kHoursPerDay) {
      throw std::out_of_range("hour " + std::to_string(hour) + " out of range");
    }
    return covering_[hour];
  }

  /// Covering shift that ends latest (lowest index on ties). The temp decoder
  /// places extra staff here so the addition reaches as far forward as possible.
  int top_up_shift(int hour) const { return top_up_shift_.at(hour); }

  friend bool operator==(const ShiftCatalog& a, const ShiftCatalog& b) { return a.shifts_ == b.shifts_; }

 private:
  std::vector<ShiftInterval> shifts_;
  std::array<std::vector<int>, kHoursPerDay> covering_{};
  std::array<int, kHoursPerDay> top_up_shift_{};
};

/// Throughput per worker-hour and the attendance ceiling for regular staff.
/// Rates are whole parcels/hour so coverage arithmetic stays exact.
struct EfficiencyParams {
  int regular_rate = 25;
  int temp_rate = 20;
  double attendance_cap = 0.85;

  friend bool operator==(const EfficiencyParams&, const EfficiencyParams&) = default;
};

/// Parcels per hour, one row per day, 24 columns per row.
using DemandMatrix = std::vector<std::vector<int>>;

struct ProblemInstance {
  int days = 30;
  int regular_pool = 200;
  ShiftCatalog catalog;
  EfficiencyParams params;
  DemandMatrix demand;

  int shift_count() const noexcept { return catalog.size(); }

  friend bool operator==(const ProblemInstance&, const ProblemInstance&) = default;
};

/// Instance with the standard catalog, default efficiencies and zero demand.
inline ProblemInstance make_instance(int days, int regular_pool) {
  ProblemInstance inst;
  inst.days = days;
  inst.regular_pool = regular_pool;
  inst.demand.assign(std::max(days, 0), std::vector<int>(kHoursPerDay, 0));
  return inst;
}

/// Maximum working days per regular worker over the horizon: floor(cap * D).
inline int attendance_cap_days(const EfficiencyParams& params, int days) {
  // The epsilon absorbs binary representation error, e.g. 0.85 * 20 = 16.999...
  return static_cast<int>(std::floor(params.attendance_cap * days + 1e-9));
}

/// Reports every problem found; an empty list means the instance is usable.
inline std::vector<std::string> validate_instance(const ProblemInstance& inst,
                                                  bool allow_custom_catalog = false) {
  std::vector<std::string> out;
  if (inst.days < 1) out.push_back("days must be at least 1, got " + std::to_string(inst.days));
  if (inst.regular_pool < 0) {
    out.push_back("regular_pool must be non-negative, got " + std::to_string(inst.regular_pool));
  }
  const auto& p = inst.params;
  if (p.regular_rate <= 0) out.push_back("regular_rate must be positive");
  if (p.temp_rate <= 0) out.push_back("temp_rate must be positive");
  if (!(p.attendance_cap > 0.0 && p.attendance_cap <= 1.0)) {
    out.push_back("attendance_cap must lie in (0, 1]");
  }
  if (!allow_custom_catalog && !(inst.catalog == ShiftCatalog::standard())) {
    out.push_back("non-default catalog: shifts differ from the standard six-shift pattern");
  }
  if (static_cast<int>(inst.demand.size()) != inst.days) {
    out.push_back("demand row count: expected " + std::to_string(inst.days) + ", got " +
                  std::to_string(inst.demand.size()));
  }
  for (std::size_t d = 0; d < inst.demand.size(); ++d) {
    const auto& row = inst.demand[d];
    if (row.size() != kHoursPerDay) {
      out.push_back("demand row length: day " + std::to_string(d) + " has " +
                    std::to_string(row.size()) + " values, expected 24");
    }
    for (std::size_t h = 0; h < row.size(); ++h) {
      if (row[h] < 0) {
        out.push_back("negative demand at day " + std::to_string(d) + " hour " + std::to_string(h) +
                      ": " + std::to_string(row[h]));
      }
    }
  }
  return out;
}

/// Binary assignment tensor x[day][shift][worker]. Stored day-major so a whole
/// day (the unit exchanged by crossover) is one contiguous block.
class RegularRoster {
 public:
  RegularRoster() = default;
  RegularRoster(int days, int shifts, int workers)
      : days_(days), shifts_(shifts), workers_(workers) {
    if (days < 0 || shifts < 0 || workers < 0) throw contract_error("negative roster dimension");
    bits_.assign(static_cast<std::size_t>(days) * shifts * workers, 0);
  }

  static RegularRoster for_instance(const ProblemInstance& inst) {
    return RegularRoster(inst.days, inst.shift_count(), inst.regular_pool);
  }

  int days() const noexcept { return days_; }
  int shifts() const noexcept { return shifts_; }
  int workers() const noexcept { return workers_; }

  bool at(int d, int t, int s) const noexcept { return bits_[index(d, t, s)] != 0; }
  void set(int d, int t, int s, bool on = true) noexcept { bits_[index(d, t, s)] = on ? 1 : 0; }

  std::span<const std::uint8_t> day(int d) const noexcept {
    return {bits_.data() + day_offset(d), day_size()};
  }
  std::span<std::uint8_t> day(int d) noexcept { return {bits_.data() + day_offset(d), day_size()}; }

  /// Number of shifts worker s holds on day d.
  int shifts_worked(int d, int s) const noexcept {
    int n = 0;
    for (int t = 0; t < shifts_; ++t) n += bits_[index(d, t, s)];
    return n;
  }
  bool works(int d, int s) const noexcept {
    for (int t = 0; t < shifts_; ++t) {
      if (bits_[index(d, t, s)]) return true;
    }
    return false;
  }
  void clear_day(int d, int s) noexcept {
    for (int t = 0; t < shifts_; ++t) bits_[index(d, t, s)] = 0;
  }

  long person_days() const noexcept {
    return std::accumulate(bits_.begin(), bits_.end(), 0L);
  }

  bool matches(const ProblemInstance& inst) const noexcept {
    return days_ == inst.days && shifts_ == inst.shift_count() && workers_ == inst.regular_pool;
  }

  std::span<const std::uint8_t> bits() const noexcept { return bits_; }

  friend bool operator==(const RegularRoster&, const RegularRoster&) = default;

 private:
  std::size_t index(int d, int t, int s) const noexcept {
    assert(d >= 0 && d < days_ && t >= 0 && t < shifts_ && s >= 0 && s < workers_);
    return (static_cast<std::size_t>(d) * shifts_ + t) * workers_ + s;
  }
  std::size_t day_size() const noexcept { return static_cast<std::size_t>(shifts_) * workers_; }
  std::size_t day_offset(int d) const noexcept {
    assert(d >= 0 && d < days_);
    return static_cast<std::size_t>(d) * day_size();
  }

  int days_ = 0;
  int shifts_ = 0;
  int workers_ = 0;
  std::vector<std::uint8_t> bits_;
};

/// Temporary hires y[day][shift], each a non-negative count.
class TempPlan {
 public:
  TempPlan() = default;
  TempPlan(int days, int shifts) : days_(days), shifts_(shifts) {
    if (days < 0 || shifts < 0) throw contract_error("negative temp plan dimension");
    counts_.assign(static_cast<std::size_t>(days) * shifts, 0);
  }

  int days() const noexcept { return days_; }
  int shifts() const noexcept { return shifts_; }

  int at(int d, int t) const noexcept { return counts_[index(d, t)]; }
  void set(int d, int t, int count) {
    if (count < 0) throw contract_error("temp count must be non-negative");
    counts_[index(d, t)] = count;
  }
  void add(int d, int t, int count) { set(d, t, at(d, t) + count); }

  long total() const noexcept { return std::accumulate(counts_.begin(), counts_.end(), 0L); }

  friend bool operator==(const TempPlan&, const TempPlan&) = default;

 private:
  std::size_t index(int d, int t) const noexcept {
    assert(d >= 0 && d < days_ && t >= 0 && t < shifts_);
    return static_cast<std::size_t>(d) * shifts_ + t;
  }

  int days_ = 0;
  int shifts_ = 0;
  std::vector<int> counts_;
};

/// A complete schedule. `objective` is the person-day total and must equal
/// roster.person_days() + temps.total() for a consistent solution.
struct Solution {
  RegularRoster roster;
  TempPlan temps;
  long objective = 0;

  friend bool operator==(const Solution&, const Solution&) = default;
};

}  // namespace depot_roster
