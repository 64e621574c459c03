#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "depot_roster/evaluator.hpp"
#include "depot_roster/genes.hpp"
#include "depot_roster/model.hpp"
#include "depot_roster/repair.hpp"
#include "depot_roster/trace.hpp"

namespace depot_roster {

struct SaConfig {
  // Unset: calibrated so the median uphill move among `calibration_samples`
  // neighbours of the start solution is accepted with `target_acceptance`.
  std::optional<double> initial_temp;
  double alpha = 0.95;
  int steps_per_temperature = 50;
  // Unset: 1e-3 * initial temperature.
  std::optional<double> min_temp;
  long max_evaluations = 50L * 300L;
  std::uint64_t seed = 0;
  int calibration_samples = 100;
  double target_acceptance = 0.8;
  bool wall_clock = false;

  void validate() const {
    if (!(alpha > 0.0 && alpha < 1.0)) throw contract_error("alpha must lie in (0, 1)");
    if (steps_per_temperature < 1) throw contract_error("steps_per_temperature must be at least 1");
    if (max_evaluations < 1) throw contract_error("max_evaluations must be at least 1");
    if (initial_temp && !(*initial_temp > 0.0)) throw contract_error("initial_temp must be positive");
    if (min_temp && !(*min_temp > 0.0)) throw contract_error("min_temp must be positive");
    if (calibration_samples < 0) throw contract_error("calibration_samples must be non-negative");
    if (!(target_acceptance > 0.0 && target_acceptance < 1.0)) {
      throw contract_error("target_acceptance must lie in (0, 1)");
    }
  }
};

inline constexpr double kMinTempRatio = 1e-3;

/// Resamples one uniformly chosen worker-day to a different state, repairs,
/// and evaluates.
template <std::uniform_random_bit_generator Urbg>
Solution neighbor(const Solution& current, const ProblemInstance& inst, Urbg& rng) {
  RegularRoster roster = current.roster;
  if (inst.days > 0 && inst.regular_pool > 0) {
    const int d = std::uniform_int_distribution<int>(0, inst.days - 1)(rng);
    const int s = std::uniform_int_distribution<int>(0, inst.regular_pool - 1)(rng);
    set_gene(roster, d, s, sample_other_gene(gene(roster, d, s), roster.shifts(), rng));
    repair_all(roster, inst, rng);
  }
  return evaluate(std::move(roster), inst);
}

/// Metropolis rule: 1 for non-worsening moves, exp(-delta / temp) otherwise.
inline double acceptance_probability(double delta, double temp) {
  if (!(temp > 0.0)) throw contract_error("temperature must be positive");
  return delta <= 0.0 ? 1.0 : std::exp(-delta / temp);
}

template <std::uniform_random_bit_generator Urbg>
bool accept(double delta, double temp, Urbg& rng) {
  const double p = acceptance_probability(delta, temp);
  if (p >= 1.0) return true;
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

/// temp_{k+1} = alpha * temp_k.
class GeometricCooling {
 public:
  GeometricCooling(double initial, double alpha) : temp_(initial), alpha_(alpha) {}

  double temperature() const noexcept { return temp_; }
  void cool() noexcept { temp_ *= alpha_; }

 private:
  double temp_;
  double alpha_;
};

/// Temperature at which the median uphill delta among sampled neighbours is
/// accepted with probability `target`. Falls back to 1 if no sample is uphill.
/// Each sample costs one evaluation, added to `evaluations`.
template <std::uniform_random_bit_generator Urbg>
double calibrate_initial_temp(const Solution& start, const ProblemInstance& inst, int samples,
                              double target, Urbg& rng, long& evaluations) {
  std::vector<long> uphill;
  for (int i = 0; i < samples; ++i) {
    const auto cand = neighbor(start, inst, rng);
    ++evaluations;
    if (cand.objective > start.objective) uphill.push_back(cand.objective - start.objective);
  }
  if (uphill.empty()) return 1.0;
  const auto mid = uphill.begin() + static_cast<std::ptrdiff_t>(uphill.size() / 2);
  std::nth_element(uphill.begin(), mid, uphill.end());
  double median = static_cast<double>(*mid);
  if (uphill.size() % 2 == 0) {
    median = (median + static_cast<double>(*std::max_element(uphill.begin(), mid))) / 2.0;
  }
  return -median / std::log(target);
}

struct SaResult {
  Solution best;
  ConvergenceTrace trace;  // record 0 is the start solution, then one per step
  long evaluations = 0;
  double initial_temp = 0.0;
  double final_temp = 0.0;  // temperature of the last plateau that ran
  long plateaus = 0;
};

/// Number of plateaus until geometric cooling drops below kMinTempRatio of the
/// start temperature.
inline long sa_plateau_count(double alpha) {
  return static_cast<long>(std::ceil(std::log(kMinTempRatio) / std::log(alpha)));
}

inline SaResult run_sa(const ProblemInstance& inst, const SaConfig& cfg) {
  cfg.validate();
  const RunClock clock(cfg.wall_clock);
  std::mt19937_64 rng(cfg.seed);

  SaResult result;
  auto start = sample_roster(inst, rng);
  repair_all(start, inst, rng);
  Solution current = evaluate(std::move(start), inst);
  result.evaluations = 1;
  result.best = current;
  result.trace.push_back({0, result.evaluations, result.best.objective, clock.elapsed_ms()});

  const long budget = cfg.max_evaluations;
  if (result.evaluations >= budget) return result;

  if (cfg.initial_temp) {
    result.initial_temp = *cfg.initial_temp;
  } else {
    const int samples =
        static_cast<int>(std::min<long>(cfg.calibration_samples, budget - result.evaluations));
    result.initial_temp = calibrate_initial_temp(current, inst, samples, cfg.target_acceptance, rng,
                                                 result.evaluations);
  }
  const double floor_temp = cfg.min_temp.value_or(kMinTempRatio * result.initial_temp);

  GeometricCooling cooling(result.initial_temp, cfg.alpha);
  long step = 0;
  while (cooling.temperature() >= floor_temp && result.evaluations < budget) {
    const double temp = cooling.temperature();
    for (int k = 0; k < cfg.steps_per_temperature && result.evaluations < budget; ++k) {
      auto cand = neighbor(current, inst, rng);
      ++result.evaluations;
      ++step;
      const double delta = static_cast<double>(cand.objective - current.objective);
      if (accept(delta, temp, rng)) current = std::move(cand);
      if (current.objective < result.best.objective) result.best = current;
      result.trace.push_back({step, result.evaluations, result.best.objective, clock.elapsed_ms()});
    }
    result.final_temp = temp;
    ++result.plateaus;
    cooling.cool();
  }
  return result;
}

}  // namespace depot_roster
