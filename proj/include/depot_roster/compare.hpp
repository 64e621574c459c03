#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <ostream>
#include <thread>
#include <vector>

#include "depot_roster/ga.hpp"
#include "depot_roster/model.hpp"
#include "depot_roster/sa.hpp"

namespace depot_roster {

struct ComparisonConfig {
  long budget = 15000;  // minimum evaluations granted to each algorithm
  int runs = 10;
  std::uint64_t base_seed = 1;  // run i uses base_seed + i
  GaConfig ga;                  // generations and seed are overwritten per run
  SaConfig sa;                  // max_evaluations and seed are overwritten per run
  // Off: SA keeps its own schedule and may stop at min_temp before the budget
  // is spent. On: steps per plateau are raised so cooling spans the budget.
  bool fit_sa_schedule = false;
  int jobs = 1;
};

struct RunPair {
  std::uint64_t seed = 0;
  long budget = 0;  // evaluations granted to each algorithm
  GaResult ga;
  SaResult sa;
};

struct ComparisonReport {
  long budget = 0;
  std::vector<RunPair> runs;
  double median_ga = 0.0;
  double median_sa = 0.0;
};

/// Smallest generation count whose evaluation total reaches `budget`.
inline int generations_for_budget(long budget, int population, int elites) {
  const long remaining = budget - population;
  if (remaining <= 0) return 0;
  const long brood = population - elites;
  return static_cast<int>((remaining + brood - 1) / brood);
}

inline double median_of(std::vector<long> values) {
  if (values.empty()) return 0.0;
  std::ranges::sort(values);
  const auto n = values.size();
  return n % 2 == 1 ? static_cast<double>(values[n / 2])
                    : (static_cast<double>(values[n / 2 - 1]) + static_cast<double>(values[n / 2])) / 2.0;
}

/// GA and SA on the same seed. The GA runs enough generations to reach the
/// budget; the SA may then use at most as many evaluations as the GA spent.
inline RunPair run_pair(const ProblemInstance& inst, const ComparisonConfig& cfg, std::uint64_t seed) {
  RunPair pair;
  pair.seed = seed;

  GaConfig ga = cfg.ga;
  ga.seed = seed;
  ga.generations = generations_for_budget(cfg.budget, ga.population_size, ga.elite_count);
  pair.ga = run_ga(inst, ga);
  pair.budget = pair.ga.evaluations;

  SaConfig sa = cfg.sa;
  sa.seed = seed;
  sa.max_evaluations = pair.budget;
  if (cfg.fit_sa_schedule) {
    const long plateaus = sa_plateau_count(sa.alpha);
    sa.steps_per_temperature = static_cast<int>(std::max<long>(1, (sa.max_evaluations + plateaus - 1) / plateaus));
  }
  pair.sa = run_sa(inst, sa);
  return pair;
}

/// Runs are independent; with jobs > 1 they execute concurrently and the
/// report is identical to a sequential run.
inline ComparisonReport run_comparison(const ProblemInstance& inst, const ComparisonConfig& cfg) {
  if (cfg.runs < 1) throw contract_error("runs must be at least 1");
  if (cfg.budget < 1) throw contract_error("budget must be at least 1");
  if (cfg.jobs < 1) throw contract_error("jobs must be at least 1");
  ComparisonReport report;
  report.budget = cfg.budget;
  report.runs.resize(cfg.runs);
  if (cfg.jobs == 1) {
    for (int i = 0; i < cfg.runs; ++i) report.runs[i] = run_pair(inst, cfg, cfg.base_seed + i);
  } else {
    const auto workers = std::min(cfg.jobs, cfg.runs);
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (int i = w; i < cfg.runs; i += workers) report.runs[i] = run_pair(inst, cfg, cfg.base_seed + i);
      });
    }
  }
  std::vector<long> ga, sa;
  for (const auto& r : report.runs) {
    ga.push_back(r.ga.best.objective);
    sa.push_back(r.sa.best.objective);
  }
  report.median_ga = median_of(ga);
  report.median_sa = median_of(sa);
  return report;
}

inline void print_comparison(const ComparisonReport& report, std::ostream& out) {
  out << "requested budget " << report.budget << " evaluations per algorithm\n";
  out << std::setw(8) << "seed" << std::setw(12) << "ga_best" << std::setw(12) << "sa_best"
      << std::setw(12) << "ga_budget" << std::setw(12) << "sa_budget" << std::setw(12) << "ga_used"
      << std::setw(12) << "sa_used" << '\n';
  for (const auto& r : report.runs) {
    out << std::setw(8) << r.seed << std::setw(12) << r.ga.best.objective << std::setw(12)
        << r.sa.best.objective << std::setw(12) << r.budget << std::setw(12) << r.budget << std::setw(12)
        << r.ga.evaluations << std::setw(12) << r.sa.evaluations << '\n';
  }
  out << std::fixed << std::setprecision(1);
  out << std::setw(8) << "median" << std::setw(12) << report.median_ga << std::setw(12)
      << report.median_sa << '\n';
  out.unsetf(std::ios::fixed);
}

}  // namespace depot_roster
