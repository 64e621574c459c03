#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <span>
#include <thread>
#include <utility>
#include <vector>

#include "depot_roster/evaluator.hpp"
#include "depot_roster/genes.hpp"
#include "depot_roster/model.hpp"
#include "depot_roster/repair.hpp"
#include "depot_roster/trace.hpp"

namespace depot_roster {

struct GaConfig {
  int population_size = 50;
  int generations = 300;
  double crossover_prob = 0.9;
  double mutation_prob = 0.01;  // per worker-day gene
  int tournament_size = 2;
  int elite_count = 1;
  std::uint64_t seed = 0;
  int threads = 1;  // fitness evaluation only; results do not depend on it
  bool wall_clock = false;

  void validate() const {
    if (population_size < 2) throw contract_error("population_size must be at least 2");
    if (generations < 0) throw contract_error("generations must be non-negative");
    if (elite_count < 0 || elite_count >= population_size) {
      throw contract_error("elite_count must lie in [0, population_size)");
    }
    if (tournament_size < 1) throw contract_error("tournament_size must be at least 1");
    auto is_prob = [](double p) { return p >= 0.0 && p <= 1.0; };
    if (!is_prob(crossover_prob) || !is_prob(mutation_prob)) {
      throw contract_error("probabilities must lie in [0, 1]");
    }
    if (threads < 1) throw contract_error("threads must be at least 1");
  }
};

// The genotype is the roster itself: one chromosome per day, each a
// shift-by-worker slice. The decoded temp plan and objective ride along.
using Individual = Solution;

/// Evaluates every roster, optionally on several threads. Output order matches
/// input order, so the result is the same for any thread count.
inline std::vector<Individual> evaluate_all(std::vector<RegularRoster> rosters,
                                            const ProblemInstance& inst, int threads = 1) {
  std::vector<Individual> out(rosters.size());
  const auto n = rosters.size();
  const auto workers = std::min<std::size_t>(std::max(threads, 1), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = evaluate(std::move(rosters[i]), inst);
    return out;
  }
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) out[i] = evaluate(std::move(rosters[i]), inst);
    });
  }
  pool.clear();
  return out;
}

template <std::uniform_random_bit_generator Urbg>
std::vector<Individual> init_population(const ProblemInstance& inst, const GaConfig& cfg, Urbg& rng) {
  std::vector<RegularRoster> rosters;
  rosters.reserve(cfg.population_size);
  for (int i = 0; i < cfg.population_size; ++i) {
    auto r = sample_roster(inst, rng);
    repair_all(r, inst, rng);
    rosters.push_back(std::move(r));
  }
  return evaluate_all(std::move(rosters), inst, cfg.threads);
}

inline std::vector<Individual> init_population(const ProblemInstance& inst, const GaConfig& cfg) {
  cfg.validate();
  std::mt19937_64 rng(cfg.seed);
  return init_population(inst, cfg, rng);
}

/// floor(D/2) distinct days, uniformly chosen, ascending.
template <std::uniform_random_bit_generator Urbg>
std::vector<int> sample_crossover_days(int days, Urbg& rng) {
  std::vector<int> all(days);
  std::iota(all.begin(), all.end(), 0);
  std::vector<int> picked;
  std::sample(all.begin(), all.end(), std::back_inserter(picked), days / 2, rng);
  return picked;
}

/// Children exchange the whole day chromosome for every listed day. No repair.
inline std::pair<RegularRoster, RegularRoster> crossover_days(const RegularRoster& a,
                                                              const RegularRoster& b,
                                                              std::span<const int> days) {
  if (a.days() != b.days() || a.shifts() != b.shifts() || a.workers() != b.workers()) {
    throw contract_error("crossover parents have different dimensions");
  }
  RegularRoster child_a = a;
  RegularRoster child_b = b;
  for (int d : days) {
    std::ranges::copy(b.day(d), child_a.day(d).begin());
    std::ranges::copy(a.day(d), child_b.day(d).begin());
  }
  return {std::move(child_a), std::move(child_b)};
}

template <std::uniform_random_bit_generator Urbg>
std::pair<Individual, Individual> crossover(const Individual& a, const Individual& b,
                                            const ProblemInstance& inst, Urbg& rng) {
  const auto days = sample_crossover_days(inst.days, rng);
  auto [ra, rb] = crossover_days(a.roster, b.roster, days);
  repair_all(ra, inst, rng);
  repair_all(rb, inst, rng);
  return {evaluate(std::move(ra), inst), evaluate(std::move(rb), inst)};
}

/// Each worker-day gene is resampled among off and all shifts with
/// probability `rate`. No repair.
template <std::uniform_random_bit_generator Urbg>
void mutate_genes(RegularRoster& roster, double rate, Urbg& rng) {
  if (rate <= 0.0) return;
  std::bernoulli_distribution hit(rate);
  for (int d = 0; d < roster.days(); ++d) {
    for (int s = 0; s < roster.workers(); ++s) {
      if (hit(rng)) set_gene(roster, d, s, sample_gene(roster.shifts(), rng));
    }
  }
}

template <std::uniform_random_bit_generator Urbg>
Individual mutate(Individual ind, const ProblemInstance& inst, const GaConfig& cfg, Urbg& rng) {
  if (cfg.mutation_prob <= 0.0) return ind;
  mutate_genes(ind.roster, cfg.mutation_prob, rng);
  repair_all(ind.roster, inst, rng);
  return evaluate(std::move(ind.roster), inst);
}

/// Index of the tournament winner: tournament_size draws with replacement,
/// lowest objective wins, earlier index on ties.
template <std::uniform_random_bit_generator Urbg>
std::size_t tournament_pick(std::span<const Individual> pop, int tournament_size, Urbg& rng) {
  if (pop.empty()) throw contract_error("tournament on an empty population");
  std::uniform_int_distribution<std::size_t> draw(0, pop.size() - 1);
  std::size_t best = draw(rng);
  for (int k = 1; k < tournament_size; ++k) {
    const auto c = draw(rng);
    if (pop[c].objective < pop[best].objective ||
        (pop[c].objective == pop[best].objective && c < best)) {
      best = c;
    }
  }
  return best;
}

template <std::uniform_random_bit_generator Urbg>
const Individual& select_tournament(std::span<const Individual> pop, const GaConfig& cfg, Urbg& rng) {
  return pop[tournament_pick(pop, cfg.tournament_size, rng)];
}

struct GaResult {
  Solution best;
  ConvergenceTrace trace;  // one record per generation, generation 0 included
  long evaluations = 0;
};

/// Evaluations run_ga spends: the initial population plus every bred child.
inline long ga_evaluation_count(const GaConfig& cfg) {
  return cfg.population_size +
         static_cast<long>(cfg.generations) * (cfg.population_size - cfg.elite_count);
}

/// Generational loop: elites carry over, the rest of the next generation is
/// bred by tournament selection, day-block crossover (or cloning), mutation,
/// then a single repair and evaluation per child.
inline GaResult run_ga(const ProblemInstance& inst, const GaConfig& cfg) {
  cfg.validate();
  const RunClock clock(cfg.wall_clock);
  std::mt19937_64 rng(cfg.seed);
  std::bernoulli_distribution do_crossover(cfg.crossover_prob);

  GaResult result;
  auto pop = init_population(inst, cfg, rng);
  result.evaluations = static_cast<long>(pop.size());

  // Strict comparison keeps the earliest-found individual on ties.
  auto track_best = [&](const std::vector<Individual>& generation) {
    for (const auto& ind : generation) {
      if (ind.objective < result.best.objective) result.best = ind;
    }
  };
  result.best = pop.front();
  track_best(pop);
  result.trace.push_back({0, result.evaluations, result.best.objective, clock.elapsed_ms()});

  std::vector<std::size_t> order(pop.size());
  for (int gen = 1; gen <= cfg.generations; ++gen) {
    std::iota(order.begin(), order.end(), 0);
    std::ranges::stable_sort(order, {}, [&](std::size_t i) { return pop[i].objective; });

    std::vector<Individual> next;
    next.reserve(pop.size());
    for (int e = 0; e < cfg.elite_count; ++e) next.push_back(pop[order[e]]);

    const auto brood = static_cast<std::size_t>(cfg.population_size - cfg.elite_count);
    std::vector<RegularRoster> children;
    children.reserve(brood);
    const std::span<const Individual> parents(pop);
    while (children.size() < brood) {
      const auto& pa = parents[tournament_pick(parents, cfg.tournament_size, rng)];
      const auto& pb = parents[tournament_pick(parents, cfg.tournament_size, rng)];
      std::pair<RegularRoster, RegularRoster> kids;
      if (do_crossover(rng)) {
        kids = crossover_days(pa.roster, pb.roster, sample_crossover_days(inst.days, rng));
      } else {
        kids = {pa.roster, pb.roster};
      }
      for (auto* kid : {&kids.first, &kids.second}) {
        if (children.size() == brood) break;
        mutate_genes(*kid, cfg.mutation_prob, rng);
        repair_all(*kid, inst, rng);
        children.push_back(std::move(*kid));
      }
    }
    auto evaluated = evaluate_all(std::move(children), inst, cfg.threads);
    result.evaluations += static_cast<long>(evaluated.size());
    for (auto& ind : evaluated) next.push_back(std::move(ind));
    pop = std::move(next);

    track_best(pop);
    result.trace.push_back({gen, result.evaluations, result.best.objective, clock.elapsed_ms()});
  }
  return result;
}

}  // namespace depot_roster
