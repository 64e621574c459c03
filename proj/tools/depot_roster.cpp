// depot_roster: generate instances, solve them with GA or SA, validate stored
// solutions, and compare the two solvers at equal evaluation budgets.
//
// Exit codes: 0 success / feasible, 1 validation failure, 2 usage or input error.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "depot_roster/depot_roster.hpp"

namespace dr = depot_roster;
namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitUsage = 2;

struct GenerateOptions {
  std::uint64_t seed = 42;
  int days = 30;
  int workers = 200;
  double peak = 5000.0;
  double noise = 0.1;
  std::string out;
};

struct SolveOptions {
  std::string algo;
  std::string instance;
  std::uint64_t seed = 1;
  dr::GaConfig ga;
  dr::SaConfig sa;
  std::optional<double> t0;
  std::optional<long> evals;
  bool wall_clock = false;
  std::string out_solution;
  std::string out_trace;
};

struct ValidateOptions {
  std::string instance;
  std::string solution;
};

struct CompareOptions {
  std::string instance;
  int runs = 10;
  std::uint64_t seed = 1;
  long evals = 15000;
  int pop = 50;
  int jobs = 1;
  std::string trace_dir;
  bool fit_sa_schedule = false;
  bool wall_clock = false;
};

dr::ProblemInstance load_instance(const std::string& path) {
  std::vector<std::string> warnings;
  auto inst = dr::read_instance(path, warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
  return inst;
}

int report_violations(const std::vector<dr::Violation>& violations) {
  if (violations.empty()) return kExitOk;
  for (const auto& v : violations) std::cout << dr::describe(v) << '\n';
  std::cout << violations.size() << " violation(s)\n";
  return kExitInfeasible;
}

int cmd_generate(const GenerateOptions& o) {
  const auto inst = dr::generate_instance(o.seed, o.days, o.workers, o.peak, o.noise);
  dr::write_instance(inst, o.out);
  std::cout << "wrote " << o.days << "x" << o.workers << " instance to " << o.out << '\n';
  return kExitOk;
}

int cmd_solve(SolveOptions o) {
  const auto inst = load_instance(o.instance);
  dr::Solution best;
  dr::ConvergenceTrace trace;
  long evaluations = 0;
  if (o.algo == "ga") {
    o.ga.seed = o.seed;
    o.ga.wall_clock = o.wall_clock;
    if (o.evals) o.ga.generations = dr::generations_for_budget(*o.evals, o.ga.population_size, o.ga.elite_count);
    auto r = dr::run_ga(inst, o.ga);
    best = std::move(r.best);
    trace = std::move(r.trace);
    evaluations = r.evaluations;
  } else {
    o.sa.seed = o.seed;
    o.sa.wall_clock = o.wall_clock;
    o.sa.initial_temp = o.t0;
    if (o.evals) o.sa.max_evaluations = *o.evals;
    auto r = dr::run_sa(inst, o.sa);
    best = std::move(r.best);
    trace = std::move(r.trace);
    evaluations = r.evaluations;
  }

  if (!o.out_solution.empty()) dr::write_solution(best, o.out_solution);
  if (!o.out_trace.empty()) dr::write_trace(trace, o.out_trace);
  std::cout << "algo=" << o.algo << " objective=" << best.objective << " evaluations=" << evaluations << '\n';

  const auto violations = dr::check_feasibility(best, inst);
  if (!violations.empty()) {
    std::cout << "solver produced an infeasible solution:\n";
    return report_violations(violations);
  }
  return kExitOk;
}

int cmd_validate(const ValidateOptions& o) {
  const auto inst = load_instance(o.instance);
  const auto sol = dr::read_solution(o.solution);
  const auto violations = dr::check_feasibility(sol, inst);
  if (violations.empty()) {
    std::cout << "feasible\n";
    return kExitOk;
  }
  return report_violations(violations);
}

int cmd_compare(const CompareOptions& o) {
  const auto inst = load_instance(o.instance);
  dr::ComparisonConfig cfg;
  cfg.budget = o.evals;
  cfg.runs = o.runs;
  cfg.base_seed = o.seed;
  cfg.jobs = o.jobs;
  cfg.fit_sa_schedule = o.fit_sa_schedule;
  cfg.ga.population_size = o.pop;
  cfg.ga.wall_clock = o.wall_clock;
  cfg.sa.wall_clock = o.wall_clock;
  const auto report = dr::run_comparison(inst, cfg);
  dr::print_comparison(report, std::cout);

  if (!o.trace_dir.empty()) {
    fs::create_directories(o.trace_dir);
    for (const auto& r : report.runs) {
      const auto tag = std::to_string(r.seed);
      dr::write_trace(r.ga.trace, fs::path(o.trace_dir) / ("ga_seed" + tag + ".csv"));
      dr::write_trace(r.sa.trace, fs::path(o.trace_dir) / ("sa_seed" + tag + ".csv"));
    }
  }

  for (const auto& r : report.runs) {
    for (const auto* sol : {&r.ga.best, &r.sa.best}) {
      if (auto v = dr::check_feasibility(*sol, inst); !v.empty()) {
        std::cout << "seed " << r.seed << " produced an infeasible solution:\n";
        return report_violations(v);
      }
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regular and temporary worker rostering for a parcel sorting depot"};
  app.require_subcommand(1);

  GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "Write a synthetic instance");
  generate->add_option("--seed", gen.seed, "Random seed")->capture_default_str();
  generate->add_option("--days", gen.days, "Planning horizon in days")->check(CLI::PositiveNumber)->capture_default_str();
  generate->add_option("--workers", gen.workers, "Regular worker pool size")->check(CLI::NonNegativeNumber)->capture_default_str();
  generate->add_option("--peak", gen.peak, "Peak hourly demand in parcels")->check(CLI::NonNegativeNumber)->capture_default_str();
  generate->add_option("--noise", gen.noise, "Uniform relative noise on demand")->check(CLI::Range(0.0, 1.0))->capture_default_str();
  generate->add_option("--out", gen.out, "Instance file to write")->required();

  SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance with GA or SA");
  solve_cmd->add_option("--algo", solve.algo, "ga or sa")->required()->check(CLI::IsMember({"ga", "sa"}));
  solve_cmd->add_option("--instance", solve.instance, "Instance file")->required()->check(CLI::ExistingFile);
  solve_cmd->add_option("--seed", solve.seed, "Random seed")->capture_default_str();
  solve_cmd->add_option("--evals", solve.evals, "Evaluation budget (GA: sets generations; SA: max evaluations)")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_option("--pop", solve.ga.population_size, "GA population size")->capture_default_str();
  solve_cmd->add_option("--gens", solve.ga.generations, "GA generations")->capture_default_str();
  solve_cmd->add_option("--cx", solve.ga.crossover_prob, "GA crossover probability")->capture_default_str();
  solve_cmd->add_option("--mut", solve.ga.mutation_prob, "GA per-gene mutation probability")->capture_default_str();
  solve_cmd->add_option("--tournament", solve.ga.tournament_size, "GA tournament size")->capture_default_str();
  solve_cmd->add_option("--elite", solve.ga.elite_count, "GA elite count")->capture_default_str();
  solve_cmd->add_option("--threads", solve.ga.threads, "GA fitness evaluation threads")->capture_default_str();
  solve_cmd->add_option("--alpha", solve.sa.alpha, "SA cooling factor")->capture_default_str();
  solve_cmd->add_option("--steps", solve.sa.steps_per_temperature, "SA steps per temperature")->capture_default_str();
  solve_cmd->add_option("--t0", solve.t0, "SA initial temperature (default: calibrated)");
  solve_cmd->add_flag("--wall-clock", solve.wall_clock, "Record real elapsed time in the trace");
  solve_cmd->add_option("--out-solution", solve.out_solution, "Solution file to write");
  solve_cmd->add_option("--out-trace", solve.out_trace, "Trace CSV to write");

  ValidateOptions val;
  auto* validate = app.add_subcommand("validate", "Check a stored solution against an instance");
  validate->add_option("--instance", val.instance, "Instance file")->required()->check(CLI::ExistingFile);
  validate->add_option("--solution", val.solution, "Solution file")->required()->check(CLI::ExistingFile);

  CompareOptions cmp;
  auto* compare = app.add_subcommand("compare", "Run GA and SA over several seeds at equal budgets");
  compare->add_option("--instance", cmp.instance, "Instance file")->required()->check(CLI::ExistingFile);
  compare->add_option("--runs", cmp.runs, "Number of seeds")->check(CLI::PositiveNumber)->capture_default_str();
  compare->add_option("--seed", cmp.seed, "First seed")->capture_default_str();
  compare->add_option("--evals", cmp.evals, "Evaluation budget per algorithm")->check(CLI::PositiveNumber)->capture_default_str();
  compare->add_option("--pop", cmp.pop, "GA population size")->capture_default_str();
  compare->add_option("--jobs", cmp.jobs, "Runs executed concurrently")->check(CLI::PositiveNumber)->capture_default_str();
  compare->add_option("--trace-dir", cmp.trace_dir, "Directory for per-seed trace CSVs");
  compare->add_flag("--fit-sa-schedule", cmp.fit_sa_schedule,
                    "Stretch SA plateaus so its cooling schedule spans the whole budget");
  compare->add_flag("--wall-clock", cmp.wall_clock, "Record real elapsed time in traces");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*generate) return cmd_generate(gen);
    if (*solve_cmd) return cmd_solve(solve);
    if (*validate) return cmd_validate(val);
    if (*compare) return cmd_compare(cmp);
  } catch (const std::exception& e) {
    // Bad parameter values and unreadable or malformed input files.
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
