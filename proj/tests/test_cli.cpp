#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "test_support.hpp"

namespace dr = depot_roster;
namespace fs = std::filesystem;

namespace {

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    std::random_device rd;
    dir_ = fs::temp_directory_path() / ("depot_roster_cli_" + std::to_string(rd()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  // Exit status of the CLI; stdout and stderr go to `out.txt`.
  int run(const std::string& args) const {
    const std::string cmd = std::string(DEPOT_ROSTER_CLI) + " " + args + " > " + path("out.txt") + " 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::string output() const { return slurp(path("out.txt")); }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, GenerateDefaults) {
  ASSERT_EQ(run("generate --out " + path("i.json")), 0) << output();
  const auto inst = dr::read_instance(path("i.json"));
  EXPECT_EQ(inst.days, 30);
  EXPECT_EQ(inst.regular_pool, 200);
  EXPECT_EQ(inst, dr::generate_instance(42, 30, 200, 5000.0, 0.1));
}

TEST_F(CliTest, GenerateTiny) {
  ASSERT_EQ(run("generate --days 2 --workers 2 --peak 60 --out " + path("t.json")), 0) << output();
  const auto inst = dr::read_instance(path("t.json"));
  EXPECT_NO_THROW(dr::enumerate_optimal(inst));
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run("generate --peak -5 --out " + path("x.json")), 2);
  EXPECT_EQ(run("generate --noise 3 --out " + path("x.json")), 2);
  EXPECT_EQ(run("generate"), 2);
  EXPECT_EQ(run(""), 2);
  ASSERT_EQ(run("generate --days 2 --workers 2 --peak 60 --out " + path("t.json")), 0);
  EXPECT_EQ(run("solve --algo xx --instance " + path("t.json")), 2);
  EXPECT_EQ(run("solve --algo ga --instance " + path("missing.json")), 2);
  EXPECT_EQ(run("solve --algo ga --pop 1 --instance " + path("t.json")), 2);
}

TEST_F(CliTest, GaOnTinyInstanceFindsOracleOptimum) {
  ASSERT_EQ(run("generate --seed 5 --days 2 --workers 2 --peak 60 --noise 0.5 --out " + path("t.json")), 0);
  ASSERT_EQ(run("solve --algo ga --seed 5 --pop 30 --gens 100 --instance " + path("t.json") +
                " --out-solution " + path("s.json") + " --out-trace " + path("tr.csv")),
            0)
      << output();
  const auto inst = dr::read_instance(path("t.json"));
  const auto sol = dr::read_solution(path("s.json"));
  EXPECT_EQ(sol.objective, dr::enumerate_optimal(inst).objective);
  EXPECT_NE(output().find("objective=" + std::to_string(sol.objective)), std::string::npos);
  EXPECT_EQ(dr::read_trace(path("tr.csv")).size(), 101u);
}

TEST_F(CliTest, SaIsByteIdenticalAcrossRuns) {
  ASSERT_EQ(run("generate --days 6 --workers 5 --peak 200 --out " + path("i.json")), 0);
  const std::string base = "solve --algo sa --seed 7 --evals 600 --instance " + path("i.json");
  ASSERT_EQ(run(base + " --out-solution " + path("a.json") + " --out-trace " + path("a.csv")), 0);
  ASSERT_EQ(run(base + " --out-solution " + path("b.json") + " --out-trace " + path("b.csv")), 0);
  EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
  EXPECT_EQ(slurp(path("a.csv")), slurp(path("b.csv")));
}

TEST_F(CliTest, ValidateSolverOutputAndCorruptions) {
  ASSERT_EQ(run("generate --days 4 --workers 3 --peak 150 --out " + path("i.json")), 0);
  ASSERT_EQ(run("solve --algo ga --pop 6 --gens 5 --instance " + path("i.json") + " --out-solution " +
                path("s.json")),
            0);
  EXPECT_EQ(run("validate --instance " + path("i.json") + " --solution " + path("s.json")), 0);
  EXPECT_NE(output().find("feasible"), std::string::npos);

  const auto inst = dr::read_instance(path("i.json"));
  auto sol = dr::read_solution(path("s.json"));

  auto two_shifts = sol;
  two_shifts.roster.clear_day(1, 0);
  two_shifts.roster.set(1, 0, 0);
  two_shifts.roster.set(1, 4, 0);
  two_shifts.objective = dr::objective(two_shifts.roster, two_shifts.temps);
  dr::write_solution(two_shifts, path("b.json"));
  EXPECT_EQ(run("validate --instance " + path("i.json") + " --solution " + path("b.json")), 1);
  EXPECT_NE(output().find("(b) day 1 worker 0"), std::string::npos) << output();

  auto tampered = sol;
  tampered.objective += 3;
  dr::write_solution(tampered, path("e.json"));
  EXPECT_EQ(run("validate --instance " + path("i.json") + " --solution " + path("e.json")), 1);
  EXPECT_NE(output().find("(e)"), std::string::npos) << output();
}

TEST_F(CliTest, CompareSingleRun) {
  ASSERT_EQ(run("generate --days 5 --workers 4 --peak 150 --out " + path("i.json")), 0);
  ASSERT_EQ(run("compare --runs 1 --seed 3 --evals 300 --pop 10 --instance " + path("i.json") +
                " --trace-dir " + path("traces")),
            0)
      << output();
  EXPECT_TRUE(fs::exists(path("traces/ga_seed3.csv")));
  EXPECT_TRUE(fs::exists(path("traces/sa_seed3.csv")));
  const auto out = output();
  EXPECT_NE(out.find("median"), std::string::npos);

  // One data row: budgets reported equal for both solvers.
  std::istringstream lines(out);
  std::string line;
  int rows = 0;
  while (std::getline(lines, line)) {
    std::istringstream row(line);
    long seed, ga, sa, ga_budget, sa_budget, ga_used, sa_used;
    if (row >> seed >> ga >> sa >> ga_budget >> sa_budget >> ga_used >> sa_used) {
      ++rows;
      EXPECT_EQ(seed, 3);
      EXPECT_EQ(ga_budget, sa_budget);
      EXPECT_GE(ga_budget, 300);
      EXPECT_EQ(ga_used, ga_budget);
      EXPECT_LE(sa_used, sa_budget);
    }
  }
  EXPECT_EQ(rows, 1);
}
