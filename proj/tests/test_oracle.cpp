#include <gtest/gtest.h>

#include "test_support.hpp"

namespace dr = depot_roster;

TEST(Oracle, SingleWorkerSmallDemand) {
  auto inst = dr::make_instance(1, 1);
  inst.demand[0][3] = 20;
  const auto res = dr::enumerate_optimal(inst);
  EXPECT_EQ(res.objective, 1);
  EXPECT_EQ(res.states, 7u);
}

TEST(Oracle, RegularPlusTempBeatsTempsAlone) {
  auto inst = dr::make_instance(1, 1);
  inst.demand[0][3] = 45;
  inst.params.attendance_cap = 1.0;
  const auto res = dr::enumerate_optimal(inst);
  EXPECT_EQ(res.objective, 2);
  EXPECT_TRUE(res.solution.roster.at(0, 0, 0));
  EXPECT_EQ(res.solution.temps.total(), 1);
}

TEST(Oracle, DefaultCapForbidsRegularsOnOneDayHorizon) {
  // floor(0.85 * 1) = 0 working days, so only temps remain: ceil(45 / 20).
  auto inst = dr::make_instance(1, 1);
  inst.demand[0][3] = 45;
  const auto res = dr::enumerate_optimal(inst);
  EXPECT_EQ(res.objective, 3);
  EXPECT_EQ(res.feasible, 1u);
}

TEST(Oracle, ZeroDemand) {
  const auto inst = dr::make_instance(2, 2);
  const auto res = dr::enumerate_optimal(inst);
  EXPECT_EQ(res.objective, 0);
  EXPECT_EQ(res.solution.roster.person_days(), 0);
  EXPECT_EQ(res.states, 2401u);
}

TEST(Oracle, GuardRefusal) {
  const auto inst = dr::make_instance(30, 200);
  try {
    dr::enumerate_optimal(inst);
    FAIL() << "expected refusal";
  } catch (const dr::search_space_error& e) {
    EXPECT_GT(e.state_count(), 1e7);
  }
  EXPECT_THROW(dr::enumerate_optimal(dr::make_instance(2, 2), 100.0), dr::search_space_error);
}

TEST(Oracle, LexicographicallyFirstMinimiser) {
  // Hour 23 demand 25 needs one regular on shift 5 (two temps otherwise).
  // Gene 0 is the most significant digit, so the first minimiser leaves
  // worker 0 off and puts worker 1 on shift 5.
  auto inst = dr::make_instance(1, 2);
  inst.params.attendance_cap = 1.0;
  inst.demand[0][23] = 25;
  const auto res = dr::enumerate_optimal(inst);
  EXPECT_EQ(res.objective, 1);
  EXPECT_EQ(dr::gene(res.solution.roster, 0, 0), dr::kOff);
  EXPECT_EQ(dr::gene(res.solution.roster, 0, 1), 5);
}

TEST(Oracle, FeasibleAndBoundsHeuristics) {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const auto inst = dr::testing::tiny_instance(seed);
    const auto res = dr::enumerate_optimal(inst);
    EXPECT_TRUE(dr::check_feasibility(res.solution, inst).empty());
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 50; ++i) {
      const auto sol = dr::evaluate(dr::repaired(dr::sample_roster(inst, rng), inst, rng), inst);
      EXPECT_LE(res.objective, sol.objective);
    }
  }
}

TEST(Oracle, ThreadCountDoesNotChangeResult) {
  auto inst = dr::generate_instance(5, 3, 2, 60.0, 0.5);
  const auto one = dr::enumerate_optimal(inst, 1e7, 1);
  const auto four = dr::enumerate_optimal(inst, 1e7, 4);
  EXPECT_EQ(one.objective, four.objective);
  EXPECT_EQ(one.solution, four.solution);
  EXPECT_EQ(one.feasible, four.feasible);
}
