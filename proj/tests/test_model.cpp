#include <gtest/gtest.h>

#include <set>

#include "depot_roster/model.hpp"

namespace dr = depot_roster;

TEST(ShiftCatalog, StandardShifts) {
  const auto& c = dr::ShiftCatalog::standard();
  ASSERT_EQ(c.size(), 6);
  const std::vector<dr::ShiftInterval> expected = {{0, 8}, {5, 13}, {8, 16}, {12, 20}, {14, 22}, {16, 24}};
  EXPECT_EQ(c.shifts(), expected);
  for (int t = 0; t < c.size(); ++t) EXPECT_EQ(c[t].length(), 8);
}

TEST(ShiftCatalog, ShiftHours) {
  const auto& c = dr::ShiftCatalog::standard();
  EXPECT_EQ(c.shift_hours(0), (std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7}));
  EXPECT_EQ(c.shift_hours(5), (std::vector<int>{16, 17, 18, 19, 20, 21, 22, 23}));
  EXPECT_THROW(c.shift_hours(6), std::out_of_range);
  EXPECT_THROW(c.shift_hours(-1), std::out_of_range);
}

TEST(ShiftCatalog, ShiftsCovering) {
  const auto& c = dr::ShiftCatalog::standard();
  EXPECT_EQ(c.shifts_covering(0), (std::vector<int>{0}));
  EXPECT_EQ(c.shifts_covering(12), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(c.shifts_covering(23), (std::vector<int>{5}));
  EXPECT_THROW(c.shifts_covering(24), std::out_of_range);
  EXPECT_THROW(c.shifts_covering(-1), std::out_of_range);
}

TEST(ShiftCatalog, HoursAndCoveringAgreeExhaustively) {
  const auto& c = dr::ShiftCatalog::standard();
  std::set<int> all;
  for (int t = 0; t < c.size(); ++t) {
    const auto hours = c.shift_hours(t);
    EXPECT_EQ(hours.size(), 8u);
    all.insert(hours.begin(), hours.end());
    for (int h = 0; h < dr::kHoursPerDay; ++h) {
      const bool in_shift = std::ranges::find(hours, h) != hours.end();
      const auto& cov = c.shifts_covering(h);
      const bool in_cover = std::ranges::find(cov, t) != cov.end();
      EXPECT_EQ(in_shift, in_cover) << "shift " << t << " hour " << h;
    }
  }
  EXPECT_EQ(all.size(), 24u);
}

TEST(ShiftCatalog, TopUpShiftEndsLatest) {
  const auto& c = dr::ShiftCatalog::standard();
  EXPECT_EQ(c.top_up_shift(2), 0);
  EXPECT_EQ(c.top_up_shift(6), 1);   // [5,13) outlasts [0,8)
  EXPECT_EQ(c.top_up_shift(12), 3);  // [12,20)
  EXPECT_EQ(c.top_up_shift(15), 4);  // [14,22)
  EXPECT_EQ(c.top_up_shift(20), 5);
}

TEST(ShiftCatalog, TopUpTieKeepsLowestIndex) {
  const dr::ShiftCatalog c({{0, 12}, {6, 24}, {12, 24}});
  EXPECT_EQ(c.top_up_shift(13), 1);
}

TEST(ShiftCatalog, RejectsGapsAndBadIntervals) {
  EXPECT_THROW(dr::ShiftCatalog({{0, 8}, {9, 24}}), dr::contract_error);
  EXPECT_THROW(dr::ShiftCatalog({{0, 25}}), dr::contract_error);
  EXPECT_THROW(dr::ShiftCatalog({{5, 5}, {0, 24}}), dr::contract_error);
  EXPECT_THROW(dr::ShiftCatalog(std::vector<dr::ShiftInterval>{}), dr::contract_error);
  EXPECT_NO_THROW(dr::ShiftCatalog({{0, 12}, {12, 24}}));
}

TEST(ValidateInstance, DefaultZeroDemandIsOk) {
  EXPECT_TRUE(dr::validate_instance(dr::make_instance(30, 200)).empty());
}

TEST(ValidateInstance, ShortDemandRow) {
  auto inst = dr::make_instance(3, 5);
  inst.demand[1].pop_back();
  const auto v = dr::validate_instance(inst);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_NE(v[0].find("demand row length"), std::string::npos);
}

TEST(ValidateInstance, NegativeDemand) {
  auto inst = dr::make_instance(3, 5);
  inst.demand[2][7] = -5;
  const auto v = dr::validate_instance(inst);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_NE(v[0].find("negative demand"), std::string::npos);
}

TEST(ValidateInstance, DimensionAndParameterProblems) {
  auto inst = dr::make_instance(3, 5);
  inst.demand.pop_back();
  inst.params.attendance_cap = 1.5;
  inst.params.temp_rate = 0;
  EXPECT_EQ(dr::validate_instance(inst).size(), 3u);

  auto empty = dr::make_instance(0, -1);
  EXPECT_GE(dr::validate_instance(empty).size(), 2u);
}

TEST(ValidateInstance, CustomCatalogNeedsOptIn) {
  auto inst = dr::make_instance(2, 2);
  inst.catalog = dr::ShiftCatalog({{0, 12}, {12, 24}});
  EXPECT_EQ(dr::validate_instance(inst).size(), 1u);
  EXPECT_TRUE(dr::validate_instance(inst, true).empty());
}

TEST(AttendanceCap, FloorOfFraction) {
  const dr::EfficiencyParams p;
  EXPECT_EQ(dr::attendance_cap_days(p, 30), 25);
  EXPECT_EQ(dr::attendance_cap_days(p, 10), 8);
  EXPECT_EQ(dr::attendance_cap_days(p, 20), 17);
  EXPECT_EQ(dr::attendance_cap_days(p, 2), 1);
  EXPECT_EQ(dr::attendance_cap_days(p, 1), 0);
  EXPECT_EQ(dr::attendance_cap_days({25, 20, 1.0}, 7), 7);
}

TEST(RegularRoster, IndexingAndCounts) {
  dr::RegularRoster r(3, 6, 4);
  EXPECT_EQ(r.person_days(), 0);
  r.set(1, 2, 3);
  r.set(1, 4, 3);
  EXPECT_TRUE(r.at(1, 2, 3));
  EXPECT_FALSE(r.at(1, 2, 2));
  EXPECT_EQ(r.shifts_worked(1, 3), 2);
  EXPECT_TRUE(r.works(1, 3));
  EXPECT_FALSE(r.works(0, 3));
  EXPECT_EQ(r.person_days(), 2);
  r.clear_day(1, 3);
  EXPECT_EQ(r.person_days(), 0);
  EXPECT_EQ(r.day(2).size(), 24u);
}

TEST(TempPlan, RejectsNegativeCounts) {
  dr::TempPlan p(2, 6);
  p.add(1, 3, 4);
  EXPECT_EQ(p.total(), 4);
  EXPECT_THROW(p.set(0, 0, -1), dr::contract_error);
}
