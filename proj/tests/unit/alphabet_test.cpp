#include <gtest/gtest.h>

#include "birev/alphabet.hpp"
#include "birev/error.hpp"

using namespace birev;

TEST(AlphabetSchedule, SizeAtFollowsPrefixThenTail) {
  EXPECT_EQ(AlphabetSchedule::constant(2).sizeAt(7), 2u);
  AlphabetSchedule s({3, 4}, RampTail{1});
  EXPECT_EQ(s.sizeAt(1), 3u);
  EXPECT_EQ(s.sizeAt(2), 4u);
  EXPECT_EQ(s.sizeAt(3), 4u);
  EXPECT_EQ(AlphabetSchedule::ramp(1).sizeAt(5), 6u);
  AlphabetSchedule p({5}, PeriodicTail{{2, 3}});
  EXPECT_EQ(p.sizeAt(2), 2u);
  EXPECT_EQ(p.sizeAt(3), 3u);
  EXPECT_EQ(p.sizeAt(4), 2u);
}

TEST(AlphabetSchedule, Boundedness) {
  EXPECT_EQ(std::get<Bounded>(boundednessOf(AlphabetSchedule::constant(2))).sup, 2u);
  EXPECT_EQ(std::get<Bounded>(boundednessOf(AlphabetSchedule({5}, PeriodicTail{{2, 3}}))).sup, 5u);
  EXPECT_TRUE(std::holds_alternative<Unbounded>(boundednessOf(AlphabetSchedule::ramp(0))));
  EXPECT_FALSE(AlphabetSchedule::ramp(0).isBounded());
  EXPECT_FALSE(AlphabetSchedule::ramp(0).bound().has_value());
}

TEST(AlphabetSchedule, ValidateWord) {
  const Word ok{0, 1, 1}, bad{0, 2}, ramp{0, 1, 2};
  EXPECT_TRUE(validateWord(AlphabetSchedule::constant(2), ok));
  EXPECT_FALSE(validateWord(AlphabetSchedule::constant(2), bad));
  EXPECT_TRUE(validateWord(AlphabetSchedule::ramp(0), ramp));
  EXPECT_TRUE(validateWord(AlphabetSchedule::ramp(0), Word{}));
  EXPECT_FALSE(validateWord(AlphabetSchedule::ramp(0), Word{1}));
}

TEST(AlphabetSchedule, RejectsZeroSizes) {
  EXPECT_THROW(AlphabetSchedule({0}, ConstantTail{2}), Error);
  EXPECT_THROW(AlphabetSchedule::constant(0), Error);
  EXPECT_THROW(AlphabetSchedule::periodic({}), Error);
  EXPECT_THROW(AlphabetSchedule::periodic({2, 0}), Error);
}

TEST(AlphabetSchedule, ShiftedRenumbersLevels) {
  AlphabetSchedule s({7}, PeriodicTail{{2, 3, 4}});
  for (std::size_t k = 0; k < 6; ++k) {
    const AlphabetSchedule t = s.shifted(k);
    for (Level i = 1; i < 20; ++i) EXPECT_EQ(t.sizeAt(i), s.sizeAt(i + k)) << k << " " << i;
  }
  const AlphabetSchedule r = AlphabetSchedule({3, 4}, RampTail{1}).shifted(3);
  for (Level i = 1; i < 20; ++i) EXPECT_EQ(r.sizeAt(i), i + 3 + 1);
}

TEST(AlphabetSchedule, LeafCountSaturates) {
  EXPECT_EQ(AlphabetSchedule::constant(2).leafCount(0), 1u);
  EXPECT_EQ(AlphabetSchedule::constant(3).leafCount(4), 81u);
  EXPECT_EQ(AlphabetSchedule::ramp(0).leafCount(5), 120u);
  EXPECT_EQ(AlphabetSchedule::constant(2).leafCount(200), SIZE_MAX);
}

TEST(AlphabetSchedule, Properties) {
  const std::vector<AlphabetSchedule> schedules{
      AlphabetSchedule::constant(3), AlphabetSchedule({9, 1}, PeriodicTail{{2, 5}}),
      AlphabetSchedule({4}, RampTail{2}), AlphabetSchedule::ramp(0)};
  for (const auto& s : schedules) {
    const auto b = s.bound();
    for (Level i = 1; i <= 10000; ++i) {
      ASSERT_GE(s.sizeAt(i), 1u);
      if (b) ASSERT_LE(s.sizeAt(i), *b);
      if (!b && i > s.prefix().size() + 1) ASSERT_GT(s.sizeAt(i), s.sizeAt(i - 1));
    }
  }
}
