#include <gtest/gtest.h>

#include <set>

#include "birev/classify.hpp"
#include "birev/constructions.hpp"
#include "birev/error.hpp"

using namespace birev;

TEST(Classify, NamedAutomata) {
  EXPECT_EQ(classifyTwoStateBinary(z2z4Automaton()), GroupType::Z2xZ4);
  EXPECT_EQ(classifyTwoStateBinary(z4Automaton()), GroupType::Z4);
  const Automaton id = Automaton::explicitPeriodic(AlphabetSchedule::constant(2), {},
                                                   {LevelTable::identity(2, 2)});
  EXPECT_EQ(classifyTwoStateBinary(id), GroupType::Trivial);
}

TEST(Classify, GroupTypeData) {
  EXPECT_EQ(toString(GroupType::Z2xZ4), "Z2xZ4");
  EXPECT_EQ(orderOf(GroupType::Z2xZ2), 4u);
  EXPECT_EQ(orderOf(GroupType::Z2xZ4), 8u);
  EXPECT_EQ(exponentOf(GroupType::Z4), 4u);
  EXPECT_EQ(exponentOf(GroupType::Z2xZ2), 2u);
}

TEST(Classify, MealyLevelsGiveSmallGroups) {
  std::set<GroupType> seen;
  for (int t = 0; t < kBinaryBiReversibleLevelTypes; ++t) {
    const Automaton a = Automaton::explicitPeriodic(AlphabetSchedule::constant(2), {},
                                                    {binaryBiReversibleLevel(t)});
    seen.insert(classifyTwoStateBinary(a));
  }
  EXPECT_EQ(seen, (std::set<GroupType>{GroupType::Trivial, GroupType::Z2, GroupType::Z2xZ2}));
}

TEST(Classify, RandomInstancesNeverFail) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    EXPECT_NO_THROW(classifyTwoStateBinary(randomTwoStateBinaryBiReversible(seed, 2, 2)));
  }
}

TEST(Classify, Errors) {
  auto kindOf = [](const Automaton& a) {
    try {
      classifyTwoStateBinary(a);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::ParseError;
  };
  EXPECT_EQ(kindOf(bellaterraAutomaton()), ErrorKind::NotTwoState);
  EXPECT_EQ(kindOf(bellaterraDual()), ErrorKind::NotBinary);
  EXPECT_EQ(kindOf(lamplighterCayleyMachine()), ErrorKind::NotBiReversible);
  const Automaton rule = Automaton::fromGenerator(
      AlphabetSchedule::constant(2), 2, [](Level, std::size_t) { return LevelTable::identity(2, 2); },
      "rule", false, true);
  EXPECT_EQ(kindOf(rule), ErrorKind::UndecidableRepresentation);
}
