#include <gtest/gtest.h>

#include <random>

#include "birev/constructions.hpp"
#include "birev/error.hpp"
#include "birev/group.hpp"
#include "birev/torsion.hpp"
#include "support/oracle.hpp"

using namespace birev;

TEST(Partition, Examples) {
  const Automaton z = z2z4Automaton();
  const StatePartition p1 = biReversiblePartitionAt(z, 1);
  EXPECT_EQ(p1.keep, (std::vector<Letter>{0}));
  EXPECT_EQ(p1.swap, (std::vector<Letter>{1}));
  const StatePartition p2 = biReversiblePartitionAt(z, 2);
  EXPECT_EQ(p2.keep, (std::vector<Letter>{0, 1}));
  EXPECT_TRUE(p2.swap.empty());
  const Automaton diag = exampleOneAutomaton(AlphabetSchedule::ramp(0));
  for (Level i = 1; i <= 10; ++i) EXPECT_TRUE(biReversiblePartitionAt(diag, i).swap.empty());
}

TEST(Partition, Errors) {
  try {
    biReversiblePartitionAt(bellaterraAutomaton(), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotTwoState);
  }
  try {
    biReversiblePartitionAt(lamplighterCayleyMachine(), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotBiReversibleAtLevel);
  }
}

TEST(Gamma, Examples) {
  const Automaton e2 = exampleTwoAutomaton(AlphabetSchedule::constant(3));
  EXPECT_EQ(gammaAt(e2, 1), Permutation::cycle(3, {1, 2}));
  EXPECT_EQ(gammaAt(e2, 1), labelingAt(e2, 1, 0).inverse().compose(labelingAt(e2, 1, 1)));
  const Automaton z = z2z4Automaton();
  EXPECT_TRUE(gammaAt(z, 1).isIdentity());
  EXPECT_EQ(gammaAt(z, 2), Permutation::cycle(2, {0, 1}));
}

TEST(CPower, Examples) {
  const Automaton z = z2z4Automaton();
  EXPECT_EQ(cPowerPositional(z, 1, Word{0, 0}), (Word{0, 1}));
  EXPECT_EQ(applyWord(z, stateQuotient(), Word{0, 0}), (Word{0, 1}));
  const Word w{1, 0, 1, 1};
  EXPECT_EQ(cPowerPositional(z, 0, w), w);
  const Automaton twins = diagonalAutomaton(AlphabetSchedule::constant(4), 2, [](Level i, State, std::size_t d) {
    return Permutation::cycle(d, {0, 1, 2, 3}).power(static_cast<std::int64_t>(i));
  });
  for (std::int64_t n = -5; n <= 5; ++n) EXPECT_EQ(cPowerPositional(twins, n, Word{3, 2, 1, 0}), (Word{3, 2, 1, 0}));
}

TEST(CPower, MatchesExpandedWord) {
  std::mt19937_64 rng(8);
  for (int instance = 0; instance < 40; ++instance) {
    const std::size_t d = 2 + instance % 3;
    const Automaton A = randomTwoStateBiReversible(rng(), AlphabetSchedule::periodic({d, 2, d + 1}), 1, 2);
    for (int trial = 0; trial < 20; ++trial) {
      const std::int64_t n = static_cast<std::int64_t>(rng() % 13) - 6;
      const Word w = oracle::randomWord(A.schedule(), 1 + rng() % 10, rng);
      ASSERT_EQ(cPowerPositional(A, n, w), oracle::apply(A, stateQuotient().power(n), w));
    }
  }
}

TEST(TorsionBound, Factorials) {
  EXPECT_EQ(torsionExponentBound(z2z4Automaton()), 2u);
  EXPECT_EQ(torsionExponentBound(exampleTwoAutomaton(AlphabetSchedule::periodic({3, 4, 2}))), 24u);
  const Automaton one = diagonalAutomaton(AlphabetSchedule::constant(1), 2,
                                          [](Level, State, std::size_t d) { return Permutation::identity(d); });
  EXPECT_EQ(torsionExponentBound(one), 1u);
  try {
    torsionExponentBound(exampleTwoAutomaton(AlphabetSchedule::ramp(1)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnboundedSchedule);
  }
}

TEST(TorsionBound, QuotientPowerIsTrivial) {
  std::mt19937_64 rng(17);
  for (int instance = 0; instance < 30; ++instance) {
    const std::size_t r = 2 + instance % 3;
    const Automaton A = randomTwoStateBiReversible(rng(), AlphabetSchedule::periodic({r, 2}), 2, 1);
    const auto n = static_cast<std::int64_t>(torsionExponentBound(A));
    EXPECT_EQ(decideIdentity(A, stateQuotient().power(n)).status, EqualityStatus::Equal);
  }
}
