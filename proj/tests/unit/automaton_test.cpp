#include <gtest/gtest.h>

#include <random>
#include <thread>

#include "birev/automaton.hpp"
#include "birev/constructions.hpp"
#include "birev/error.hpp"
#include "birev/torsion.hpp"
#include "support/oracle.hpp"

using namespace birev;

namespace {

Automaton identityDiagonal(std::size_t states, const AlphabetSchedule& s) {
  return diagonalAutomaton(s, states, [](Level, State, std::size_t d) { return Permutation::identity(d); });
}

std::vector<Automaton> catalog() {
  return {exampleOneAutomaton(AlphabetSchedule::ramp(0)),
          exampleOneAutomaton(AlphabetSchedule::constant(5)),
          exampleTwoAutomaton(AlphabetSchedule::ramp(1)),
          exampleTwoAutomaton(AlphabetSchedule::periodic({3, 4})),
          giAutomaton({{2, 3, 5}, 7}),
          z2z4Automaton(),
          z4Automaton(),
          lamplighterCayleyMachine(),
          bellaterraAutomaton(),
          bellaterraDual(),
          randomTwoStateBinaryBiReversible(3, 2, 2),
          embedOnSubsequence(exampleTwoAutomaton(AlphabetSchedule::periodic({3, 5})),
                             SubsequenceRule::arithmetic(2, 2), AlphabetSchedule::periodic({4, 3, 4, 5}))};
}

}  // namespace

TEST(LevelTable, Predicates) {
  const LevelTable lamp({{0, 1}, {1, 0}}, {{0, 1}, {1, 0}});
  EXPECT_TRUE(lamp.isInvertible());
  EXPECT_TRUE(lamp.isReversible());
  EXPECT_FALSE(lamp.isDiagonal());
  EXPECT_FALSE(lamp.inverse().isReversible());
  EXPECT_THROW(LevelTable({{0, 2}}, {{0, 1}}), Error);
  EXPECT_THROW(LevelTable({{0, 0}}, {{0, 2}}), Error);
  EXPECT_THROW(LevelTable({{0, 0}}, {{0, 0}}).labeling(0), Error);
}

TEST(Automaton, LevelTablesAndLabelings) {
  const Automaton lamp = lamplighterCayleyMachine();
  EXPECT_EQ(levelTableAt(lamp, 9), levelTableAt(lamp, 1));

  const Automaton e2 = exampleTwoAutomaton(AlphabetSchedule::ramp(1));
  const LevelTable& t = levelTableAt(e2, 2);
  EXPECT_EQ(t.letterCount(), 3u);
  EXPECT_EQ(t.labeling(0), Permutation::cycle(3, {0, 1, 2}));
  EXPECT_EQ(t.labeling(1), Permutation::cycle(3, {0, 1}));

  const Automaton z = z2z4Automaton();
  EXPECT_EQ(levelTableAt(shift(z, 3), 1), levelTableAt(z, 4));
  EXPECT_EQ(labelingAt(z, 2, 1), Permutation::identity(2));
  EXPECT_EQ(labelingAt(z, 1, 0), Permutation::cycle(2, {0, 1}));
  const Automaton id = identityDiagonal(3, AlphabetSchedule::ramp(0));
  for (Level i = 1; i < 6; ++i) {
    for (State q = 0; q < 3; ++q) EXPECT_TRUE(labelingAt(id, i, q).isIdentity());
  }
}

TEST(Automaton, LabelingThrowsOnNonInvertibleRow) {
  const Automaton bad = Automaton::explicitPeriodic(AlphabetSchedule::constant(2), {},
                                                    {LevelTable({{0, 0}}, {{1, 1}})});
  EXPECT_FALSE(isInvertibleAt(bad, 1));
  try {
    labelingAt(bad, 1, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotInvertibleAtLevel);
  }
  EXPECT_THROW(evaluateState(invert(bad), 0, Word{0}), Error);
}

TEST(Automaton, EvaluateState) {
  const Automaton z = z2z4Automaton();
  EXPECT_EQ(evaluateState(z, 0, Word{0, 0}), (Word{1, 1}));
  EXPECT_EQ(evaluateState(z, 1, Word{1, 0}), (Word{0, 1}));
  EXPECT_EQ(evaluateState(z, 0, Word{}), Word{});
  const Automaton e2 = exampleTwoAutomaton(AlphabetSchedule::constant(3));
  EXPECT_EQ(evaluateState(e2, 0, Word{0, 0}), (Word{1, 1}));
  EXPECT_EQ(evaluateState(invert(e2), 0, Word{1, 1}), (Word{0, 0}));
  try {
    evaluateState(z, 0, Word{0, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidWord);
  }
}

TEST(Automaton, Invert) {
  const Automaton id = identityDiagonal(2, AlphabetSchedule::ramp(0));
  EXPECT_TRUE(tablesEqual(invert(id), id, 20));
  const Automaton lamp = lamplighterCayleyMachine();
  EXPECT_TRUE(tablesEqual(invert(invert(lamp)), lamp, 20));
  EXPECT_TRUE(isReversibleAt(lamp, 1));
  EXPECT_TRUE(isReversibleAt(lamp, 17));
  EXPECT_FALSE(isReversibleAt(invert(lamp), 1));
  EXPECT_TRUE(isReversibleAt(z2z4Automaton(), 1));
}

TEST(Automaton, BiReversibility) {
  for (const auto& s : {AlphabetSchedule::ramp(1), AlphabetSchedule::constant(2),
                        AlphabetSchedule::periodic({3, 4, 6, 8})}) {
    const auto v = isBiReversible(exampleTwoAutomaton(s));
    EXPECT_TRUE(v.holds);
    EXPECT_EQ(v.scope, VerdictScope::ExactAllLevels);
  }
  const auto lamp = isBiReversible(lamplighterCayleyMachine());
  EXPECT_FALSE(lamp.holds);
  EXPECT_EQ(lamp.failLevel, 1u);
  EXPECT_EQ(lamp.reason, BiReversibilityFailure::InverseNotReversible);
  EXPECT_TRUE(isBiReversible(z4Automaton()).holds);
  EXPECT_EQ(isBiReversible(z4Automaton()).scope, VerdictScope::ExactAllLevels);

  // A ramp family without a closed-form flag is checked to the given depth.
  const Automaton lampRamp = Automaton::fromGenerator(
      AlphabetSchedule::ramp(1), 2,
      [](Level, std::size_t d) {
        LevelTable t(2, d);
        for (State q = 0; q < 2; ++q)
          for (Letter x = 0; x < d; ++x) t.set(q, x, q, (x + q) % d);
        return t;
      },
      "rotations", false, false);
  const auto v = isBiReversible(lampRamp, 7);
  EXPECT_TRUE(v.holds);
  EXPECT_EQ(v.scope, VerdictScope::CheckedUpToLevel);
  EXPECT_EQ(v.checkedUpTo, 7u);
}

TEST(Automaton, NotReversibleFailure) {
  const Automaton a = Automaton::explicitPeriodic(
      AlphabetSchedule::constant(2), {LevelTable::identity(2, 2)},
      {LevelTable({{0, 0}, {0, 0}}, {{0, 1}, {0, 1}})});
  const auto v = isBiReversible(a);
  EXPECT_FALSE(v.holds);
  EXPECT_EQ(v.failLevel, 2u);
  EXPECT_EQ(v.reason, BiReversibilityFailure::NotReversible);
}

TEST(Automaton, Shift) {
  const Automaton z = z2z4Automaton();
  EXPECT_TRUE(tablesEqual(shift(z, 0), z, 20));
  EXPECT_EQ(levelTableAt(shift(z, 1), 1), levelTableAt(z, 2));
  const Automaton e2 = exampleTwoAutomaton(AlphabetSchedule::ramp(1));
  EXPECT_EQ(shift(e2, 2).schedule().sizeAt(1), 4u);
  EXPECT_TRUE(tablesEqual(shift(shift(e2, 2), 3), shift(e2, 5), 20));
}

TEST(Automaton, Restrict) {
  const Automaton z = z2z4Automaton();
  const Automaton r0 = restrict(z, 0);
  for (const Word& w : oracle::allWords(z.schedule(), 5)) {
    EXPECT_EQ(evaluateState(r0, 0, w), w);
    EXPECT_EQ(evaluateState(r0, 1, w), w);
  }
  EXPECT_EQ(evaluateState(restrict(z, 2), 0, Word{0, 0, 1}), (Word{1, 1, 1}));
  EXPECT_TRUE(isBiReversible(restrict(z, 3)).holds);

  const Automaton e1 = exampleOneAutomaton(AlphabetSchedule::ramp(0));
  const Automaton r = restrict(e1, 4);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Word w = oracle::randomWord(e1.schedule(), 8, rng);
    const Word full = evaluateState(e1, 1, w);
    Word expect(full.begin(), full.begin() + 4);
    expect.insert(expect.end(), w.begin() + 4, w.end());
    EXPECT_EQ(evaluateState(r, 1, w), expect);
  }
}

TEST(Automaton, Dual) {
  const Automaton b = bellaterraAutomaton();
  const Automaton d = dual(b);
  EXPECT_EQ(d.stateCount(), 2u);
  EXPECT_EQ(d.schedule(), AlphabetSchedule::constant(3));
  EXPECT_TRUE(tablesEqual(dual(d), b, 3));
  EXPECT_TRUE(tablesEqual(dual(dual(lamplighterCayleyMachine())), lamplighterCayleyMachine(), 3));

  const Automaton one = Automaton::explicitPeriodic(AlphabetSchedule::constant(4), {},
                                                    {LevelTable::identity(1, 4)});
  const Automaton od = dual(one);
  EXPECT_EQ(od.stateCount(), 4u);
  for (State q = 0; q < 4; ++q) EXPECT_EQ(od.levelTable(1).out(q, 0), 0u);
  EXPECT_THROW(dual(z2z4Automaton()), Error);
  EXPECT_THROW(dual(exampleTwoAutomaton(AlphabetSchedule::ramp(1))), Error);
}

TEST(Automaton, Diagonality) {
  const Automaton e1 = exampleOneAutomaton(AlphabetSchedule::ramp(0));
  for (Level i = 1; i <= 30; ++i) EXPECT_TRUE(isDiagonalAt(e1, i));
  EXPECT_FALSE(isDiagonalAt(z2z4Automaton(), 1));
  EXPECT_TRUE(isDiagonalAt(z2z4Automaton(), 2));
}

TEST(Automaton, ExplicitPeriodicValidatesSizes) {
  EXPECT_THROW(Automaton::explicitPeriodic(AlphabetSchedule::periodic({2, 3}), {},
                                           {LevelTable::identity(1, 2)}),
               Error);
  EXPECT_THROW(Automaton::explicitPeriodic(AlphabetSchedule::ramp(0), {}, {LevelTable::identity(1, 1)}),
               Error);
  EXPECT_THROW(Automaton::explicitPeriodic(AlphabetSchedule::constant(2), {}, {}), Error);
  const Automaton a = Automaton::explicitPeriodic(
      AlphabetSchedule::periodic({2, 3}), {},
      {LevelTable::identity(2, 2), LevelTable::identity(2, 3)});
  ASSERT_TRUE(a.periodicity());
  EXPECT_EQ(a.periodicity()->period, 2u);
}

TEST(Automaton, PeriodAlignmentUsesLcm) {
  const Automaton a = Automaton::explicitPeriodic(
      AlphabetSchedule::periodic({2, 3}), {},
      {LevelTable::identity(1, 2), LevelTable::identity(1, 3), LevelTable::diagonal({Permutation::cycle(2, {0, 1})}),
       LevelTable::identity(1, 3)});
  EXPECT_EQ(a.periodicity()->period, 4u);
  EXPECT_EQ(a.levelTable(7), a.levelTable(3));
}

TEST(Automaton, EmbedOnSubsequence) {
  const Automaton a = exampleTwoAutomaton(AlphabetSchedule::constant(3));
  const Automaton same = embedOnSubsequence(a, SubsequenceRule::arithmetic(1, 1), a.schedule());
  EXPECT_TRUE(tablesEqual(same, a, 20));

  const Automaton z = z2z4Automaton();
  const Automaton b = embedOnSubsequence(z, SubsequenceRule::arithmetic(2, 2), AlphabetSchedule::constant(2));
  for (Level i = 1; i <= 20; i += 2) EXPECT_TRUE(b.levelTable(i).isIdentity());
  for (Level i = 2; i <= 20; i += 2) EXPECT_EQ(b.levelTable(i), z.levelTable(i / 2));
  EXPECT_TRUE(isBiReversible(b).holds);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const Word w = oracle::randomWord(b.schedule(), 12, rng);
    Word sub;
    for (std::size_t j = 1; j < w.size(); j += 2) sub.push_back(w[j]);
    const Word out = evaluateState(b, 0, w);
    Word proj;
    for (std::size_t j = 1; j < out.size(); j += 2) proj.push_back(out[j]);
    EXPECT_EQ(proj, evaluateState(z, 0, sub));
    for (std::size_t j = 0; j < w.size(); j += 2) EXPECT_EQ(out[j], w[j]);
  }

  try {
    embedOnSubsequence(a, SubsequenceRule::arithmetic(1, 2), AlphabetSchedule::periodic({4, 3}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ScheduleMismatch);
  }
}

TEST(Automaton, SubsequenceRuleListThenTail) {
  SubsequenceRule r{{2, 5, 6}, 1, 3};
  EXPECT_EQ(r.value(1), 2u);
  EXPECT_EQ(r.value(3), 6u);
  EXPECT_EQ(r.value(4), 9u);
  EXPECT_EQ(r.value(5), 12u);
  EXPECT_EQ(r.preimage(9), 4u);
  EXPECT_FALSE(r.preimage(7));
  EXPECT_THROW((SubsequenceRule{{3, 3}, 1, 1}).validate(), Error);
  EXPECT_THROW((SubsequenceRule{{}, 1, 0}).validate(), Error);
}

TEST(Automaton, CanonicalPeriodicForm) {
  const LevelTable f = LevelTable::diagonal({Permutation::cycle(2, {0, 1})});
  const LevelTable e = LevelTable::identity(1, 2);
  const Automaton a = Automaton::explicitPeriodic(AlphabetSchedule::constant(2), {f, e, f},
                                                  {e, f, e, f});
  const PeriodicForm form = canonicalPeriodicForm(a);
  EXPECT_EQ(form.period.size(), 2u);
  EXPECT_EQ(form.prefix.size(), 0u);
  EXPECT_EQ(form.period[0], f);
  EXPECT_THROW(canonicalPeriodicForm(exampleTwoAutomaton(AlphabetSchedule::ramp(1))), Error);
}

TEST(AutomatonProperties, InverseRoundTripOnCatalog) {
  std::mt19937_64 rng(2024);
  for (const Automaton& a : catalog()) {
    const Automaton inv = invert(a);
    for (std::size_t depth = 0; depth <= 12; ++depth) {
      for (int trial = 0; trial < 100; ++trial) {
        const Word w = oracle::randomWord(a.schedule(), depth, rng);
        for (State q = 0; q < a.stateCount(); ++q) {
          const Word image = evaluateState(a, q, w);
          ASSERT_EQ(image.size(), w.size());
          ASSERT_EQ(evaluateState(inv, q, image), w) << a.family();
          if (depth > 0) {
            const Word head(w.begin(), w.end() - 1);
            const Word headImage = evaluateState(a, q, head);
            ASSERT_TRUE(std::equal(headImage.begin(), headImage.end(), image.begin()));
          }
        }
      }
    }
  }
}

TEST(AutomatonProperties, PartitionAgreesFromBothStates) {
  for (const Automaton& a : catalog()) {
    if (a.stateCount() != 2 || !isBiReversible(a, 12).holds) continue;
    for (Level i = 1; i <= 12; ++i) {
      const LevelTable& t = a.levelTable(i);
      for (Letter x = 0; x < t.letterCount(); ++x) {
        const bool fromQ1 = t.next(0, x) == 0;
        const bool fromQ2 = t.next(1, x) == 1;
        EXPECT_EQ(fromQ1, fromQ2) << a.family() << " level " << i;
      }
    }
  }
}

TEST(AutomatonProperties, RestrictAgreesUpToK) {
  std::mt19937_64 rng(99);
  for (const Automaton& a : catalog()) {
    for (std::size_t k = 0; k <= 6; ++k) {
      const Automaton r = restrict(a, k);
      for (int trial = 0; trial < 20; ++trial) {
        const Word w = oracle::randomWord(a.schedule(), k, rng);
        for (State q = 0; q < a.stateCount(); ++q) ASSERT_EQ(evaluateState(r, q, w), evaluateState(a, q, w));
      }
    }
  }
}

TEST(AutomatonProperties, ConcurrentReadsAgree) {
  const Automaton e1 = exampleOneAutomaton(AlphabetSchedule::ramp(0));
  std::vector<std::thread> threads;
  std::vector<int> ok(4, 1);
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      for (Level i = 1; i <= 60; ++i) {
        if (!e1.levelTable(i).isDiagonal() || e1.inverseLevelTable(i).letterCount() != i) ok[t] = 0;
      }
    });
  }
  for (auto& th : threads) th.join();
  for (int v : ok) EXPECT_EQ(v, 1);
}
