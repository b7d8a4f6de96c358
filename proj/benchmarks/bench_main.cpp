#include <benchmark/benchmark.h>

#include "birev/classify.hpp"
#include "birev/constructions.hpp"
#include "birev/group.hpp"
#include "birev/level_group.hpp"
#include "birev/steering.hpp"

using namespace birev;

namespace {

void BM_DecideEqualPeriodic(benchmark::State& state) {
  const Automaton a = z2z4Automaton();
  const GroupWord g = (GroupWord::generator(0) * GroupWord::generator(1)).power(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(decideIdentity(a, g));
}
BENCHMARK(BM_DecideEqualPeriodic)->Arg(2)->Arg(8)->Arg(32);

void BM_RelationSearchRamp(benchmark::State& state) {
  const Automaton a = exampleTwoAutomaton(AlphabetSchedule::ramp(1));
  SearchBudget budget;
  budget.maxDepth = 40;
  for (auto _ : state) benchmark::DoNotOptimize(relationSearch(a, state.range(0), budget));
}
BENCHMARK(BM_RelationSearchRamp)->Arg(4)->Arg(6)->Arg(8);

void BM_LevelGroupOrder(benchmark::State& state) {
  const Automaton a = bellaterraDual();
  for (auto _ : state) benchmark::DoNotOptimize(levelGroupOrder(a, state.range(0)));
}
BENCHMARK(BM_LevelGroupOrder)->DenseRange(3, 7);

void BM_Steering(benchmark::State& state) {
  const Automaton a = exampleTwoAutomaton(AlphabetSchedule({3, 4, 6, 8, 12, 14}, ConstantTail{2}));
  const Word target(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(steerToWord(a, target));
}
BENCHMARK(BM_Steering)->DenseRange(1, 6);

void BM_ClassificationSweep(benchmark::State& state) {
  std::vector<Automaton> instances;
  for (int x = 0; x < kBinaryBiReversibleLevelTypes; ++x) {
    for (int y = 0; y < kBinaryBiReversibleLevelTypes; ++y) {
      instances.push_back(Automaton::explicitPeriodic(AlphabetSchedule::constant(2), {binaryBiReversibleLevel(x)},
                                                      {binaryBiReversibleLevel(y)}));
    }
  }
  for (auto _ : state) {
    for (const Automaton& a : instances) benchmark::DoNotOptimize(classifyTwoStateBinary(a));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(instances.size()));
}
BENCHMARK(BM_ClassificationSweep);

}  // namespace

BENCHMARK_MAIN();
