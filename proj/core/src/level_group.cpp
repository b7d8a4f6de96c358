#include "birev/level_group.hpp"

#include <algorithm>
#include <string>

#include "birev/error.hpp"

namespace birev {

std::size_t leafIndex(const AlphabetSchedule& schedule, std::span<const Letter> word) {
  std::size_t index = 0;
  for (std::size_t i = 0; i < word.size(); ++i) index = index * schedule.sizeAt(i + 1) + word[i];
  return index;
}

Word leafWord(const AlphabetSchedule& schedule, std::size_t k, std::size_t index) {
  Word w(k);
  for (std::size_t i = k; i-- > 0;) {
    const std::size_t d = schedule.sizeAt(i + 1);
    w[i] = static_cast<Letter>(index % d);
    index /= d;
  }
  return w;
}

std::vector<PointPerm> generatorLeafPerms(const Automaton& a, std::size_t k, std::size_t leafCap) {
  const std::size_t leaves = a.schedule().leafCount(k);
  if (leaves > leafCap)
    throw Error(ErrorKind::MemoryBudget, "level " + std::to_string(k) + " has " +
                                             std::to_string(leaves) + " words, above the leaf cap");
  std::vector<PointPerm> perms(a.stateCount(), PointPerm(leaves));
  const AlphabetSchedule& sched = a.schedule();
  for (std::size_t leaf = 0; leaf < leaves; ++leaf) {
    const Word w = leafWord(sched, k, leaf);
    for (State q0 = 0; q0 < a.stateCount(); ++q0) {
      State q = q0;
      std::size_t image = 0;
      for (std::size_t i = 0; i < k; ++i) {
        const LevelTable& t = a.levelTable(i + 1);
        image = image * t.letterCount() + t.out(q, w[i]);
        q = t.next(q, w[i]);
      }
      perms[q0][leaf] = static_cast<std::uint32_t>(image);
    }
  }
  for (const auto& p : perms) {
    std::vector<bool> hit(leaves, false);
    for (std::uint32_t y : p) {
      if (hit[y]) throw Error(ErrorKind::NotInvertibleAtLevel, "state acts non-bijectively on level " + std::to_string(k));
      hit[y] = true;
    }
  }
  return perms;
}

namespace {

std::vector<PointPerm> withInverses(const std::vector<PointPerm>& gens) {
  std::vector<PointPerm> all;
  for (const auto& g : gens) {
    all.push_back(g);
    all.push_back(invertPerm(g));
  }
  return all;
}

}  // namespace

LevelGroup levelGroup(const Automaton& a, std::size_t k, const LevelGroupBudget& budget) {
  LevelGroup group;
  group.level = k;
  group.generatorImages = generatorLeafPerms(a, k, budget.leafCap);
  group.leafCount = a.schedule().leafCount(k);
  const std::size_t memoryOrderCap = std::max<std::size_t>(1, budget.memoryCap / group.leafCount);
  const std::size_t cap = std::min(budget.orderCap, memoryOrderCap);
  try {
    group.elements = enumerateGroup(withInverses(group.generatorImages), group.leafCount, cap);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::OrderCapExceeded && cap < budget.orderCap)
      throw Error(ErrorKind::MemoryBudget, "level group of level " + std::to_string(k) +
                                               " does not fit the memory budget");
    throw;
  }
  group.order = group.elements.size();
  return group;
}

std::uint64_t levelGroupOrder(const Automaton& a, std::size_t k, const LevelGroupBudget& budget) {
  const auto gens = generatorLeafPerms(a, k, budget.leafCap);
  return groupOrder(gens, a.schedule().leafCount(k), budget.orderCap);
}

PointPerm truncateToLevel(const AlphabetSchedule& schedule, std::size_t k, const PointPerm& p) {
  const std::size_t d = schedule.sizeAt(k + 1);
  PointPerm out(p.size() / d);
  for (std::size_t leaf = 0; leaf < p.size(); leaf += d) {
    out[leaf / d] = static_cast<std::uint32_t>(p[leaf] / d);
  }
  return out;
}

std::size_t orbitAtLevel(const Automaton& a, std::size_t k, std::span<const Letter> seed,
                         std::size_t leafCap) {
  if (seed.size() != k) throw Error(ErrorKind::InvalidWord, "seed length must equal the level");
  if (!a.schedule().isValid(seed)) throw Error(ErrorKind::InvalidWord, "seed is not a valid word");
  const auto gens = withInverses(generatorLeafPerms(a, k, leafCap));
  return orbitOf(gens, a.schedule().leafCount(k),
                 static_cast<std::uint32_t>(leafIndex(a.schedule(), seed)))
      .size();
}

bool isLevelTransitiveAt(const Automaton& a, std::size_t k, std::size_t leafCap) {
  const Word seed(k, 0);
  return orbitAtLevel(a, k, seed, leafCap) == a.schedule().leafCount(k);
}

}  // namespace birev
