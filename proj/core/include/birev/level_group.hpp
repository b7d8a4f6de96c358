#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "birev/automaton.hpp"
#include "birev/perm_group.hpp"

namespace birev {

struct LevelGroupBudget {
  std::size_t orderCap = 1'000'000;
  std::size_t leafCap = 1'000'000;
  /// Upper bound on stored permutation entries (elements x leaves).
  std::size_t memoryCap = std::size_t{1} << 28;
};

/// The finite group G(A|^k) as permutations of the level-k words.
struct LevelGroup {
  Level level = 0;
  std::size_t leafCount = 1;
  std::vector<PointPerm> elements;  // discovery order, identity first
  std::uint64_t order = 1;
  std::vector<PointPerm> generatorImages;  // indexed by state
};

/// Mixed-radix index of a word; the first letter is most significant.
std::size_t leafIndex(const AlphabetSchedule& schedule, std::span<const Letter> word);
Word leafWord(const AlphabetSchedule& schedule, std::size_t k, std::size_t index);

/// Leaf permutation of every state at level k. Throws MemoryBudget when the
/// level has more than leafCap words.
std::vector<PointPerm> generatorLeafPerms(const Automaton& a, std::size_t k,
                                          std::size_t leafCap = 1'000'000);

/// Throws OrderCapExceeded or MemoryBudget.
LevelGroup levelGroup(const Automaton& a, std::size_t k, const LevelGroupBudget& budget = {});

/// |G(A|^k)| without listing the elements.
std::uint64_t levelGroupOrder(const Automaton& a, std::size_t k,
                              const LevelGroupBudget& budget = {});

/// Image of a level-(k+1) element on level k. The map is a homomorphism.
PointPerm truncateToLevel(const AlphabetSchedule& schedule, std::size_t k, const PointPerm& p);

/// Size of the orbit of `seed` (|seed| = k) under G(A).
std::size_t orbitAtLevel(const Automaton& a, std::size_t k, std::span<const Letter> seed,
                         std::size_t leafCap = 1'000'000);
bool isLevelTransitiveAt(const Automaton& a, std::size_t k, std::size_t leafCap = 1'000'000);

}  // namespace birev
