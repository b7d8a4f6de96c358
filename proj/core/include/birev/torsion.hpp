#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "birev/automaton.hpp"
#include "birev/group_word.hpp"

namespace birev {

/// Letters that keep q1 in place (Z) and letters that swap the two states (T)
/// at one level of a 2-state bi-reversible automaton.
struct StatePartition {
  std::vector<Letter> keep;  // Z_i
  std::vector<Letter> swap;  // T_i
};

/// Throws NotTwoState or NotBiReversibleAtLevel.
StatePartition biReversiblePartitionAt(const Automaton& a, Level level);

/// gamma_i = alpha_i^-1 beta_i, with alpha, beta the labelings of q1, q2.
Permutation gammaAt(const Automaton& a, Level level);

/// c^N(w) for c = q1^-1 q2, computed letter by letter: letter i picks up
/// gamma_i^{+-N}, the sign flipping after every letter in T_i.
Word cPowerPositional(const Automaton& a, std::int64_t n, std::span<const Letter> w);

/// The word q1^-1 q2.
inline GroupWord stateQuotient() { return GroupWord({Factor{0, -1}, Factor{1, 1}}); }

/// r! for a schedule bounded by r; c^{r!} acts trivially. Throws
/// UnboundedSchedule.
std::uint64_t torsionExponentBound(const Automaton& a);

}  // namespace birev
