#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "birev/automaton.hpp"
#include "birev/group_word.hpp"

namespace birev {

struct Congruence {
  std::uint64_t residue;
  std::uint64_t modulus;
};

/// Smallest N >= 0 with N = r_j (mod m_j) for all j. Throws NonCoprimeModuli.
std::uint64_t crtSolve(std::span<const Congruence> congruences);

/// Smallest e >= 0 with p^e(x) = y. Throws NotOnSameCycle.
std::uint64_t cycleDiscreteLog(const Permutation& p, Letter x, Letter y);

/// Letters and permutations of one level of the transposition/long-cycle
/// automaton, read back from its table.
struct CycleLevel {
  Letter flip;      // x^0: the only letter that swaps states
  Letter fixed;     // x^1 = tau(x^0) = pi(x^0)
  Permutation tau;  // labeling of q2
  Permutation pi;   // labeling of q1
  Permutation sigma;  // pi tau^-1, a cycle of length d-1 fixing x^1
};

/// Throws InvalidTable if the level does not have the expected shape.
CycleLevel cycleLevelAt(const Automaton& a, Level level);

struct SteeringResult {
  GroupWord element;         // g = c^{n1} b^-1 c^{n0} b with c = a b^-1
  std::uint64_t n0 = 0;
  std::uint64_t n1 = 0;
  Word base;                 // x^1_1 ... x^1_t
  Word target;
};

/// Finds g with g(x^1_1...x^1_t) = target. Requires |X_i| >= 3 and
/// pairwise coprime |X_i| - 1 over the target's levels. Throws
/// PreconditionSize, PreconditionCoprimality, VerificationFailed.
SteeringResult steerToWord(const Automaton& a, std::span<const Letter> target);

}  // namespace birev
