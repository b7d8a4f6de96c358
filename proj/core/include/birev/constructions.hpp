#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "birev/automaton.hpp"
#include "birev/group_word.hpp"

namespace birev {

// Integer permutations a, b of {1, 2, ...} for which the n-th reduced word
// in shortlex order (a < a^-1 < b < b^-1) maps 1 to n.
std::uint64_t wordOrderPermA(std::uint64_t n);
std::uint64_t wordOrderPermB(std::uint64_t n);

/// The first `count` freely reduced words over {a, b}, empty word first.
std::vector<GroupWord> shortlexReducedWords(std::size_t count);

/// Two-state diagonal automaton whose labelings follow a and b where they
/// stay inside the level's alphabet; the remaining letters are matched
/// order-preservingly.
Automaton exampleOneAutomaton(const AlphabetSchedule& schedule);

struct ExampleTwoOptions {
  Letter flipLetter = 0;   // x^0
  Letter fixedLetter = 1;  // x^1
  bool operator==(const ExampleTwoOptions&) const = default;
};

/// States flip exactly on x^0; q1 is labeled by the long cycle
/// x^0 -> x^1 -> (remaining letters ascending) -> x^0 and q2 by the
/// transposition (x^0 x^1). Throws SizeTooSmall if some |X_i| < 2.
Automaton exampleTwoAutomaton(const AlphabetSchedule& schedule, ExampleTwoOptions options = {});

/// Per-state labelings for the levels of a periodic diagonal automaton.
struct DiagonalLabelings {
  std::vector<std::vector<Permutation>> prefix;  // [level][state]
  std::vector<std::vector<Permutation>> period;
};

/// phi(q, x) = q with the given labelings. Throws SizeMismatch.
Automaton diagonalAutomaton(const AlphabetSchedule& schedule, const DiagonalLabelings& labelings);

/// Diagonal automaton with labelings produced by rule(level, state, size).
Automaton diagonalAutomaton(const AlphabetSchedule& schedule, std::size_t states,
                            std::function<Permutation(Level, State, std::size_t)> rule,
                            std::string family = "diagonal");

/// Index set I: the explicit list, then optionally every integer from
/// `consecutiveFrom` on.
struct IndexSet {
  std::vector<std::size_t> list;
  std::optional<std::size_t> consecutiveFrom;
  bool operator==(const IndexSet&) const = default;
};

/// Schedule with sizes (i) for i in I; a finite I is padded with 1-letter
/// levels.
AlphabetSchedule indexSetSchedule(const IndexSet& indices);

/// Diagonal automaton over indexSetSchedule(I) with q1 labeled by the long
/// cycle and q2 by the transposition (0 1). Throws IndexTooSmall.
Automaton giAutomaton(const IndexSet& indices);

/// Over constant binary alphabets, period 2: odd levels swap states on
/// letter 1 with both labelings the flip, even levels are diagonal with q1
/// the flip and q2 the identity.
Automaton z2z4Automaton();
/// z2z4Automaton on levels 1..2, identity afterwards.
Automaton z4Automaton();

/// phi(q, x) = psi(q, x) = q xor x over the binary alphabet.
Automaton lamplighterCayleyMachine();

/// a = flip (c, c), b = (a, b), c = (b, a) over the binary alphabet.
Automaton bellaterraAutomaton();
Automaton bellaterraDual();

/// One of the 12 bi-reversible 2-state binary level tables. 0-3: no letter
/// swaps states; 4-7: both letters swap; the labeling pair is indexed by
/// (alpha is flip, beta is flip). 8-11: only letter 0 (8, 9) or only
/// letter 1 (10, 11) swaps, with alpha = beta = identity or flip.
LevelTable binaryBiReversibleLevel(int type);
inline constexpr int kBinaryBiReversibleLevelTypes = 12;

/// Levels drawn independently from the 12 types; deterministic in `seed`.
Automaton randomTwoStateBinaryBiReversible(std::uint64_t seed, std::size_t prefixLen,
                                           std::size_t periodLen);

/// A uniformly drawn 2-state bi-reversible table over d letters.
LevelTable randomTwoStateBiReversibleLevel(std::mt19937_64& rng, std::size_t letters);

/// 2-state bi-reversible automaton with random levels over a bounded
/// schedule; levels are drawn for one normalized prefix and period.
Automaton randomTwoStateBiReversible(std::uint64_t seed, const AlphabetSchedule& schedule,
                                     std::size_t prefixLen, std::size_t periodLen);

}  // namespace birev
