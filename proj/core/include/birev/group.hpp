#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "birev/automaton.hpp"
#include "birev/group_word.hpp"

namespace birev {

/// g(w), factors applied right to left.
Word applyWord(const Automaton& a, const GroupWord& g, std::span<const Letter> w);

/// The section of a product of generators after reading a path. Factors
/// are not reduced while stepping.
struct CompositeSection {
  std::vector<Factor> factors;
  Level level = 1;  // absolute level of the next letter
  bool operator==(const CompositeSection&) const = default;
};

struct SectionStep {
  Letter output;
  CompositeSection next;
};

/// Threads x through every factor, rightmost first.
SectionStep stepSection(const Automaton& a, const CompositeSection& s, Letter x);

struct SearchBudget {
  std::size_t maxDepth = 20;
  std::size_t maxStates = std::size_t{1} << 20;
};

enum class EqualityStatus { Equal, NotEqual, Unknown };
enum class EqualityMethod { PeriodicBFS, DepthBounded };

struct EqualityVerdict {
  EqualityStatus status = EqualityStatus::Unknown;
  EqualityMethod method = EqualityMethod::PeriodicBFS;
  Word witness;                   // for NotEqual
  std::size_t exhaustedDepth = 0; // for Unknown
  std::size_t statesVisited = 0;
  /// (2 * stateCount)^|factors| * phases, saturated; PeriodicBFS only.
  double stateBound = 0;
};

/// Decides g == h by testing g h^-1 on the tree. Exact for automata with a
/// known period; depth-bounded otherwise. Throws BudgetExceeded.
EqualityVerdict decideEqual(const Automaton& a, const GroupWord& g, const GroupWord& h,
                            const SearchBudget& budget = {});

inline EqualityVerdict decideIdentity(const Automaton& a, const GroupWord& g,
                                      const SearchBudget& budget = {}) {
  return decideEqual(a, g, GroupWord{}, budget);
}

/// Smallest n <= maxOrder with g^n == id; nullopt if none is confirmed.
std::optional<std::uint64_t> elementOrder(const Automaton& a, const GroupWord& g,
                                          std::uint64_t maxOrder,
                                          const SearchBudget& budget = {});

struct Relation {
  GroupWord word;
  EqualityStatus status;  // Equal or Unknown
};

/// Freely reduced words of length 1..maxLen in shortlex order with
/// generators ordered q1 < q1^-1 < q2 < q2^-1 < ...
std::vector<GroupWord> reducedWords(std::size_t generators, std::size_t maxLen);

/// Reduced words of length 1..maxLen that are, or could not be shown not
/// to be, the identity.
std::vector<Relation> relationSearch(const Automaton& a, std::size_t maxLen,
                                     const SearchBudget& budget = {});

std::string_view toString(EqualityStatus status);
std::string_view toString(EqualityMethod method);

}  // namespace birev
