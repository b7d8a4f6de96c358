#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "birev/alphabet.hpp"
#include "birev/level_table.hpp"
#include "birev/permutation.hpp"

namespace birev {

/// table(i) == table(i + period) for every level i > prefix.
struct Periodicity {
  std::size_t prefix = 0;
  std::size_t period = 1;

  /// Representative level of `level`'s phase class.
  Level canonical(Level level) const {
    return level <= prefix ? level : prefix + ((level - prefix - 1) % period) + 1;
  }
  std::size_t phaseCount() const { return prefix + period; }
  bool operator==(const Periodicity&) const = default;
};

namespace detail {

/// Produces level tables on demand and memoizes them. Implementations must be
/// pure: build(i) always returns the same table.
class LevelSource {
 public:
  virtual ~LevelSource() = default;

  virtual std::size_t stateCount() const = 0;
  virtual const AlphabetSchedule& schedule() const = 0;
  virtual std::optional<Periodicity> periodicity() const = 0;
  virtual bool closedFormBiReversible() const { return false; }

  const LevelTable& table(Level level) const;
  /// Table of the inverse automaton at `level`, memoized alongside table().
  const LevelTable& inverseTable(Level level) const;

 protected:
  virtual LevelTable build(Level level) const = 0;

 private:
  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<Level, std::unique_ptr<LevelTable>> memo_;
  mutable std::unordered_map<Level, std::unique_ptr<LevelTable>> inverseMemo_;
};

}  // namespace detail

/// A finite-state transducer over a changing alphabet. Values are immutable
/// and cheap to copy; level tables are shared between copies.
class Automaton {
 public:
  /// Tables for levels 1..p from `prefix`, then `period` repeated. The
  /// schedule must have a constant or periodic tail; prefix and period are
  /// normalized against the schedule's own cycle.
  static Automaton explicitPeriodic(AlphabetSchedule schedule,
                                    std::vector<LevelTable> prefix,
                                    std::vector<LevelTable> period,
                                    std::string family = "explicit");

  /// Tables produced by `generator(level, size)`. If `sizeDetermined`, the
  /// table at a level depends only on the alphabet size there, so a bounded
  /// schedule makes the automaton periodic.
  static Automaton fromGenerator(AlphabetSchedule schedule, std::size_t states,
                                 std::function<LevelTable(Level, std::size_t)> generator,
                                 std::string family, bool sizeDetermined,
                                 bool closedFormBiReversible);

  std::size_t stateCount() const { return source_->stateCount(); }
  const AlphabetSchedule& schedule() const { return schedule_; }
  std::size_t shiftOffset() const { return shift_; }

  /// Table of level i of this (possibly shifted) automaton.
  const LevelTable& levelTable(Level level) const { return source_->table(level + shift_); }
  /// Level table of A^{-1}; throws NotInvertibleAtLevel.
  const LevelTable& inverseLevelTable(Level level) const {
    return source_->inverseTable(level + shift_);
  }

  std::optional<Periodicity> periodicity() const;
  bool closedFormBiReversible() const { return source_->closedFormBiReversible(); }

  const std::string& family() const { return family_; }
  const std::vector<std::string>& stateNames() const { return stateNames_; }
  Automaton withStateNames(std::vector<std::string> names) const;
  Automaton withFamily(std::string family) const;

  /// Looks a state up by name ("a", "b", ...) or as "q1", "q2", ...
  std::optional<State> findState(std::string_view name) const;

  /// A^{(i)} sharing this automaton's tables.
  Automaton shifted(std::size_t i) const;

  static Automaton fromSource(std::shared_ptr<const detail::LevelSource> source,
                              std::string family);

 private:
  Automaton(std::shared_ptr<const detail::LevelSource> source, std::string family);

  std::shared_ptr<const detail::LevelSource> source_;
  std::size_t shift_ = 0;
  AlphabetSchedule schedule_;
  std::string family_;
  std::vector<std::string> stateNames_;
};

/// Default state names: a, b, c, ... (q1 -> a).
std::vector<std::string> defaultStateNames(std::size_t count);

inline const LevelTable& levelTableAt(const Automaton& a, Level level) {
  return a.levelTable(level);
}

/// sigma_{i,q}.
Permutation labelingAt(const Automaton& a, Level level, State q);

/// A_q(w). Throws InvalidWord unless w is valid for the schedule.
Word evaluateState(const Automaton& a, State q, std::span<const Letter> w);

/// A^{-1}: phi'(q,x) = phi(q, sigma^-1(x)), psi'(q,x) = sigma^-1(x).
/// Non-invertible levels surface as NotInvertibleAtLevel when touched.
Automaton invert(const Automaton& a);

/// A^{(i)}: the first i levels discarded.
Automaton shift(const Automaton& a, std::size_t i);

/// A|^k: A on levels 1..k, identity beyond.
Automaton restrict(const Automaton& a, std::size_t k);

/// Mealy dual: states and letters swap roles. Throws NotMealy.
Automaton dual(const Automaton& a);

bool isInvertibleAt(const Automaton& a, Level level);
bool isReversibleAt(const Automaton& a, Level level);
bool isDiagonalAt(const Automaton& a, Level level);

/// True iff the automaton has a single constant table over a constant
/// schedule.
bool isMealy(const Automaton& a);

enum class BiReversibilityFailure { NotInvertible, NotReversible, InverseNotReversible };
enum class VerdictScope { ExactAllLevels, CheckedUpToLevel };

struct BiReversibilityVerdict {
  bool holds = true;
  Level failLevel = 0;
  BiReversibilityFailure reason = BiReversibilityFailure::NotInvertible;
  VerdictScope scope = VerdictScope::CheckedUpToLevel;
  Level checkedUpTo = 0;
};

/// Exact for periodic automata (one prefix plus one period is checked) and
/// for families flagged closed-form; otherwise checks levels 1..upToLevel.
BiReversibilityVerdict isBiReversible(const Automaton& a, Level upToLevel = 20);

std::string_view toString(BiReversibilityFailure reason);

/// Strictly increasing index rule: the explicit `list`, then an arithmetic
/// tail. The tail continues from list.back() + step, or from `start` when the
/// list is empty.
struct SubsequenceRule {
  std::vector<Level> list;
  Level start = 1;
  Level step = 1;

  static SubsequenceRule arithmetic(Level start, Level step) { return {{}, start, step}; }

  Level value(std::size_t j) const;  // xi_j, j >= 1
  std::optional<std::size_t> preimage(Level i) const;
  void validate() const;
};

/// B over `host`: identity tables with self-loops off Im(xi), A's table for
/// level i' at level xi_{i'}. Throws ScheduleMismatch if sizes disagree.
Automaton embedOnSubsequence(const Automaton& a, const SubsequenceRule& xi,
                             const AlphabetSchedule& host);

/// Minimal prefix/period description of a periodic automaton.
struct PeriodicForm {
  std::vector<LevelTable> prefix;
  std::vector<LevelTable> period;
  bool operator==(const PeriodicForm&) const = default;
};
/// Throws UndecidableRepresentation if the automaton has no known period.
PeriodicForm canonicalPeriodicForm(const Automaton& a);

/// Table equality on levels 1..depth.
bool tablesEqual(const Automaton& lhs, const Automaton& rhs, Level depth);

}  // namespace birev
