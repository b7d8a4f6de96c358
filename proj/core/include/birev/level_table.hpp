#pragma once

#include <cstddef>
#include <vector>

#include "birev/alphabet.hpp"
#include "birev/permutation.hpp"

namespace birev {

using State = std::uint32_t;

/// Transition and output functions of one level: phi_i and psi_i as
/// [state][letter] matrices.
class LevelTable {
 public:
  LevelTable() = default;
  LevelTable(std::size_t states, std::size_t letters);
  /// Throws InvalidTable on ragged rows or out-of-range entries.
  LevelTable(std::vector<std::vector<State>> transition,
             std::vector<std::vector<Letter>> output);

  static LevelTable identity(std::size_t states, std::size_t letters);
  /// phi(q, x) = q and psi(q, .) = labelings[q].
  static LevelTable diagonal(const std::vector<Permutation>& labelings);

  std::size_t stateCount() const { return states_; }
  std::size_t letterCount() const { return letters_; }

  State next(State q, Letter x) const { return transition_[q * letters_ + x]; }
  Letter out(State q, Letter x) const { return output_[q * letters_ + x]; }
  void set(State q, Letter x, State next, Letter out) {
    transition_[q * letters_ + x] = next;
    output_[q * letters_ + x] = out;
  }

  bool isInvertible() const;
  bool isReversible() const;
  bool isDiagonal() const;
  /// True iff every output row is the identity and every transition is a
  /// self-loop.
  bool isIdentity() const;

  /// sigma_{i,q}; throws NotInvertibleAtLevel if the row is not bijective.
  Permutation labeling(State q) const;

  /// Table of the inverse automaton at this level.
  LevelTable inverse() const;

  std::vector<std::vector<State>> transitionRows() const;
  std::vector<std::vector<Letter>> outputRows() const;

  bool operator==(const LevelTable&) const = default;

 private:
  std::size_t states_ = 0;
  std::size_t letters_ = 0;
  std::vector<State> transition_;
  std::vector<Letter> output_;
};

}  // namespace birev
