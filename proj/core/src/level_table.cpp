#include "birev/level_table.hpp"

#include <string>

#include "birev/error.hpp"

namespace birev {

LevelTable::LevelTable(std::size_t states, std::size_t letters)
    : states_(states),
      letters_(letters),
      transition_(states * letters, 0),
      output_(states * letters, 0) {}

LevelTable::LevelTable(std::vector<std::vector<State>> transition,
                       std::vector<std::vector<Letter>> output) {
  if (transition.empty() || transition.size() != output.size())
    throw Error(ErrorKind::InvalidTable, "transition/output state counts differ");
  states_ = transition.size();
  letters_ = transition.front().size();
  if (letters_ == 0) throw Error(ErrorKind::InvalidTable, "empty alphabet");
  transition_.reserve(states_ * letters_);
  output_.reserve(states_ * letters_);
  for (std::size_t q = 0; q < states_; ++q) {
    if (transition[q].size() != letters_ || output[q].size() != letters_)
      throw Error(ErrorKind::InvalidTable, "ragged level table");
    for (std::size_t x = 0; x < letters_; ++x) {
      if (transition[q][x] >= states_)
        throw Error(ErrorKind::InvalidTable, "transition target out of range");
      if (output[q][x] >= letters_)
        throw Error(ErrorKind::InvalidTable, "output letter out of range");
      transition_.push_back(transition[q][x]);
      output_.push_back(output[q][x]);
    }
  }
}

LevelTable LevelTable::identity(std::size_t states, std::size_t letters) {
  LevelTable t(states, letters);
  for (State q = 0; q < states; ++q) {
    for (Letter x = 0; x < letters; ++x) t.set(q, x, q, x);
  }
  return t;
}

LevelTable LevelTable::diagonal(const std::vector<Permutation>& labelings) {
  if (labelings.empty()) throw Error(ErrorKind::InvalidTable, "no states");
  const std::size_t d = labelings.front().size();
  LevelTable t(labelings.size(), d);
  for (State q = 0; q < labelings.size(); ++q) {
    if (labelings[q].size() != d)
      throw Error(ErrorKind::SizeMismatch, "labelings of one level differ in size");
    for (Letter x = 0; x < d; ++x) t.set(q, x, q, labelings[q](x));
  }
  return t;
}

bool LevelTable::isInvertible() const {
  for (State q = 0; q < states_; ++q) {
    std::span<const Letter> row(output_.data() + q * letters_, letters_);
    if (!Permutation::isBijection(row)) return false;
  }
  return true;
}

bool LevelTable::isReversible() const {
  std::vector<bool> hit(states_);
  for (Letter x = 0; x < letters_; ++x) {
    std::fill(hit.begin(), hit.end(), false);
    for (State q = 0; q < states_; ++q) {
      const State p = next(q, x);
      if (hit[p]) return false;
      hit[p] = true;
    }
  }
  return true;
}

bool LevelTable::isDiagonal() const {
  for (State q = 0; q < states_; ++q) {
    for (Letter x = 0; x < letters_; ++x) {
      if (next(q, x) != q) return false;
    }
  }
  return true;
}

bool LevelTable::isIdentity() const {
  for (State q = 0; q < states_; ++q) {
    for (Letter x = 0; x < letters_; ++x) {
      if (next(q, x) != q || out(q, x) != x) return false;
    }
  }
  return true;
}

Permutation LevelTable::labeling(State q) const {
  std::vector<Letter> row(output_.begin() + static_cast<std::ptrdiff_t>(q * letters_),
                          output_.begin() + static_cast<std::ptrdiff_t>((q + 1) * letters_));
  if (!Permutation::isBijection(row))
    throw Error(ErrorKind::NotInvertibleAtLevel,
                "labeling of state " + std::to_string(q) + " is not a permutation");
  return Permutation(std::move(row));
}

LevelTable LevelTable::inverse() const {
  // phi'(q, x) = phi(q, sigma_q^-1(x)), psi'(q, x) = sigma_q^-1(x).
  LevelTable inv(states_, letters_);
  for (State q = 0; q < states_; ++q) {
    const Permutation back = labeling(q).inverse();
    for (Letter x = 0; x < letters_; ++x) {
      const Letter y = back(x);
      inv.set(q, x, next(q, y), y);
    }
  }
  return inv;
}

std::vector<std::vector<State>> LevelTable::transitionRows() const {
  std::vector<std::vector<State>> rows(states_);
  for (State q = 0; q < states_; ++q) {
    rows[q].assign(transition_.begin() + static_cast<std::ptrdiff_t>(q * letters_),
                   transition_.begin() + static_cast<std::ptrdiff_t>((q + 1) * letters_));
  }
  return rows;
}

std::vector<std::vector<Letter>> LevelTable::outputRows() const {
  std::vector<std::vector<Letter>> rows(states_);
  for (State q = 0; q < states_; ++q) {
    rows[q].assign(output_.begin() + static_cast<std::ptrdiff_t>(q * letters_),
                   output_.begin() + static_cast<std::ptrdiff_t>((q + 1) * letters_));
  }
  return rows;
}

}  // namespace birev
