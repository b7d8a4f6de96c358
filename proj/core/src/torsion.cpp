#include "birev/torsion.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "birev/error.hpp"

namespace birev {

namespace {

void requireTwoStateBiReversible(const Automaton& a, Level level) {
  if (a.stateCount() != 2) throw Error(ErrorKind::NotTwoState, "automaton must have two states");
  const LevelTable& t = a.levelTable(level);
  if (!t.isInvertible() || !t.isReversible() || !t.inverse().isReversible())
    throw Error(ErrorKind::NotBiReversibleAtLevel,
                "automaton is not bi-reversible at level " + std::to_string(level));
}

std::vector<Letter> imageOf(const Permutation& p, const std::vector<Letter>& set) {
  std::vector<Letter> out;
  for (Letter x : set) out.push_back(p(x));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

StatePartition biReversiblePartitionAt(const Automaton& a, Level level) {
  requireTwoStateBiReversible(a, level);
  const LevelTable& t = a.levelTable(level);
  StatePartition part;
  for (Letter x = 0; x < t.letterCount(); ++x) {
    (t.next(0, x) == 0 ? part.keep : part.swap).push_back(x);
  }
  if (imageOf(t.labeling(0), part.keep) != imageOf(t.labeling(1), part.keep))
    throw Error(ErrorKind::NotBiReversibleAtLevel,
                "labelings disagree on the image of Z at level " + std::to_string(level));
  return part;
}

Permutation gammaAt(const Automaton& a, Level level) {
  const StatePartition part = biReversiblePartitionAt(a, level);
  const LevelTable& t = a.levelTable(level);
  Permutation gamma = t.labeling(0).inverse().compose(t.labeling(1));
  if (imageOf(gamma, part.keep) != part.keep)
    throw Error(ErrorKind::NotBiReversibleAtLevel, "gamma does not preserve Z at level " +
                                                       std::to_string(level));
  return gamma;
}

Word cPowerPositional(const Automaton& a, std::int64_t n, std::span<const Letter> w) {
  if (!a.schedule().isValid(w)) throw Error(ErrorKind::InvalidWord, "word is not valid for the schedule");
  Word out(w.size());
  std::int64_t exponent = n;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Level level = i + 1;
    const Permutation gamma = gammaAt(a, level);
    out[i] = gamma.power(exponent)(w[i]);
    if (a.levelTable(level).next(0, w[i]) != 0) exponent = -exponent;
  }
  return out;
}

std::uint64_t torsionExponentBound(const Automaton& a) {
  const auto sup = a.schedule().bound();
  if (!sup) throw Error(ErrorKind::UnboundedSchedule, "schedule is unbounded");
  std::uint64_t f = 1;
  for (std::uint64_t r = 2; r <= *sup; ++r) {
    if (f > std::numeric_limits<std::uint64_t>::max() / r)
      throw Error(ErrorKind::UnboundedSchedule, "r! overflows 64 bits");
    f *= r;
  }
  return f;
}

}  // namespace birev
