#include "birev/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "birev/error.hpp"
#include "birev/group.hpp"

namespace birev {

namespace {

std::uint64_t pow3(unsigned k) {
  std::uint64_t p = 1;
  while (k-- > 0) p *= 3;
  return p;
}

/// Largest k with 2*3^k <= n (n >= 2).
unsigned blockOf(std::uint64_t n) {
  unsigned k = 0;
  while (2 * pow3(k + 1) <= n) ++k;
  return k;
}

std::size_t minimumSize(const AlphabetSchedule& s) {
  std::size_t m = SIZE_MAX;
  for (std::size_t d : s.prefix()) m = std::min(m, d);
  std::visit(
      [&](const auto& t) {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, ConstantTail>) {
          m = std::min(m, t.size);
        } else if constexpr (std::is_same_v<T, PeriodicTail>) {
          for (std::size_t d : t.sizes) m = std::min(m, d);
        } else {
          m = std::min(m, s.prefix().size() + 1 + t.offset);
        }
      },
      s.tail());
  return m;
}

/// x -> f(x) where f(x) <= r, the leftover letters matched in increasing
/// order. Letters are 1-based here.
Permutation truncatedLabeling(std::size_t r, std::uint64_t (*f)(std::uint64_t)) {
  std::vector<Letter> images(r, 0);
  std::vector<bool> used(r + 1, false);
  std::vector<Letter> unmatched;
  for (std::uint64_t x = 1; x <= r; ++x) {
    const std::uint64_t y = f(x);
    if (y <= r) {
      images[x - 1] = static_cast<Letter>(y - 1);
      used[y] = true;
    } else {
      unmatched.push_back(static_cast<Letter>(x - 1));
    }
  }
  std::size_t next = 0;
  for (std::size_t y = 1; y <= r; ++y) {
    if (!used[y]) images[unmatched[next++]] = static_cast<Letter>(y - 1);
  }
  return Permutation(std::move(images));
}

Permutation longCycle(std::size_t d, Letter first, Letter second) {
  std::vector<Letter> order{first, second};
  for (Letter x = 0; x < d; ++x) {
    if (x != first && x != second) order.push_back(x);
  }
  return Permutation::cycle(d, order);
}

}  // namespace

std::uint64_t wordOrderPermA(std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidWord, "a(n) is defined for n >= 1");
  if (n == 1) return 2;
  const unsigned k = blockOf(n);
  const std::uint64_t p = pow3(k);
  if (n < 3 * p) return n + 4 * p;
  if (n < 4 * p) return n - 2 * p;
  return n + 3 * p;
}

std::uint64_t wordOrderPermB(std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidWord, "b(n) is defined for n >= 1");
  if (n == 1) return 4;
  const unsigned k = blockOf(n);
  const std::uint64_t p = pow3(k);
  if (n < 5 * p) return n + 10 * p;
  // 5*3^k <= n < 17*3^(k-1), compared as 3n < 17*3^k.
  if (3 * n < 17 * p) return n - (13 * p) / 3;
  return n - 4 * p;
}

std::vector<GroupWord> shortlexReducedWords(std::size_t count) {
  std::vector<GroupWord> out;
  if (count == 0) return out;
  out.emplace_back();
  for (std::size_t len = 1; out.size() < count; ++len) {
    // Length-len words only; reducedWords lists shorter lengths first.
    for (GroupWord& w : reducedWords(2, len)) {
      if (w.length() != len) continue;
      out.push_back(std::move(w));
      if (out.size() == count) break;
    }
  }
  return out;
}

Automaton diagonalAutomaton(const AlphabetSchedule& schedule, std::size_t states,
                            std::function<Permutation(Level, State, std::size_t)> rule,
                            std::string family) {
  auto generator = [states, rule = std::move(rule)](Level level, std::size_t d) {
    std::vector<Permutation> labelings;
    for (State q = 0; q < states; ++q) {
      Permutation p = rule(level, q, d);
      if (p.size() != d)
        throw Error(ErrorKind::SizeMismatch, "labeling at level " + std::to_string(level) +
                                                 " has the wrong size");
      labelings.push_back(std::move(p));
    }
    return LevelTable::diagonal(labelings);
  };
  return Automaton::fromGenerator(schedule, states, std::move(generator), std::move(family),
                                  /*sizeDetermined=*/false, /*closedFormBiReversible=*/true);
}

Automaton diagonalAutomaton(const AlphabetSchedule& schedule, const DiagonalLabelings& labelings) {
  auto tables = [](const std::vector<std::vector<Permutation>>& levels) {
    std::vector<LevelTable> out;
    for (const auto& perState : levels) out.push_back(LevelTable::diagonal(perState));
    return out;
  };
  try {
    return Automaton::explicitPeriodic(schedule, tables(labelings.prefix), tables(labelings.period),
                                       "diagonal");
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidTable) throw Error(ErrorKind::SizeMismatch, e.what());
    throw;
  }
}

Automaton exampleOneAutomaton(const AlphabetSchedule& schedule) {
  auto generator = [](Level, std::size_t r) {
    return LevelTable::diagonal({truncatedLabeling(r, &wordOrderPermA),
                                 truncatedLabeling(r, &wordOrderPermB)});
  };
  return Automaton::fromGenerator(schedule, 2, generator, "example1", /*sizeDetermined=*/true,
                                  /*closedFormBiReversible=*/true);
}

Automaton exampleTwoAutomaton(const AlphabetSchedule& schedule, ExampleTwoOptions options) {
  const std::size_t smallest = minimumSize(schedule);
  if (smallest < 2) throw Error(ErrorKind::SizeTooSmall, "every alphabet needs at least two letters");
  if (options.flipLetter == options.fixedLetter || options.flipLetter >= smallest ||
      options.fixedLetter >= smallest)
    throw Error(ErrorKind::SizeTooSmall, "x0 and x1 must be distinct letters of every alphabet");
  auto generator = [options](Level, std::size_t d) {
    const Permutation pi = longCycle(d, options.flipLetter, options.fixedLetter);
    const Permutation tau = Permutation::cycle(d, {options.flipLetter, options.fixedLetter});
    LevelTable t(2, d);
    for (Letter x = 0; x < d; ++x) {
      const bool flips = x == options.flipLetter;
      t.set(0, x, flips ? 1 : 0, pi(x));
      t.set(1, x, flips ? 0 : 1, tau(x));
    }
    return t;
  };
  return Automaton::fromGenerator(schedule, 2, generator, "example2", /*sizeDetermined=*/true,
                                  /*closedFormBiReversible=*/true);
}

AlphabetSchedule indexSetSchedule(const IndexSet& indices) {
  for (std::size_t j = 0; j < indices.list.size(); ++j) {
    if (indices.list[j] < 2) throw Error(ErrorKind::IndexTooSmall, "indices must be >= 2");
    if (j > 0 && indices.list[j] <= indices.list[j - 1])
      throw Error(ErrorKind::InvalidSchedule, "index list must be strictly increasing");
  }
  if (!indices.consecutiveFrom) return AlphabetSchedule(indices.list, ConstantTail{1});
  const std::size_t from = *indices.consecutiveFrom;
  if (from < 2) throw Error(ErrorKind::IndexTooSmall, "indices must be >= 2");
  if (!indices.list.empty() && from <= indices.list.back())
    throw Error(ErrorKind::InvalidSchedule, "consecutive tail must start past the list");
  // Level m+j has size from+j-1, i.e. level + (from - m - 1).
  return AlphabetSchedule(indices.list, RampTail{from - indices.list.size() - 1});
}

Automaton giAutomaton(const IndexSet& indices) {
  auto rule = [](Level, State q, std::size_t d) {
    if (d == 1) return Permutation::identity(1);
    if (q == 0) return longCycle(d, 0, 1);
    return Permutation::cycle(d, {0, 1});
  };
  auto a = diagonalAutomaton(indexSetSchedule(indices), 2, rule, "gi");
  return a;
}

namespace {

LevelTable binaryTable(bool swap0, bool swap1, bool alphaFlip, bool betaFlip) {
  LevelTable t(2, 2);
  const bool swaps[2] = {swap0, swap1};
  for (Letter x = 0; x < 2; ++x) {
    t.set(0, x, swaps[x] ? 1 : 0, alphaFlip ? 1 - x : x);
    t.set(1, x, swaps[x] ? 0 : 1, betaFlip ? 1 - x : x);
  }
  return t;
}

}  // namespace

LevelTable binaryBiReversibleLevel(int type) {
  if (type < 0 || type >= kBinaryBiReversibleLevelTypes)
    throw Error(ErrorKind::InvalidTable, "level type must be in 0..11");
  if (type < 4) return binaryTable(false, false, type & 2, type & 1);
  if (type < 8) return binaryTable(true, true, type & 2, type & 1);
  const bool flip = type % 2 == 1;
  return type < 10 ? binaryTable(true, false, flip, flip) : binaryTable(false, true, flip, flip);
}

Automaton z2z4Automaton() {
  LevelTable odd = binaryTable(false, true, true, true);
  LevelTable even = binaryTable(false, false, true, false);
  return Automaton::explicitPeriodic(AlphabetSchedule::constant(2), {}, {odd, even}, "z2z4");
}

Automaton z4Automaton() {
  LevelTable odd = binaryTable(false, true, true, true);
  LevelTable even = binaryTable(false, false, true, false);
  return Automaton::explicitPeriodic(AlphabetSchedule::constant(2), {odd, even},
                                     {LevelTable::identity(2, 2)}, "z4");
}

Automaton lamplighterCayleyMachine() {
  LevelTable t(2, 2);
  for (State q = 0; q < 2; ++q) {
    for (Letter x = 0; x < 2; ++x) t.set(q, x, q ^ x, q ^ x);
  }
  return Automaton::explicitPeriodic(AlphabetSchedule::constant(2), {}, {t}, "lamplighter");
}

Automaton bellaterraAutomaton() {
  LevelTable t({{2, 2}, {0, 1}, {1, 0}}, {{1, 0}, {0, 1}, {0, 1}});
  return Automaton::explicitPeriodic(AlphabetSchedule::constant(2), {}, {t}, "bellaterra");
}

Automaton bellaterraDual() { return dual(bellaterraAutomaton()).withFamily("bellaterra_dual"); }

Automaton randomTwoStateBinaryBiReversible(std::uint64_t seed, std::size_t prefixLen,
                                           std::size_t periodLen) {
  if (periodLen == 0) throw Error(ErrorKind::InvalidTable, "period must be non-empty");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, kBinaryBiReversibleLevelTypes - 1);
  std::vector<LevelTable> prefix, period;
  for (std::size_t i = 0; i < prefixLen; ++i) prefix.push_back(binaryBiReversibleLevel(pick(rng)));
  for (std::size_t i = 0; i < periodLen; ++i) period.push_back(binaryBiReversibleLevel(pick(rng)));
  return Automaton::explicitPeriodic(AlphabetSchedule::constant(2), std::move(prefix),
                                     std::move(period), "random_bir22");
}

LevelTable randomTwoStateBiReversibleLevel(std::mt19937_64& rng, std::size_t letters) {
  // Z/T split, alpha arbitrary, beta = alpha composed with a permutation
  // preserving Z and T.
  std::vector<Letter> keep, swap;
  std::bernoulli_distribution coin(0.5);
  for (Letter x = 0; x < letters; ++x) (coin(rng) ? keep : swap).push_back(x);
  std::vector<Letter> alphaImages(letters);
  std::iota(alphaImages.begin(), alphaImages.end(), 0u);
  std::shuffle(alphaImages.begin(), alphaImages.end(), rng);
  std::vector<Letter> rho(letters);
  for (auto* part : {&keep, &swap}) {
    std::vector<Letter> shuffled = *part;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (std::size_t j = 0; j < part->size(); ++j) rho[(*part)[j]] = shuffled[j];
  }
  std::vector<bool> swaps(letters, false);
  for (Letter x : swap) swaps[x] = true;
  LevelTable t(2, letters);
  for (Letter x = 0; x < letters; ++x) {
    t.set(0, x, swaps[x] ? 1 : 0, alphaImages[x]);
    t.set(1, x, swaps[x] ? 0 : 1, alphaImages[rho[x]]);
  }
  return t;
}

Automaton randomTwoStateBiReversible(std::uint64_t seed, const AlphabetSchedule& schedule,
                                     std::size_t prefixLen, std::size_t periodLen) {
  const auto tp = schedule.tailPeriod();
  if (!tp) throw Error(ErrorKind::UnboundedSchedule, "random automata need a bounded schedule");
  if (periodLen == 0) throw Error(ErrorKind::InvalidTable, "period must be non-empty");
  std::mt19937_64 rng(seed);
  // Draw tables for one normalized cycle so sizes line up level by level.
  const std::size_t prefix = std::max(prefixLen, schedule.prefix().size());
  const std::size_t period = std::lcm(periodLen, *tp);
  std::vector<LevelTable> pre, per;
  for (Level i = 1; i <= prefix; ++i) pre.push_back(randomTwoStateBiReversibleLevel(rng, schedule.sizeAt(i)));
  for (Level i = prefix + 1; i <= prefix + period; ++i)
    per.push_back(randomTwoStateBiReversibleLevel(rng, schedule.sizeAt(i)));
  return Automaton::explicitPeriodic(schedule, std::move(pre), std::move(per), "random_bir2");
}

}  // namespace birev
