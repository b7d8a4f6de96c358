#include "birev/group.hpp"

#include <cmath>
#include <unordered_map>
#include <unordered_set>

#include "birev/error.hpp"

namespace birev {

namespace {

const LevelTable& tableFor(const Automaton& a, Level level, int sign) {
  return sign > 0 ? a.levelTable(level) : a.inverseLevelTable(level);
}

struct KeyHash {
  std::size_t operator()(const std::vector<State>& key) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (State s : key) {
      h ^= s + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

/// True iff the tuple, read with the word's signs, freely reduces to the
/// empty word, so the section is the identity.
bool reducesToIdentity(std::span<const State> states, std::span<const Factor> signs) {
  std::vector<Factor> stack;
  stack.reserve(states.size());
  for (std::size_t j = 0; j < states.size(); ++j) {
    const Factor f{states[j], signs[j].sign};
    if (!stack.empty() && stack.back().state == f.state && stack.back().sign == -f.sign) {
      stack.pop_back();
    } else {
      stack.push_back(f);
    }
  }
  return stack.empty();
}

/// One letter through the tuple; updates states in place, returns the output.
Letter threadLetter(const Automaton& a, Level level, std::span<const Factor> signs,
                    std::span<State> states, Letter x) {
  for (std::size_t j = states.size(); j-- > 0;) {
    const LevelTable& t = tableFor(a, level, signs[j].sign);
    const State q = states[j];
    const Letter y = t.out(q, x);
    states[j] = t.next(q, x);
    x = y;
  }
  return x;
}

struct Node {
  std::vector<State> states;
  Level phase;
  std::size_t parent;
  Letter letter;
};

Word tracePath(const std::vector<Node>& nodes, std::size_t index) {
  Word path;
  while (nodes[index].parent != SIZE_MAX) {
    path.push_back(nodes[index].letter);
    index = nodes[index].parent;
  }
  return {path.rbegin(), path.rend()};
}

EqualityVerdict periodicSearch(const Automaton& a, const Periodicity& period,
                               const std::vector<Factor>& word, const SearchBudget& budget) {
  EqualityVerdict v;
  v.method = EqualityMethod::PeriodicBFS;
  v.stateBound = std::pow(2.0 * static_cast<double>(a.stateCount()),
                          static_cast<double>(word.size())) *
                 static_cast<double>(period.phaseCount());

  std::vector<Node> nodes;
  std::unordered_map<std::vector<State>, std::size_t, KeyHash> seen;
  auto keyOf = [](const std::vector<State>& states, Level phase) {
    std::vector<State> key = states;
    key.push_back(static_cast<State>(phase));
    return key;
  };

  std::vector<State> start;
  for (const Factor& f : word) start.push_back(f.state);
  nodes.push_back(Node{start, 1, SIZE_MAX, 0});
  seen.emplace(keyOf(start, 1), 0);

  std::vector<State> scratch;
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    const Level phase = nodes[head].phase;
    const std::size_t d = a.schedule().sizeAt(phase);
    const Level nextPhase = period.canonical(phase + 1);
    for (Letter x = 0; x < d; ++x) {
      scratch = nodes[head].states;
      const Letter y = threadLetter(a, phase, word, scratch, x);
      if (y != x) {
        v.status = EqualityStatus::NotEqual;
        v.witness = tracePath(nodes, head);
        v.witness.push_back(x);
        v.statesVisited = nodes.size();
        return v;
      }
      if (reducesToIdentity(scratch, word)) continue;
      auto key = keyOf(scratch, nextPhase);
      if (seen.contains(key)) continue;
      if (nodes.size() >= budget.maxStates)
        throw Error(ErrorKind::BudgetExceeded,
                    "product-section search exceeded " + std::to_string(budget.maxStates) + " states");
      seen.emplace(std::move(key), nodes.size());
      nodes.push_back(Node{scratch, nextPhase, head, x});
    }
  }
  v.status = EqualityStatus::Equal;
  v.statesVisited = nodes.size();
  return v;
}

EqualityVerdict depthBoundedSearch(const Automaton& a, const std::vector<Factor>& word,
                                   const SearchBudget& budget) {
  EqualityVerdict v;
  v.method = EqualityMethod::DepthBounded;

  std::vector<Node> nodes;
  std::vector<State> start;
  for (const Factor& f : word) start.push_back(f.state);
  nodes.push_back(Node{start, 1, SIZE_MAX, 0});

  std::size_t levelBegin = 0;
  std::vector<State> scratch;
  for (Level level = 1; level <= budget.maxDepth; ++level) {
    const std::size_t levelEnd = nodes.size();
    if (levelBegin == levelEnd) {
      v.status = EqualityStatus::Equal;
      v.statesVisited = nodes.size();
      return v;
    }
    const std::size_t d = a.schedule().sizeAt(level);
    std::unordered_set<std::vector<State>, KeyHash> nextLevel;
    for (std::size_t head = levelBegin; head < levelEnd; ++head) {
      for (Letter x = 0; x < d; ++x) {
        scratch = nodes[head].states;
        const Letter y = threadLetter(a, level, word, scratch, x);
        if (y != x) {
          v.status = EqualityStatus::NotEqual;
          v.witness = tracePath(nodes, head);
          v.witness.push_back(x);
          v.statesVisited = nodes.size();
          return v;
        }
        if (reducesToIdentity(scratch, word)) continue;
        if (!nextLevel.insert(scratch).second) continue;
        if (nodes.size() >= budget.maxStates)
          throw Error(ErrorKind::BudgetExceeded,
                      "depth-bounded search exceeded " + std::to_string(budget.maxStates) + " states");
        nodes.push_back(Node{scratch, level + 1, head, x});
      }
    }
    levelBegin = levelEnd;
  }
  v.statesVisited = nodes.size();
  if (levelBegin == nodes.size()) {
    v.status = EqualityStatus::Equal;
  } else {
    v.status = EqualityStatus::Unknown;
    v.exhaustedDepth = budget.maxDepth;
  }
  return v;
}

}  // namespace

Word applyWord(const Automaton& a, const GroupWord& g, std::span<const Letter> w) {
  if (!a.schedule().isValid(w)) throw Error(ErrorKind::InvalidWord, "word is not valid for the schedule");
  const auto& fs = g.factors();
  std::vector<State> states;
  for (const Factor& f : fs) {
    if (f.state >= a.stateCount()) throw Error(ErrorKind::InvalidWord, "generator out of range");
    states.push_back(f.state);
  }
  Word out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = threadLetter(a, i + 1, fs, states, w[i]);
  return out;
}

SectionStep stepSection(const Automaton& a, const CompositeSection& s, Letter x) {
  if (x >= a.schedule().sizeAt(s.level))
    throw Error(ErrorKind::InvalidWord, "letter out of range at level " + std::to_string(s.level));
  std::vector<State> states;
  for (const Factor& f : s.factors) states.push_back(f.state);
  SectionStep step;
  step.output = threadLetter(a, s.level, s.factors, states, x);
  step.next.level = s.level + 1;
  step.next.factors = s.factors;
  for (std::size_t j = 0; j < states.size(); ++j) step.next.factors[j].state = states[j];
  return step;
}

EqualityVerdict decideEqual(const Automaton& a, const GroupWord& g, const GroupWord& h,
                            const SearchBudget& budget) {
  const GroupWord u = g * h.inverse();
  const auto period = a.periodicity();
  if (u.isIdentity()) {
    EqualityVerdict v;
    v.status = EqualityStatus::Equal;
    v.method = period ? EqualityMethod::PeriodicBFS : EqualityMethod::DepthBounded;
    v.stateBound = period ? static_cast<double>(period->phaseCount()) : 0;
    return v;
  }
  for (const Factor& f : u.factors()) {
    if (f.state >= a.stateCount()) throw Error(ErrorKind::InvalidWord, "generator out of range");
  }
  EqualityVerdict v = period ? periodicSearch(a, *period, u.factors(), budget)
                             : depthBoundedSearch(a, u.factors(), budget);
  // u(w) != w means g and h differ on h^-1(w).
  if (v.status == EqualityStatus::NotEqual) v.witness = applyWord(a, h.inverse(), v.witness);
  return v;
}

std::optional<std::uint64_t> elementOrder(const Automaton& a, const GroupWord& g,
                                          std::uint64_t maxOrder, const SearchBudget& budget) {
  for (std::uint64_t n = 1; n <= maxOrder; ++n) {
    const auto v = decideIdentity(a, g.power(static_cast<std::int64_t>(n)), budget);
    if (v.status == EqualityStatus::Equal) return n;
  }
  return std::nullopt;
}

std::vector<GroupWord> reducedWords(std::size_t generators, std::size_t maxLen) {
  std::vector<GroupWord> out;
  const std::size_t symbols = 2 * generators;
  if (symbols == 0) return out;
  auto factorOf = [](std::size_t s) {
    return Factor{static_cast<State>(s / 2), s % 2 == 0 ? 1 : -1};
  };
  std::vector<std::vector<std::size_t>> layer{{}};
  for (std::size_t len = 1; len <= maxLen; ++len) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& w : layer) {
      for (std::size_t s = 0; s < symbols; ++s) {
        if (!w.empty() && (w.back() ^ 1u) == s) continue;
        auto ext = w;
        ext.push_back(s);
        next.push_back(std::move(ext));
      }
    }
    for (const auto& w : next) {
      std::vector<Factor> fs;
      for (std::size_t s : w) fs.push_back(factorOf(s));
      out.emplace_back(std::move(fs));
    }
    layer = std::move(next);
  }
  return out;
}

std::vector<Relation> relationSearch(const Automaton& a, std::size_t maxLen,
                                     const SearchBudget& budget) {
  std::vector<Relation> found;
  for (const GroupWord& w : reducedWords(a.stateCount(), maxLen)) {
    const auto v = decideIdentity(a, w, budget);
    if (v.status != EqualityStatus::NotEqual) found.push_back(Relation{w, v.status});
  }
  return found;
}

std::string_view toString(EqualityStatus status) {
  switch (status) {
    case EqualityStatus::Equal: return "Equal";
    case EqualityStatus::NotEqual: return "NotEqual";
    case EqualityStatus::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::string_view toString(EqualityMethod method) {
  return method == EqualityMethod::PeriodicBFS ? "PeriodicBFS" : "DepthBounded";
}

}  // namespace birev
