#pragma once

// Reference implementations used by the tests. They read level tables
// directly and avoid the engine's own inverse, section and search code.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "birev/automaton.hpp"
#include "birev/group_word.hpp"

namespace birev::oracle {

/// A_q(w) straight from the tables.
inline Word runState(const Automaton& a, State q, const Word& w) {
  Word out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    const LevelTable& t = a.levelTable(i + 1);
    out[i] = t.out(q, w[i]);
    q = t.next(q, w[i]);
  }
  return out;
}

/// A_q^{-1}(w): at each level pick the unique letter the state maps onto w[i].
inline Word runInverse(const Automaton& a, State q, const Word& w) {
  Word out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    const LevelTable& t = a.levelTable(i + 1);
    Letter pre = 0;
    while (t.out(q, pre) != w[i]) ++pre;
    out[i] = pre;
    q = t.next(q, pre);
  }
  return out;
}

inline Word apply(const Automaton& a, const GroupWord& g, Word w) {
  const auto& f = g.factors();
  for (std::size_t j = f.size(); j-- > 0;) {
    w = f[j].sign > 0 ? runState(a, f[j].state, w) : runInverse(a, f[j].state, w);
  }
  return w;
}

/// Every word of length k, in mixed-radix order.
inline std::vector<Word> allWords(const AlphabetSchedule& s, std::size_t k) {
  std::vector<Word> out{Word{}};
  for (std::size_t i = 1; i <= k; ++i) {
    std::vector<Word> next;
    for (const Word& w : out) {
      for (Letter x = 0; x < s.sizeAt(i); ++x) {
        Word v = w;
        v.push_back(x);
        next.push_back(std::move(v));
      }
    }
    out = std::move(next);
  }
  return out;
}

inline Word randomWord(const AlphabetSchedule& s, std::size_t k, std::mt19937_64& rng) {
  Word w(k);
  for (std::size_t i = 0; i < k; ++i) {
    w[i] = static_cast<Letter>(std::uniform_int_distribution<std::size_t>(0, s.sizeAt(i + 1) - 1)(rng));
  }
  return w;
}

inline GroupWord randomGroupWord(std::size_t states, std::size_t maxLen, std::mt19937_64& rng) {
  const std::size_t len = std::uniform_int_distribution<std::size_t>(0, maxLen)(rng);
  std::vector<Factor> f;
  for (std::size_t j = 0; j < len; ++j) {
    const State q = static_cast<State>(std::uniform_int_distribution<std::size_t>(0, states - 1)(rng));
    f.push_back({q, std::bernoulli_distribution(0.5)(rng) ? 1 : -1});
  }
  return GroupWord(std::move(f));
}

/// Whether g and h agree on every word of length `depth` (and so on all
/// shorter words).
inline bool agreeToDepth(const Automaton& a, const GroupWord& g, const GroupWord& h,
                         std::size_t depth) {
  for (const Word& w : allWords(a.schedule(), depth)) {
    if (apply(a, g, w) != apply(a, h, w)) return false;
  }
  return true;
}

/// Order of the group generated by the given leaf permutations, by closing
/// a set under right multiplication.
inline std::uint64_t closureOrder(const std::vector<std::vector<std::uint32_t>>& gens,
                                  std::size_t n) {
  std::vector<std::uint32_t> id(n);
  for (std::uint32_t x = 0; x < n; ++x) id[x] = x;
  std::set<std::vector<std::uint32_t>> seen{id};
  std::vector<std::vector<std::uint32_t>> todo{id};
  while (!todo.empty()) {
    auto p = std::move(todo.back());
    todo.pop_back();
    for (const auto& g : gens) {
      std::vector<std::uint32_t> q(n);
      for (std::uint32_t x = 0; x < n; ++x) q[x] = p[g[x]];
      if (seen.insert(q).second) todo.push_back(std::move(q));
    }
  }
  return seen.size();
}

}  // namespace birev::oracle
