#include "birev/perm_group.hpp"

#include <deque>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_set>

#include "birev/error.hpp"

namespace birev {

namespace {

struct PermHash {
  std::size_t operator()(const PointPerm& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (std::uint32_t x : p) h = (h ^ x) * 0x100000001b3ull;
    return h;
  }
};

bool isIdentity(const PointPerm& p) {
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (p[x] != x) return false;
  }
  return true;
}

/// One level of a stabilizer chain with explicit transversal.
struct ChainLevel {
  std::uint32_t base;
  std::vector<PointPerm> gens;
  std::vector<std::uint32_t> orbit;
  std::vector<std::optional<PointPerm>> transversal;  // indexed by point, u(base) = point
};

void rebuildOrbit(ChainLevel& level, std::size_t n) {
  level.orbit.clear();
  level.transversal.assign(n, std::nullopt);
  level.transversal[level.base] = identityPerm(n);
  level.orbit.push_back(level.base);
  for (std::size_t head = 0; head < level.orbit.size(); ++head) {
    const std::uint32_t beta = level.orbit[head];
    for (const PointPerm& g : level.gens) {
      const std::uint32_t image = g[beta];
      if (level.transversal[image]) continue;
      level.transversal[image] = composePerm(g, *level.transversal[beta]);
      level.orbit.push_back(image);
    }
  }
}

/// Sifts g through levels [from, end); returns the residue and the index of
/// the level where sifting stopped (chain.size() if it passed every level).
std::pair<PointPerm, std::size_t> strip(const std::vector<ChainLevel>& chain, PointPerm g,
                                        std::size_t from) {
  for (std::size_t l = from; l < chain.size(); ++l) {
    const std::uint32_t image = g[chain[l].base];
    const auto& u = chain[l].transversal[image];
    if (!u) return {std::move(g), l};
    // g := u^-1 g
    const PointPerm inv = invertPerm(*u);
    PointPerm reduced(g.size());
    for (std::size_t x = 0; x < g.size(); ++x) reduced[x] = inv[g[x]];
    g = std::move(reduced);
  }
  return {std::move(g), chain.size()};
}

std::uint32_t movedPoint(const PointPerm& p) {
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (p[x] != x) return static_cast<std::uint32_t>(x);
  }
  return 0;
}

}  // namespace

PointPerm identityPerm(std::size_t n) {
  PointPerm p(n);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

PointPerm composePerm(const PointPerm& lhs, const PointPerm& rhs) {
  PointPerm p(rhs.size());
  for (std::size_t x = 0; x < rhs.size(); ++x) p[x] = lhs[rhs[x]];
  return p;
}

PointPerm invertPerm(const PointPerm& p) {
  PointPerm inv(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) inv[p[x]] = static_cast<std::uint32_t>(x);
  return inv;
}

std::vector<PointPerm> enumerateGroup(std::span<const PointPerm> gens, std::size_t n,
                                      std::size_t orderCap) {
  std::vector<PointPerm> elements{identityPerm(n)};
  std::unordered_set<PointPerm, PermHash> seen{elements.front()};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const PointPerm& g : gens) {
      PointPerm next = composePerm(g, elements[head]);
      if (seen.contains(next)) continue;
      if (elements.size() >= orderCap)
        throw Error(ErrorKind::OrderCapExceeded,
                    "group order exceeds cap " + std::to_string(orderCap));
      seen.insert(next);
      elements.push_back(std::move(next));
    }
  }
  return elements;
}

std::vector<std::uint32_t> orbitOf(std::span<const PointPerm> gens, std::size_t n,
                                   std::uint32_t point) {
  std::vector<bool> seen(n, false);
  std::vector<std::uint32_t> orbit{point};
  seen[point] = true;
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (const PointPerm& g : gens) {
      const std::uint32_t image = g[orbit[head]];
      if (seen[image]) continue;
      seen[image] = true;
      orbit.push_back(image);
    }
  }
  return orbit;
}

std::uint64_t groupOrder(std::span<const PointPerm> gens, std::size_t n, std::uint64_t orderCap) {
  std::vector<PointPerm> nontrivial;
  for (const PointPerm& g : gens) {
    if (!isIdentity(g)) nontrivial.push_back(g);
  }
  if (nontrivial.empty()) return 1;

  std::vector<ChainLevel> chain;
  chain.push_back(ChainLevel{movedPoint(nontrivial.front()), nontrivial, {}, {}});
  // Every generator must move some base point.
  for (const PointPerm& g : nontrivial) {
    bool moves = false;
    for (const auto& level : chain) moves = moves || g[level.base] != level.base;
    if (!moves) chain.push_back(ChainLevel{movedPoint(g), {}, {}, {}});
  }
  for (std::size_t l = 1; l < chain.size(); ++l) {
    for (const PointPerm& g : nontrivial) {
      bool fixes = true;
      for (std::size_t m = 0; m < l; ++m) fixes = fixes && g[chain[m].base] == chain[m].base;
      if (fixes) chain[l].gens.push_back(g);
    }
  }
  for (auto& level : chain) rebuildOrbit(level, n);

  auto orderOf = [&]() {
    std::uint64_t order = 1;
    for (const auto& level : chain) {
      if (level.orbit.size() > orderCap / order)
        throw Error(ErrorKind::OrderCapExceeded, "group order exceeds cap " + std::to_string(orderCap));
      order *= level.orbit.size();
    }
    return order;
  };

  std::size_t i = chain.size();
  while (i-- > 0) {
    bool jumped = false;
    for (std::size_t ob = 0; ob < chain[i].orbit.size() && !jumped; ++ob) {
      const std::uint32_t beta = chain[i].orbit[ob];
      for (std::size_t s = 0; s < chain[i].gens.size() && !jumped; ++s) {
        const PointPerm& gen = chain[i].gens[s];
        const PointPerm g1 = composePerm(gen, *chain[i].transversal[beta]);
        const PointPerm& u1 = *chain[i].transversal[gen[beta]];
        if (g1 == u1) continue;
        PointPerm schreier = composePerm(invertPerm(u1), g1);
        auto [residue, stop] = strip(chain, std::move(schreier), i + 1);
        if (stop == chain.size() && isIdentity(residue)) continue;
        if (stop == chain.size()) chain.push_back(ChainLevel{movedPoint(residue), {}, {}, {}});
        for (std::size_t l = i + 1; l <= stop; ++l) {
          chain[l].gens.push_back(residue);
          rebuildOrbit(chain[l], n);
        }
        orderOf();
        i = stop + 1;  // resumes at `stop` after the decrement
        jumped = true;
      }
    }
  }
  return orderOf();
}

}  // namespace birev
