#include "birev/steering.hpp"

#include <numeric>
#include <string>

#include "birev/error.hpp"
#include "birev/group.hpp"

namespace birev {

std::uint64_t crtSolve(std::span<const Congruence> congruences) {
  for (std::size_t j = 0; j < congruences.size(); ++j) {
    if (congruences[j].modulus == 0)
      throw Error(ErrorKind::NonCoprimeModuli, "moduli must be >= 1");
    for (std::size_t k = j + 1; k < congruences.size(); ++k) {
      if (std::gcd(congruences[j].modulus, congruences[k].modulus) != 1)
        throw Error(ErrorKind::NonCoprimeModuli,
                    "moduli " + std::to_string(congruences[j].modulus) + " and " +
                        std::to_string(congruences[k].modulus) + " are not coprime");
    }
  }
  // Incremental combination: N = n (mod m), m the product so far.
  __extension__ using u128 = unsigned __int128;
  u128 n = 0;
  u128 m = 1;
  for (const Congruence& c : congruences) {
    const std::uint64_t r = c.residue % c.modulus;
    while (static_cast<std::uint64_t>(n % c.modulus) != r) n += m;
    m *= c.modulus;
    if (m > UINT64_MAX) throw Error(ErrorKind::NonCoprimeModuli, "modulus product overflows");
  }
  return static_cast<std::uint64_t>(n);
}

std::uint64_t cycleDiscreteLog(const Permutation& p, Letter x, Letter y) {
  std::uint64_t e = 0;
  Letter cur = x;
  while (cur != y) {
    cur = p(cur);
    ++e;
    if (cur == x)
      throw Error(ErrorKind::NotOnSameCycle, std::to_string(x) + " and " + std::to_string(y) +
                                                 " lie on different cycles");
  }
  return e;
}

CycleLevel cycleLevelAt(const Automaton& a, Level level) {
  if (a.stateCount() != 2) throw Error(ErrorKind::NotTwoState, "automaton must have two states");
  const LevelTable& t = a.levelTable(level);
  const std::size_t d = t.letterCount();
  std::optional<Letter> flip;
  for (Letter x = 0; x < d; ++x) {
    const bool swaps = t.next(0, x) == 1 && t.next(1, x) == 0;
    const bool keeps = t.next(0, x) == 0 && t.next(1, x) == 1;
    if ((!swaps && !keeps) || (swaps && flip))
      throw Error(ErrorKind::InvalidTable, "level " + std::to_string(level) +
                                               " does not flip states on exactly one letter");
    if (swaps) flip = x;
  }
  if (!flip)
    throw Error(ErrorKind::InvalidTable, "level " + std::to_string(level) + " never flips states");
  CycleLevel c{*flip, 0, t.labeling(1), t.labeling(0), Permutation::identity(d)};
  c.fixed = c.pi(*flip);
  if (c.tau(*flip) != c.fixed || c.tau.cycles().size() != 1 || c.tau.cycles()[0].size() != 2 ||
      c.pi.cycles().size() != 1 || c.pi.cycles()[0].size() != d)
    throw Error(ErrorKind::InvalidTable,
                "level " + std::to_string(level) + " is not a transposition/long-cycle pair");
  c.sigma = c.pi.compose(c.tau.inverse());
  return c;
}

SteeringResult steerToWord(const Automaton& a, std::span<const Letter> target) {
  const std::size_t t = target.size();
  if (!a.schedule().isValid(target)) throw Error(ErrorKind::InvalidWord, "target is not a valid word");
  std::vector<CycleLevel> levels;
  std::vector<std::uint64_t> moduli;
  for (Level i = 1; i <= t; ++i) {
    const std::size_t d = a.schedule().sizeAt(i);
    if (d < 3)
      throw Error(ErrorKind::PreconditionSize, "level " + std::to_string(i) + " has fewer than 3 letters");
    levels.push_back(cycleLevelAt(a, i));
    moduli.push_back(d - 1);
  }
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = i + 1; j < t; ++j) {
      if (std::gcd(moduli[i], moduli[j]) != 1)
        throw Error(ErrorKind::PreconditionCoprimality,
                    "|X_" + std::to_string(i + 1) + "|-1 and |X_" + std::to_string(j + 1) +
                        "|-1 are not coprime");
    }
  }

  SteeringResult r;
  r.target.assign(target.begin(), target.end());
  for (const auto& c : levels) r.base.push_back(c.fixed);

  // First power: fix x^0 on levels already at x^1 and move it off
  // {x^0, x^1} elsewhere.
  std::vector<Congruence> first;
  bool anyMoved = false;
  for (std::size_t i = 0; i < t; ++i) {
    const bool stays = target[i] == levels[i].fixed;
    anyMoved = anyMoved || !stays;
    first.push_back(Congruence{stays ? 0u : 1u, moduli[i]});
  }
  r.n0 = crtSolve(first);
  if (!anyMoved) {
    r.n0 = 1;
    for (std::uint64_t m : moduli) r.n0 = std::lcm(r.n0, m);
  }

  // z = b^-1(c^{n0}(x^0...)), then solve sigma_i^{+-n1}(z_i) = target_i with
  // the sign flipping after every level that reads x^1.
  std::vector<Congruence> second;
  bool negative = false;
  for (std::size_t i = 0; i < t; ++i) {
    const CycleLevel& c = levels[i];
    const Letter w2 = c.sigma.power(static_cast<std::int64_t>(r.n0 % moduli[i]))(c.flip);
    const Letter z = c.tau(w2);
    if (target[i] != c.fixed) {
      const std::uint64_t e = cycleDiscreteLog(c.sigma, z, target[i]);
      const std::uint64_t residue = negative ? (moduli[i] - e % moduli[i]) % moduli[i] : e;
      second.push_back(Congruence{residue, moduli[i]});
    }
    if (z == c.fixed) negative = !negative;
  }
  r.n1 = crtSolve(second);

  const GroupWord a1 = GroupWord::generator(0);
  const GroupWord b1 = GroupWord::generator(1);
  const GroupWord c1 = a1 * b1.inverse();
  r.element = c1.power(static_cast<std::int64_t>(r.n1)) * b1.inverse() *
              c1.power(static_cast<std::int64_t>(r.n0)) * b1;

  if (applyWord(a, r.element, r.base) != r.target)
    throw Error(ErrorKind::VerificationFailed, "steering element does not reach the target");
  return r;
}

}  // namespace birev
