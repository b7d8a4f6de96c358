#include "birev/classify.hpp"

#include "birev/error.hpp"
#include "birev/torsion.hpp"

namespace birev {

std::string_view toString(GroupType type) {
  switch (type) {
    case GroupType::Trivial: return "Trivial";
    case GroupType::Z2: return "Z2";
    case GroupType::Z2xZ2: return "Z2xZ2";
    case GroupType::Z4: return "Z4";
    case GroupType::Z2xZ4: return "Z2xZ4";
  }
  return "Unknown";
}

std::uint64_t orderOf(GroupType type) {
  switch (type) {
    case GroupType::Trivial: return 1;
    case GroupType::Z2: return 2;
    case GroupType::Z2xZ2: return 4;
    case GroupType::Z4: return 4;
    case GroupType::Z2xZ4: return 8;
  }
  return 0;
}

std::uint64_t exponentOf(GroupType type) {
  switch (type) {
    case GroupType::Trivial: return 1;
    case GroupType::Z2: return 2;
    case GroupType::Z2xZ2: return 2;
    case GroupType::Z4: return 4;
    case GroupType::Z2xZ4: return 4;
  }
  return 0;
}

namespace {

bool allBinary(const AlphabetSchedule& s) {
  for (std::size_t d : s.prefix()) {
    if (d != 2) return false;
  }
  if (const auto* c = std::get_if<ConstantTail>(&s.tail())) return c->size == 2;
  if (const auto* p = std::get_if<PeriodicTail>(&s.tail())) {
    for (std::size_t d : p->sizes) {
      if (d != 2) return false;
    }
    return true;
  }
  return false;
}

}  // namespace

GroupType classifyTwoStateBinary(const Automaton& a, const SearchBudget& budget) {
  if (a.stateCount() != 2) throw Error(ErrorKind::NotTwoState, "automaton must have two states");
  if (!allBinary(a.schedule())) throw Error(ErrorKind::NotBinary, "every alphabet must have two letters");
  if (!a.periodicity())
    throw Error(ErrorKind::UndecidableRepresentation, "classification needs a periodic representation");
  if (!isBiReversible(a).holds) throw Error(ErrorKind::NotBiReversible, "automaton is not bi-reversible");

  const GroupWord id;
  const GroupWord gen = GroupWord::generator(0);
  const GroupWord c = stateQuotient();
  auto equal = [&](const GroupWord& g, const GroupWord& h) {
    return decideEqual(a, g, h, budget).status == EqualityStatus::Equal;
  };
  if (equal(gen, id)) return equal(c, id) ? GroupType::Trivial : GroupType::Z2;
  const GroupWord square = gen.power(2);
  if (equal(square, id)) return (equal(c, id) || equal(c, gen)) ? GroupType::Z2 : GroupType::Z2xZ2;
  return (equal(c, id) || equal(c, square)) ? GroupType::Z4 : GroupType::Z2xZ4;
}

}  // namespace birev
