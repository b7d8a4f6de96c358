#pragma once

#include <cstdint>
#include <string_view>

#include "birev/automaton.hpp"
#include "birev/group.hpp"

namespace birev {

/// The groups realized by 2-state bi-reversible automata over binary
/// alphabets.
enum class GroupType { Trivial, Z2, Z2xZ2, Z4, Z2xZ4 };

std::string_view toString(GroupType type);
std::uint64_t orderOf(GroupType type);
std::uint64_t exponentOf(GroupType type);

/// Decides the type with exact equality queries on a = q1 and c = a^-1 b.
/// Throws NotTwoState, NotBinary, UndecidableRepresentation, NotBiReversible.
GroupType classifyTwoStateBinary(const Automaton& a, const SearchBudget& budget = {});

}  // namespace birev
