#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "birev/level_table.hpp"

namespace birev {

class Automaton;

struct Factor {
  State state = 0;
  int sign = 1;  // +1 or -1
  bool operator==(const Factor&) const = default;
  auto operator<=>(const Factor&) const = default;
};

/// A freely reduced product of generators and their inverses. factors[0] is
/// applied last: {a, b} acts as a(b(w)).
class GroupWord {
 public:
  GroupWord() = default;
  /// Reduces the given factors.
  explicit GroupWord(std::vector<Factor> factors);

  static GroupWord generator(State q, int sign = 1) { return GroupWord({Factor{q, sign}}); }

  const std::vector<Factor>& factors() const { return factors_; }
  std::size_t length() const { return factors_.size(); }
  bool isIdentity() const { return factors_.empty(); }

  GroupWord inverse() const;
  GroupWord power(std::int64_t n) const;
  /// Product g*h: h acts first.
  friend GroupWord operator*(const GroupWord& g, const GroupWord& h);

  /// "a b^-1" style, using state names; "id" for the empty word.
  std::string toString(const std::vector<std::string>& names) const;

  bool operator==(const GroupWord&) const = default;
  auto operator<=>(const GroupWord&) const = default;

 private:
  std::vector<Factor> factors_;
};

/// Parses whitespace-separated generator names with optional ^-1 (also
/// ^k for integers k). Throws ParseError.
GroupWord parseGroupWord(const Automaton& a, std::string_view text);

}  // namespace birev
