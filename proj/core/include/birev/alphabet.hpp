#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace birev {

using Letter = std::uint32_t;
using Word = std::vector<Letter>;
using Level = std::size_t;  // 1-based tree level

/// |X_i| = d for every level past the prefix.
struct ConstantTail {
  std::size_t size;
  bool operator==(const ConstantTail&) const = default;
};

/// Sizes cycle through `sizes`, starting right after the prefix.
struct PeriodicTail {
  std::vector<std::size_t> sizes;
  bool operator==(const PeriodicTail&) const = default;
};

/// |X_i| = i + offset, with i the absolute level index.
struct RampTail {
  std::size_t offset;
  bool operator==(const RampTail&) const = default;
};

using ScheduleTail = std::variant<ConstantTail, PeriodicTail, RampTail>;

/// A changing alphabet X = (X_i), described by a finite prefix of sizes and a
/// tail rule. Letters at level i are 0..sizeAt(i)-1.
class AlphabetSchedule {
 public:
  AlphabetSchedule(std::vector<std::size_t> prefix, ScheduleTail tail);

  static AlphabetSchedule constant(std::size_t size) {
    return AlphabetSchedule({}, ConstantTail{size});
  }
  static AlphabetSchedule periodic(std::vector<std::size_t> sizes) {
    return AlphabetSchedule({}, PeriodicTail{std::move(sizes)});
  }
  static AlphabetSchedule ramp(std::size_t offset) {
    return AlphabetSchedule({}, RampTail{offset});
  }

  std::size_t sizeAt(Level level) const;

  /// Supremum of the sizes, or nullopt for an unbounded (ramp) schedule.
  std::optional<std::size_t> bound() const;
  bool isBounded() const { return !std::holds_alternative<RampTail>(tail_); }

  /// Schedule of levels k+1, k+2, ... renumbered from 1.
  AlphabetSchedule shifted(std::size_t k) const;

  /// Length of the tail cycle (1 for constant); nullopt for ramp tails.
  std::optional<std::size_t> tailPeriod() const;

  bool isValid(std::span<const Letter> word) const;

  /// Number of words of length k (product of the first k sizes); saturates
  /// at SIZE_MAX.
  std::size_t leafCount(std::size_t k) const;

  const std::vector<std::size_t>& prefix() const { return prefix_; }
  const ScheduleTail& tail() const { return tail_; }

  bool operator==(const AlphabetSchedule&) const = default;

 private:
  std::vector<std::size_t> prefix_;
  ScheduleTail tail_;
};

struct Bounded {
  std::size_t sup;
  bool operator==(const Bounded&) const = default;
};
struct Unbounded {
  bool operator==(const Unbounded&) const = default;
};
using Boundedness = std::variant<Bounded, Unbounded>;

Boundedness boundednessOf(const AlphabetSchedule& schedule);

inline bool validateWord(const AlphabetSchedule& schedule,
                         std::span<const Letter> word) {
  return schedule.isValid(word);
}

}  // namespace birev
