#include "birev/alphabet.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "birev/error.hpp"

namespace birev {

AlphabetSchedule::AlphabetSchedule(std::vector<std::size_t> prefix,
                                   ScheduleTail tail)
    : prefix_(std::move(prefix)), tail_(std::move(tail)) {
  for (std::size_t s : prefix_) {
    if (s == 0) throw Error(ErrorKind::InvalidSchedule, "prefix size must be >= 1");
  }
  if (const auto* c = std::get_if<ConstantTail>(&tail_)) {
    if (c->size == 0) throw Error(ErrorKind::InvalidSchedule, "constant size must be >= 1");
  } else if (const auto* p = std::get_if<PeriodicTail>(&tail_)) {
    if (p->sizes.empty())
      throw Error(ErrorKind::InvalidSchedule, "periodic tail must be non-empty");
    for (std::size_t s : p->sizes) {
      if (s == 0) throw Error(ErrorKind::InvalidSchedule, "periodic size must be >= 1");
    }
  }
  // A ramp tail is >= 1 at every level because i >= 1.
}

std::size_t AlphabetSchedule::sizeAt(Level level) const {
  if (level >= 1 && level <= prefix_.size()) return prefix_[level - 1];
  const std::size_t past = level - prefix_.size() - 1;
  return std::visit(
      [&](const auto& t) -> std::size_t {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, ConstantTail>) {
          return t.size;
        } else if constexpr (std::is_same_v<T, PeriodicTail>) {
          return t.sizes[past % t.sizes.size()];
        } else {
          return level + t.offset;
        }
      },
      tail_);
}

std::optional<std::size_t> AlphabetSchedule::bound() const {
  if (!isBounded()) return std::nullopt;
  std::size_t sup = 0;
  for (std::size_t s : prefix_) sup = std::max(sup, s);
  if (const auto* c = std::get_if<ConstantTail>(&tail_)) {
    sup = std::max(sup, c->size);
  } else {
    for (std::size_t s : std::get<PeriodicTail>(tail_).sizes) sup = std::max(sup, s);
  }
  return sup;
}

std::optional<std::size_t> AlphabetSchedule::tailPeriod() const {
  if (std::holds_alternative<ConstantTail>(tail_)) return 1;
  if (const auto* p = std::get_if<PeriodicTail>(&tail_)) return p->sizes.size();
  return std::nullopt;
}

AlphabetSchedule AlphabetSchedule::shifted(std::size_t k) const {
  if (k == 0) return *this;
  if (k <= prefix_.size()) {
    std::vector<std::size_t> rest(prefix_.begin() + static_cast<std::ptrdiff_t>(k),
                                  prefix_.end());
    ScheduleTail tail = tail_;
    if (auto* r = std::get_if<RampTail>(&tail)) r->offset += k;
    return AlphabetSchedule(std::move(rest), std::move(tail));
  }
  const std::size_t intoTail = k - prefix_.size();
  ScheduleTail tail = tail_;
  if (auto* p = std::get_if<PeriodicTail>(&tail)) {
    std::rotate(p->sizes.begin(),
                p->sizes.begin() + static_cast<std::ptrdiff_t>(intoTail % p->sizes.size()),
                p->sizes.end());
  } else if (auto* r = std::get_if<RampTail>(&tail)) {
    r->offset += k;
  }
  return AlphabetSchedule({}, std::move(tail));
}

bool AlphabetSchedule::isValid(std::span<const Letter> word) const {
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] >= sizeAt(i + 1)) return false;
  }
  return true;
}

std::size_t AlphabetSchedule::leafCount(std::size_t k) const {
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  std::size_t count = 1;
  for (Level i = 1; i <= k; ++i) {
    const std::size_t s = sizeAt(i);
    if (count > kMax / s) return kMax;
    count *= s;
  }
  return count;
}

Boundedness boundednessOf(const AlphabetSchedule& schedule) {
  if (auto sup = schedule.bound()) return Bounded{*sup};
  return Unbounded{};
}

}  // namespace birev
