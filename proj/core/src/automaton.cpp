#include "birev/automaton.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <string>

#include "birev/error.hpp"

namespace birev {

namespace detail {

const LevelTable& LevelSource::table(Level level) const {
  if (level == 0) throw Error(ErrorKind::InvalidWord, "levels are 1-based");
  const auto period = periodicity();
  const Level key = period ? period->canonical(level) : level;
  {
    std::shared_lock lock(mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return *it->second;
  }
  auto built = std::make_unique<LevelTable>(build(key));
  std::unique_lock lock(mutex_);
  auto [it, inserted] = memo_.try_emplace(key, std::move(built));
  return *it->second;
}

const LevelTable& LevelSource::inverseTable(Level level) const {
  const auto period = periodicity();
  const Level key = period ? period->canonical(level) : level;
  {
    std::shared_lock lock(mutex_);
    if (auto it = inverseMemo_.find(key); it != inverseMemo_.end()) return *it->second;
  }
  const LevelTable& forward = table(key);
  if (!forward.isInvertible())
    throw Error(ErrorKind::NotInvertibleAtLevel,
                "automaton is not invertible at level " + std::to_string(level));
  auto built = std::make_unique<LevelTable>(forward.inverse());
  std::unique_lock lock(mutex_);
  auto [it, inserted] = inverseMemo_.try_emplace(key, std::move(built));
  return *it->second;
}

}  // namespace detail

namespace {

using detail::LevelSource;

class ExplicitSource final : public LevelSource {
 public:
  ExplicitSource(AlphabetSchedule schedule, std::size_t states,
                 std::vector<LevelTable> tables, Periodicity period)
      : schedule_(std::move(schedule)),
        states_(states),
        tables_(std::move(tables)),
        period_(period) {}

  std::size_t stateCount() const override { return states_; }
  const AlphabetSchedule& schedule() const override { return schedule_; }
  std::optional<Periodicity> periodicity() const override { return period_; }

 protected:
  LevelTable build(Level level) const override { return tables_[period_.canonical(level) - 1]; }

 private:
  AlphabetSchedule schedule_;
  std::size_t states_;
  std::vector<LevelTable> tables_;  // levels 1..prefix+period
  Periodicity period_;
};

class GeneratorSource final : public LevelSource {
 public:
  GeneratorSource(AlphabetSchedule schedule, std::size_t states,
                  std::function<LevelTable(Level, std::size_t)> generator,
                  bool sizeDetermined, bool closedForm)
      : schedule_(std::move(schedule)),
        states_(states),
        generator_(std::move(generator)),
        closedForm_(closedForm) {
    if (sizeDetermined) {
      if (auto tp = schedule_.tailPeriod()) period_ = Periodicity{schedule_.prefix().size(), *tp};
    }
  }

  std::size_t stateCount() const override { return states_; }
  const AlphabetSchedule& schedule() const override { return schedule_; }
  std::optional<Periodicity> periodicity() const override { return period_; }
  bool closedFormBiReversible() const override { return closedForm_; }

 protected:
  LevelTable build(Level level) const override {
    LevelTable t = generator_(level, schedule_.sizeAt(level));
    if (t.stateCount() != states_ || t.letterCount() != schedule_.sizeAt(level))
      throw Error(ErrorKind::SizeMismatch,
                  "generated table at level " + std::to_string(level) + " has wrong shape");
    return t;
  }

 private:
  AlphabetSchedule schedule_;
  std::size_t states_;
  std::function<LevelTable(Level, std::size_t)> generator_;
  bool closedForm_;
  std::optional<Periodicity> period_;
};

class InverseSource final : public LevelSource {
 public:
  explicit InverseSource(Automaton base) : base_(std::move(base)) {}

  std::size_t stateCount() const override { return base_.stateCount(); }
  const AlphabetSchedule& schedule() const override { return base_.schedule(); }
  std::optional<Periodicity> periodicity() const override { return base_.periodicity(); }
  bool closedFormBiReversible() const override { return base_.closedFormBiReversible(); }

 protected:
  LevelTable build(Level level) const override { return base_.inverseLevelTable(level); }

 private:
  Automaton base_;
};

class RestrictSource final : public LevelSource {
 public:
  RestrictSource(Automaton base, std::size_t k) : base_(std::move(base)), k_(k) {
    if (auto tp = base_.schedule().tailPeriod()) {
      period_ = Periodicity{std::max(k_, base_.schedule().prefix().size()), *tp};
    }
  }

  std::size_t stateCount() const override { return base_.stateCount(); }
  const AlphabetSchedule& schedule() const override { return base_.schedule(); }
  std::optional<Periodicity> periodicity() const override { return period_; }
  bool closedFormBiReversible() const override { return base_.closedFormBiReversible(); }

 protected:
  LevelTable build(Level level) const override {
    if (level <= k_) return base_.levelTable(level);
    return LevelTable::identity(base_.stateCount(), base_.schedule().sizeAt(level));
  }

 private:
  Automaton base_;
  std::size_t k_;
  std::optional<Periodicity> period_;
};

class EmbedSource final : public LevelSource {
 public:
  EmbedSource(Automaton base, SubsequenceRule xi, AlphabetSchedule host)
      : base_(std::move(base)), xi_(std::move(xi)), host_(std::move(host)) {
    const auto basePeriod = base_.periodicity();
    const auto hostPeriod = host_.tailPeriod();
    if (basePeriod && hostPeriod) {
      // Past j0 the base is periodic and xi is arithmetic.
      const std::size_t j0 = std::max(xi_.list.size(), basePeriod->prefix) + 1;
      const Level i0 = xi_.value(j0);
      period_ = Periodicity{std::max<std::size_t>(i0 - 1, host_.prefix().size()),
                            std::lcm(xi_.step * basePeriod->period, *hostPeriod)};
    }
  }

  std::size_t stateCount() const override { return base_.stateCount(); }
  const AlphabetSchedule& schedule() const override { return host_; }
  std::optional<Periodicity> periodicity() const override { return period_; }
  bool closedFormBiReversible() const override { return base_.closedFormBiReversible(); }

 protected:
  LevelTable build(Level level) const override {
    if (auto j = xi_.preimage(level)) {
      const LevelTable& t = base_.levelTable(*j);
      if (t.letterCount() != host_.sizeAt(level))
        throw Error(ErrorKind::ScheduleMismatch,
                    "embedded level " + std::to_string(level) + " size mismatch");
      return t;
    }
    return LevelTable::identity(base_.stateCount(), host_.sizeAt(level));
  }

 private:
  Automaton base_;
  SubsequenceRule xi_;
  AlphabetSchedule host_;
  std::optional<Periodicity> period_;
};

}  // namespace

std::vector<std::string> defaultStateNames(std::size_t count) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t q = 0; q < count; ++q) {
    if (q < 26) {
      names.emplace_back(1, static_cast<char>('a' + q));
    } else {
      names.push_back("q" + std::to_string(q + 1));
    }
  }
  return names;
}

Automaton::Automaton(std::shared_ptr<const detail::LevelSource> source, std::string family)
    : source_(std::move(source)),
      schedule_(source_->schedule()),
      family_(std::move(family)),
      stateNames_(defaultStateNames(source_->stateCount())) {}

Automaton Automaton::fromSource(std::shared_ptr<const detail::LevelSource> source,
                                std::string family) {
  return Automaton(std::move(source), std::move(family));
}

Automaton Automaton::explicitPeriodic(AlphabetSchedule schedule, std::vector<LevelTable> prefix,
                                      std::vector<LevelTable> period, std::string family) {
  if (period.empty()) throw Error(ErrorKind::InvalidTable, "period must be non-empty");
  const auto schedulePeriod = schedule.tailPeriod();
  if (!schedulePeriod)
    throw Error(ErrorKind::InvalidSchedule,
                "explicit periodic automata need a constant or periodic schedule tail");
  const std::size_t states = period.front().stateCount();
  Periodicity norm{std::max(prefix.size(), schedule.prefix().size()),
                   std::lcm(period.size(), *schedulePeriod)};
  std::vector<LevelTable> tables;
  tables.reserve(norm.phaseCount());
  for (Level i = 1; i <= norm.phaseCount(); ++i) {
    const LevelTable& t =
        i <= prefix.size() ? prefix[i - 1] : period[(i - prefix.size() - 1) % period.size()];
    if (t.stateCount() != states)
      throw Error(ErrorKind::InvalidTable, "level tables disagree on the state count");
    if (t.letterCount() != schedule.sizeAt(i))
      throw Error(ErrorKind::InvalidTable, "table at level " + std::to_string(i) +
                                               " does not match alphabet size " +
                                               std::to_string(schedule.sizeAt(i)));
    tables.push_back(t);
  }
  auto source = std::make_shared<ExplicitSource>(std::move(schedule), states, std::move(tables), norm);
  return Automaton(std::move(source), std::move(family));
}

Automaton Automaton::fromGenerator(AlphabetSchedule schedule, std::size_t states,
                                   std::function<LevelTable(Level, std::size_t)> generator,
                                   std::string family, bool sizeDetermined,
                                   bool closedFormBiReversible) {
  auto source = std::make_shared<GeneratorSource>(std::move(schedule), states, std::move(generator),
                                                  sizeDetermined, closedFormBiReversible);
  return Automaton(std::move(source), std::move(family));
}

std::optional<Periodicity> Automaton::periodicity() const {
  auto p = source_->periodicity();
  if (!p) return p;
  p->prefix = p->prefix > shift_ ? p->prefix - shift_ : 0;
  return p;
}

Automaton Automaton::shifted(std::size_t i) const {
  Automaton out = *this;
  out.shift_ += i;
  out.schedule_ = source_->schedule().shifted(out.shift_);
  return out;
}

Automaton Automaton::withStateNames(std::vector<std::string> names) const {
  if (names.size() != stateCount())
    throw Error(ErrorKind::SizeMismatch, "state name count differs from state count");
  Automaton out = *this;
  out.stateNames_ = std::move(names);
  return out;
}

Automaton Automaton::withFamily(std::string family) const {
  Automaton out = *this;
  out.family_ = std::move(family);
  return out;
}

std::optional<State> Automaton::findState(std::string_view name) const {
  for (State q = 0; q < stateNames_.size(); ++q) {
    if (stateNames_[q] == name) return q;
  }
  if (name.size() >= 2 && name[0] == 'q') {
    std::size_t index = 0;
    for (char c : name.substr(1)) {
      if (c < '0' || c > '9') return std::nullopt;
      index = index * 10 + static_cast<std::size_t>(c - '0');
    }
    if (index >= 1 && index <= stateCount()) return static_cast<State>(index - 1);
  }
  return std::nullopt;
}

Permutation labelingAt(const Automaton& a, Level level, State q) {
  return a.levelTable(level).labeling(q);
}

Word evaluateState(const Automaton& a, State q, std::span<const Letter> w) {
  if (q >= a.stateCount()) throw Error(ErrorKind::InvalidWord, "state out of range");
  if (!a.schedule().isValid(w)) throw Error(ErrorKind::InvalidWord, "word is not valid for the schedule");
  Word out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    const LevelTable& t = a.levelTable(i + 1);
    out[i] = t.out(q, w[i]);
    q = t.next(q, w[i]);
  }
  return out;
}

Automaton invert(const Automaton& a) {
  auto inv = Automaton::fromSource(std::make_shared<InverseSource>(a), a.family() + "^-1");
  return inv.withStateNames(a.stateNames());
}

Automaton shift(const Automaton& a, std::size_t i) { return a.shifted(i); }

Automaton restrict(const Automaton& a, std::size_t k) {
  auto r = Automaton::fromSource(std::make_shared<RestrictSource>(a, k),
                                 a.family() + "|^" + std::to_string(k));
  return r.withStateNames(a.stateNames());
}

bool isMealy(const Automaton& a) {
  const auto p = a.periodicity();
  if (!p) return false;
  const auto& sched = a.schedule();
  if (!sched.bound()) return false;
  const std::size_t d = sched.sizeAt(1);
  const LevelTable& first = a.levelTable(1);
  for (Level i = 1; i <= p->phaseCount(); ++i) {
    if (sched.sizeAt(i) != d || !(a.levelTable(i) == first)) return false;
  }
  return true;
}

Automaton dual(const Automaton& a) {
  if (!isMealy(a)) throw Error(ErrorKind::NotMealy, "dual requires a Mealy automaton");
  const LevelTable& t = a.levelTable(1);
  const std::size_t n = t.stateCount();
  const std::size_t d = t.letterCount();
  LevelTable swapped(d, n);
  for (Letter x = 0; x < d; ++x) {
    for (State q = 0; q < n; ++q) swapped.set(x, static_cast<Letter>(q), t.out(q, x), t.next(q, x));
  }
  std::vector<std::string> names;
  for (Letter x = 0; x < d; ++x) names.push_back("x" + std::to_string(x));
  return Automaton::explicitPeriodic(AlphabetSchedule::constant(n), {}, {swapped},
                                     "dual(" + a.family() + ")")
      .withStateNames(std::move(names));
}

bool isInvertibleAt(const Automaton& a, Level level) { return a.levelTable(level).isInvertible(); }
bool isReversibleAt(const Automaton& a, Level level) { return a.levelTable(level).isReversible(); }
bool isDiagonalAt(const Automaton& a, Level level) { return a.levelTable(level).isDiagonal(); }

std::string_view toString(BiReversibilityFailure reason) {
  switch (reason) {
    case BiReversibilityFailure::NotInvertible: return "NotInvertible";
    case BiReversibilityFailure::NotReversible: return "NotReversible";
    case BiReversibilityFailure::InverseNotReversible: return "InverseNotReversible";
  }
  return "Unknown";
}

BiReversibilityVerdict isBiReversible(const Automaton& a, Level upToLevel) {
  BiReversibilityVerdict v;
  const auto p = a.periodicity();
  const Level depth = p ? p->phaseCount() : upToLevel;
  v.scope = (p || a.closedFormBiReversible()) ? VerdictScope::ExactAllLevels
                                              : VerdictScope::CheckedUpToLevel;
  v.checkedUpTo = depth;
  for (Level i = 1; i <= depth; ++i) {
    const LevelTable& t = a.levelTable(i);
    std::optional<BiReversibilityFailure> failure;
    if (!t.isInvertible()) {
      failure = BiReversibilityFailure::NotInvertible;
    } else if (!t.isReversible()) {
      failure = BiReversibilityFailure::NotReversible;
    } else if (!t.inverse().isReversible()) {
      failure = BiReversibilityFailure::InverseNotReversible;
    }
    if (failure) {
      v.holds = false;
      v.failLevel = i;
      v.reason = *failure;
      return v;
    }
  }
  return v;
}

Level SubsequenceRule::value(std::size_t j) const {
  if (j == 0) throw Error(ErrorKind::InvalidSchedule, "subsequence index is 1-based");
  if (j <= list.size()) return list[j - 1];
  const std::size_t past = j - list.size();
  if (list.empty()) return start + (past - 1) * step;
  return list.back() + past * step;
}

std::optional<std::size_t> SubsequenceRule::preimage(Level i) const {
  auto it = std::lower_bound(list.begin(), list.end(), i);
  if (it != list.end()) {
    if (*it == i) return static_cast<std::size_t>(it - list.begin()) + 1;
    return std::nullopt;
  }
  const Level first = value(list.size() + 1);
  if (i < first || (i - first) % step != 0) return std::nullopt;
  return list.size() + 1 + (i - first) / step;
}

void SubsequenceRule::validate() const {
  if (step == 0) throw Error(ErrorKind::InvalidSchedule, "subsequence step must be >= 1");
  if (list.empty() && start == 0)
    throw Error(ErrorKind::InvalidSchedule, "subsequence start must be >= 1");
  for (std::size_t j = 0; j < list.size(); ++j) {
    if (list[j] == 0 || (j > 0 && list[j] <= list[j - 1]))
      throw Error(ErrorKind::InvalidSchedule, "subsequence list must be strictly increasing and >= 1");
  }
}

Automaton embedOnSubsequence(const Automaton& a, const SubsequenceRule& xi,
                             const AlphabetSchedule& host) {
  xi.validate();
  // Sizes along the subsequence are eventually periodic with period dividing
  // lcm of both tail periods; ramp schedules are checked on a fixed horizon.
  const auto& inner = a.schedule();
  const std::size_t settle = std::max({xi.list.size(), inner.prefix().size(), host.prefix().size()});
  std::size_t horizon = settle + 256;
  if (auto pa = inner.tailPeriod(), ph = host.tailPeriod(); pa && ph) {
    horizon = settle + std::lcm(*pa, *ph) + 1;
  }
  for (std::size_t j = 1; j <= horizon; ++j) {
    if (inner.sizeAt(j) != host.sizeAt(xi.value(j)))
      throw Error(ErrorKind::ScheduleMismatch,
                  "level " + std::to_string(j) + " of the embedded automaton has size " +
                      std::to_string(inner.sizeAt(j)) + " but host level " +
                      std::to_string(xi.value(j)) + " has size " +
                      std::to_string(host.sizeAt(xi.value(j))));
  }
  auto b = Automaton::fromSource(std::make_shared<EmbedSource>(a, xi, host),
                                 "embed(" + a.family() + ")");
  return b.withStateNames(a.stateNames());
}

PeriodicForm canonicalPeriodicForm(const Automaton& a) {
  const auto p = a.periodicity();
  if (!p) throw Error(ErrorKind::UndecidableRepresentation, "automaton has no known period");
  // Smallest period dividing the known one, then the shortest prefix.
  std::size_t period = p->period;
  for (std::size_t cand = 1; cand <= p->period; ++cand) {
    if (p->period % cand != 0) continue;
    bool ok = true;
    for (Level i = p->prefix + 1; ok && i <= p->prefix + p->period; ++i) {
      ok = a.levelTable(i) == a.levelTable(i + cand);
    }
    if (ok) {
      period = cand;
      break;
    }
  }
  std::size_t prefix = p->prefix;
  while (prefix > 0 && a.levelTable(prefix) == a.levelTable(prefix + period)) --prefix;
  PeriodicForm form;
  for (Level i = 1; i <= prefix; ++i) form.prefix.push_back(a.levelTable(i));
  for (Level i = prefix + 1; i <= prefix + period; ++i) form.period.push_back(a.levelTable(i));
  return form;
}

bool tablesEqual(const Automaton& lhs, const Automaton& rhs, Level depth) {
  if (lhs.stateCount() != rhs.stateCount()) return false;
  for (Level i = 1; i <= depth; ++i) {
    if (lhs.schedule().sizeAt(i) != rhs.schedule().sizeAt(i)) return false;
    if (!(lhs.levelTable(i) == rhs.levelTable(i))) return false;
  }
  return true;
}

}  // namespace birev
