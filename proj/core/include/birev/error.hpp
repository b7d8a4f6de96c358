#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace birev {

/// Failure categories surfaced by the engine. The CLI maps all of them to
/// exit code 2 except where an analysis verdict is reported instead.
enum class ErrorKind {
  InvalidSchedule,
  InvalidWord,
  InvalidTable,
  NotInvertibleAtLevel,
  NotMealy,
  ScheduleMismatch,
  SizeMismatch,
  SizeTooSmall,
  IndexTooSmall,
  BudgetExceeded,
  OrderCapExceeded,
  MemoryBudget,
  NotTwoState,
  NotBinary,
  NotBiReversible,
  NotBiReversibleAtLevel,
  UndecidableRepresentation,
  UnboundedSchedule,
  NonCoprimeModuli,
  NotOnSameCycle,
  PreconditionCoprimality,
  PreconditionSize,
  VerificationFailed,
  ParseError,
};

std::string_view toString(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace birev
