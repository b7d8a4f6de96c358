#include "birev/error.hpp"

namespace birev {

std::string_view toString(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidSchedule: return "InvalidSchedule";
    case ErrorKind::InvalidWord: return "InvalidWord";
    case ErrorKind::InvalidTable: return "InvalidTable";
    case ErrorKind::NotInvertibleAtLevel: return "NotInvertibleAtLevel";
    case ErrorKind::NotMealy: return "NotMealy";
    case ErrorKind::ScheduleMismatch: return "ScheduleMismatch";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::SizeTooSmall: return "SizeTooSmall";
    case ErrorKind::IndexTooSmall: return "IndexTooSmall";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorKind::MemoryBudget: return "MemoryBudget";
    case ErrorKind::NotTwoState: return "NotTwoState";
    case ErrorKind::NotBinary: return "NotBinary";
    case ErrorKind::NotBiReversible: return "NotBiReversible";
    case ErrorKind::NotBiReversibleAtLevel: return "NotBiReversibleAtLevel";
    case ErrorKind::UndecidableRepresentation: return "UndecidableRepresentation";
    case ErrorKind::UnboundedSchedule: return "UnboundedSchedule";
    case ErrorKind::NonCoprimeModuli: return "NonCoprimeModuli";
    case ErrorKind::NotOnSameCycle: return "NotOnSameCycle";
    case ErrorKind::PreconditionCoprimality: return "PreconditionCoprimality";
    case ErrorKind::PreconditionSize: return "PreconditionSize";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace birev
