#include "mobius3/error.hpp"

namespace mobius3 {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::InvalidQ: return "InvalidQ";
    case ErrorKind::InvalidP: return "InvalidP";
    case ErrorKind::InvalidKind: return "InvalidKind";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::UnsupportedLine: return "UnsupportedLine";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NonIntegralCount: return "NonIntegralCount";
    case ErrorKind::VerificationMismatch: return "VerificationMismatch";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

int Error::exit_code() const noexcept {
  switch (kind_) {
    case ErrorKind::CapExceeded:
    case ErrorKind::BudgetExceeded:
    case ErrorKind::TooLarge:
      return kExitBudget;
    case ErrorKind::NonIntegralCount:
    case ErrorKind::VerificationMismatch:
      return kExitMismatch;
    default:
      return kExitInvalidInput;
  }
}

}  // namespace mobius3
