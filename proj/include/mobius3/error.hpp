#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mobius3 {

/// Failure categories. Each maps onto one of the CLI exit codes
/// (2 invalid input, 3 verification mismatch, 4 budget exceeded).
enum class ErrorKind {
  NotPrime,
  TooLarge,
  DivisionByZero,
  InvalidQ,
  InvalidP,
  InvalidKind,
  InvalidInput,
  Singular,
  UnsupportedLine,
  CapExceeded,
  BudgetExceeded,
  NonIntegralCount,
  VerificationMismatch,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }
  int exit_code() const noexcept;

 private:
  ErrorKind kind_;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitMismatch = 3;
inline constexpr int kExitBudget = 4;

}  // namespace mobius3
