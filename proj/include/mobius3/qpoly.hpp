#pragma once

// Sparse polynomials in q with exact rational coefficients.

#include "mobius3/bigint.hpp"

#include <initializer_list>
#include <map>
#include <string>
#include <utility>

namespace mobius3 {

class QPoly {
 public:
  QPoly() = default;
  QPoly(long long c);  // NOLINT: constants convert implicitly
  QPoly(Rational c);   // NOLINT
  /// Sum of c * q^e over the given (e, c) pairs.
  static QPoly terms(std::initializer_list<std::pair<int, Rational>> ts);
  static QPoly q();

  const std::map<int, Rational>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  int degree() const;  // -1 for zero
  Rational leading() const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }
  friend QPoly operator-(const QPoly& a) { return QPoly(0) - a; }
  bool operator==(const QPoly& o) const = default;

  QPoly pow(unsigned e) const;

  /// Quotient and remainder by long division over Q.
  std::pair<QPoly, QPoly> divmod(const QPoly& d) const;
  /// Exact quotient; throws VerificationMismatch on a nonzero remainder.
  QPoly exact_div(const QPoly& d) const;

  Rational eval(const BigInt& q) const;
  /// Value at q, which must be an integer; throws VerificationMismatch.
  BigInt eval_int(const BigInt& q) const;

  /// Sparse "c*q^e" terms in ascending exponent order, "0" when empty.
  std::string str() const;

 private:
  void trim();
  std::map<int, Rational> c_;
};

}  // namespace mobius3
