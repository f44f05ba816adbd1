#pragma once

// Table-driven arithmetic in GF(p^k) for p^k <= 128.
//
// An element is stored as an index in [0, q): the base-p digits of the index
// are the coefficients (ascending) of its polynomial representative modulo
// the field's fixed irreducible modulus. So 0 is zero, 1 is one, and for
// k > 1 the index p is the class of x.

#include <cstdint>
#include <optional>
#include <vector>

namespace mobius3 {

using Fq = std::uint8_t;

inline constexpr int kMaxFieldSize = 128;

bool is_prime(long long n);

/// (p, k) with p^k == q, or nullopt when q is not a prime power.
std::optional<std::pair<int, int>> prime_power(long long q);

/// Built-in modulus for GF(p^k), coefficients ascending and monic. Degree one
/// fields use x - g with g the least primitive root mod p.
std::vector<int> builtin_modulus(int p, int k);

class FieldSpec {
 public:
  FieldSpec() = default;

  int p() const noexcept { return p_; }
  int k() const noexcept { return k_; }
  int q() const noexcept { return q_; }
  const std::vector<int>& modulus() const noexcept { return modulus_; }
  Fq primitive() const noexcept { return primitive_; }

  Fq add(Fq a, Fq b) const noexcept { return add_[a * q_ + b]; }
  Fq sub(Fq a, Fq b) const noexcept { return add_[a * q_ + neg_[b]]; }
  Fq mul(Fq a, Fq b) const noexcept { return mul_[a * q_ + b]; }
  Fq neg(Fq a) const noexcept { return neg_[a]; }
  /// Throws Error(DivisionByZero) on zero.
  Fq inv(Fq a) const;
  Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }
  /// Negative exponents invert first; 0^0 == 1.
  Fq pow(Fq a, long long e) const;
  /// a^(p^i).
  Fq frobenius(Fq a, int i) const;

  /// Discrete log base the primitive element; requires a != 0.
  int log(Fq a) const;
  Fq exp(long long e) const;

  bool is_cube(Fq a) const;

  // Raw tables for the hot loops in scan kernels.
  const Fq* add_table() const noexcept { return add_.data(); }
  const Fq* mul_table() const noexcept { return mul_.data(); }
  const Fq* inv_table() const noexcept { return inv_.data(); }

  friend FieldSpec make_field(int p, int k);

 private:
  int p_ = 0;
  int k_ = 0;
  int q_ = 0;
  std::vector<int> modulus_;
  Fq primitive_ = 0;
  std::vector<Fq> add_, mul_, neg_, inv_;
  std::vector<Fq> exp_;  // length q - 1, exp_[0] == 1
  std::vector<int> log_; // log_[0] unused (-1)
};

/// Throws NotPrime if p is not prime, TooLarge if p^k > 128 (or k < 1).
FieldSpec make_field(int p, int k);

/// Field of the given order; throws InvalidQ if q is not a prime power.
FieldSpec make_field_q(int q);

}  // namespace mobius3
