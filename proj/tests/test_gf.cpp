#include "mobius3/error.hpp"
#include "mobius3/gf.hpp"

#include <doctest.h>

#include <random>

using namespace mobius3;

namespace {

// Schoolbook product of two elements read as base-p digit vectors,
// reduced by the field's monic modulus. Independent of the tables.
int poly_mul(const FieldSpec& f, int a, int b) {
  const int p = f.p(), k = f.k();
  std::vector<int> x(k), y(k), z(2 * k, 0);
  for (int i = 0; i < k; ++i, a /= p, b /= p) {
    x[i] = a % p;
    y[i] = b % p;
  }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) z[i + j] = (z[i + j] + x[i] * y[j]) % p;
  const auto& m = f.modulus();  // ascending, length k + 1, monic
  for (int d = 2 * k - 1; d >= k; --d) {
    const int c = z[d];
    if (!c) continue;
    for (int i = 0; i <= k; ++i) z[d - k + i] = ((z[d - k + i] - c * m[i]) % p + p) % p;
  }
  int out = 0;
  for (int i = k - 1; i >= 0; --i) out = out * p + z[i];
  return out;
}

}  // namespace

TEST_SUITE("gf") {
  TEST_CASE("prime field GF(2)") {
    const FieldSpec f = make_field(2, 1);
    CHECK(f.q() == 2);
    CHECK(f.add(1, 1) == 0);
    CHECK(f.frobenius(1, 1) == 1);
  }

  TEST_CASE("GF(4) with modulus x^2+x+1") {
    const FieldSpec f = make_field(2, 2);
    CHECK(f.modulus() == std::vector<int>{1, 1, 1});
    const Fq x = 2, x1 = 3;
    CHECK(f.mul(x, x1) == 1);
    CHECK(f.add(x, x) == 0);
    CHECK(f.frobenius(x, 1) == x1);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) CHECK(f.mul(a, b) == poly_mul(f, a, b));
  }

  TEST_CASE("GF(8) multiplicative group") {
    const FieldSpec f = make_field(2, 3);
    for (int a = 1; a < 8; ++a) {
      CHECK(f.pow(a, 7) == 1);
      CHECK(f.mul(f.inv(a), a) == 1);
      CHECK(f.frobenius(a, 3) == a);
    }
    CHECK(f.pow(f.primitive(), 7) == 1);
    for (int e = 1; e < 7; ++e) CHECK(f.pow(f.primitive(), e) != 1);
  }

  TEST_CASE("tables agree with polynomial arithmetic") {
    for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64, 81, 121, 125, 128}) {
      const FieldSpec f = make_field_q(q);
      std::mt19937 rng(q);
      for (int t = 0; t < 2000; ++t) {
        const int a = rng() % q, b = rng() % q;
        REQUIRE(f.mul(a, b) == poly_mul(f, a, b));
      }
    }
  }

  TEST_CASE("field axioms") {
    for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
      const FieldSpec f = make_field_q(q);
      for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
          REQUIRE(f.add(a, b) == f.add(b, a));
          REQUIRE(f.mul(a, b) == f.mul(b, a));
          for (int c = 0; c < q; ++c) {
            REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            REQUIRE(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
            REQUIRE(f.add(a, f.add(b, c)) == f.add(f.add(a, b), c));
          }
        }
    }
    for (int q : {32, 64, 81, 125, 128}) {
      const FieldSpec f = make_field_q(q);
      std::mt19937 rng(7 * q);
      for (int t = 0; t < 10000; ++t) {
        const Fq a = rng() % q, b = rng() % q, c = rng() % q;
        REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        REQUIRE(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
        REQUIRE(f.sub(f.add(a, b), b) == a);
      }
    }
  }

  TEST_CASE("log and exp round trip") {
    for (int q : {3, 8, 27, 128}) {
      const FieldSpec f = make_field_q(q);
      CHECK(f.exp(0) == 1);
      for (int a = 1; a < q; ++a) CHECK(f.exp(f.log(a)) == a);
    }
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(make_field(4, 1), Error);
    try {
      make_field(2, 8);
      FAIL("expected TooLarge");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::TooLarge);
    }
    const FieldSpec f = make_field(3, 1);
    try {
      (void)f.inv(0);
      FAIL("expected DivisionByZero");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DivisionByZero);
    }
  }
}
