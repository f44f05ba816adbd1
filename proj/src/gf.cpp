#include "mobius3/gf.hpp"

#include "mobius3/error.hpp"

#include <map>
#include <string>

namespace mobius3 {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<int, int>> prime_power(long long q) {
  if (q < 2) return std::nullopt;
  long long p = 2;
  while (q % p != 0) ++p;
  int k = 0;
  long long r = q;
  while (r % p == 0) {
    r /= p;
    ++k;
  }
  if (r != 1) return std::nullopt;
  return std::make_pair(static_cast<int>(p), k);
}

namespace {

using Poly = std::vector<int>;  // ascending coefficients mod p

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, int p) {
  trim(a);
  const int dm = static_cast<int>(m.size()) - 1;
  // modulus is monic in every use here
  while (static_cast<int>(a.size()) - 1 >= dm) {
    const int shift = static_cast<int>(a.size()) - 1 - dm;
    const int c = a.back();
    for (int i = 0; i <= dm; ++i) a[shift + i] = ((a[shift + i] - c * m[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

bool has_factor_of_degree(const Poly& f, int d, int p) {
  // enumerate monic polynomials of degree d
  long long count = 1;
  for (int i = 0; i < d; ++i) count *= p;
  for (long long code = 0; code < count; ++code) {
    Poly g(d + 1, 0);
    long long c = code;
    for (int i = 0; i < d; ++i) {
      g[i] = static_cast<int>(c % p);
      c /= p;
    }
    g[d] = 1;
    if (poly_mod(f, g, p).empty()) return true;
  }
  return false;
}

bool irreducible(const Poly& f, int p) {
  const int deg = static_cast<int>(f.size()) - 1;
  for (int d = 1; d <= deg / 2; ++d)
    if (has_factor_of_degree(f, d, p)) return false;
  return true;
}

int least_primitive_root(int p) {
  if (p == 2) return 1;
  for (int g = 2; g < p; ++g) {
    int order = 1;
    long long x = g;
    while (x != 1) {
      x = x * g % p;
      ++order;
    }
    if (order == p - 1) return g;
  }
  return 1;
}

}  // namespace

std::vector<int> builtin_modulus(int p, int k) {
  // Conway polynomials for the non-prime fields of order <= 128.
  static const std::map<std::pair<int, int>, std::vector<int>> table = {
      {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}},
      {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
      {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
      {{3, 2}, {2, 2, 1}},
      {{3, 3}, {1, 2, 0, 1}},
      {{3, 4}, {2, 0, 0, 2, 1}},
      {{5, 2}, {2, 4, 1}},
      {{5, 3}, {3, 3, 0, 1}},
      {{7, 2}, {3, 6, 1}},
      {{11, 2}, {2, 7, 1}},
  };
  if (k == 1) {
    const int g = least_primitive_root(p);
    return {(p - g) % p, 1};
  }
  auto it = table.find({p, k});
  if (it == table.end())
    throw Error(ErrorKind::TooLarge, "no built-in modulus for GF(" + std::to_string(p) + "^" + std::to_string(k) + ")");
  return it->second;
}

FieldSpec make_field(int p, int k) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (k < 1) throw Error(ErrorKind::TooLarge, "extension degree must be >= 1");
  long long q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxFieldSize) throw Error(ErrorKind::TooLarge, "field order exceeds 128");
  }

  FieldSpec f;
  f.p_ = p;
  f.k_ = k;
  f.q_ = static_cast<int>(q);
  f.modulus_ = builtin_modulus(p, k);
  if (static_cast<int>(f.modulus_.size()) != k + 1 || f.modulus_.back() != 1 || !irreducible(f.modulus_, p))
    throw Error(ErrorKind::VerificationMismatch, "built-in modulus is not monic irreducible");

  const int n = f.q_;
  auto digits = [&](int idx) {
    Poly a(k, 0);
    for (int i = 0; i < k; ++i) {
      a[i] = idx % p;
      idx /= p;
    }
    return a;
  };
  auto index = [&](const Poly& a) {
    int idx = 0;
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) idx = idx * p + a[i];
    return idx;
  };

  f.add_.assign(n * n, 0);
  f.mul_.assign(n * n, 0);
  f.neg_.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    const Poly da = digits(a);
    Poly na(k);
    for (int i = 0; i < k; ++i) na[i] = (p - da[i]) % p;
    f.neg_[a] = static_cast<Fq>(index(na));
    for (int b = 0; b < n; ++b) {
      const Poly db = digits(b);
      Poly s(k);
      for (int i = 0; i < k; ++i) s[i] = (da[i] + db[i]) % p;
      f.add_[a * n + b] = static_cast<Fq>(index(s));
      Poly prod(2 * k, 0);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      Poly r = poly_mod(prod, f.modulus_, p);
      r.resize(k, 0);
      f.mul_[a * n + b] = static_cast<Fq>(index(r));
    }
  }

  f.inv_.assign(n, 0);
  for (int a = 1; a < n; ++a)
    for (int b = 1; b < n; ++b)
      if (f.mul_[a * n + b] == 1) f.inv_[a] = static_cast<Fq>(b);

  // least element of full multiplicative order
  for (int g = 1; g < n; ++g) {
    int order = 1;
    int x = g;
    while (x != 1) {
      x = f.mul_[x * n + g];
      ++order;
    }
    if (order == n - 1) {
      f.primitive_ = static_cast<Fq>(g);
      break;
    }
  }
  f.exp_.assign(n - 1, 0);
  f.log_.assign(n, -1);
  int x = 1;
  for (int e = 0; e < n - 1; ++e) {
    f.exp_[e] = static_cast<Fq>(x);
    f.log_[x] = e;
    x = f.mul_[x * n + f.primitive_];
  }
  return f;
}

FieldSpec make_field_q(int q) {
  auto pk = prime_power(q);
  if (!pk) throw Error(ErrorKind::InvalidQ, std::to_string(q) + " is not a prime power");
  return make_field(pk->first, pk->second);
}

Fq FieldSpec::inv(Fq a) const {
  if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  return inv_[a];
}

int FieldSpec::log(Fq a) const {
  if (a == 0) throw Error(ErrorKind::DivisionByZero, "log of zero");
  return log_[a];
}

Fq FieldSpec::exp(long long e) const {
  const long long m = q_ - 1;
  return exp_[((e % m) + m) % m];
}

Fq FieldSpec::pow(Fq a, long long e) const {
  if (a == 0) {
    if (e == 0) return 1;
    if (e < 0) throw Error(ErrorKind::DivisionByZero, "negative power of zero");
    return 0;
  }
  return exp(static_cast<long long>(log_[a]) * (e % (q_ - 1)));
}

Fq FieldSpec::frobenius(Fq a, int i) const {
  long long e = 1;
  for (int j = 0; j < i % k_; ++j) e *= p_;
  return pow(a, e);
}

bool FieldSpec::is_cube(Fq a) const {
  if (a == 0) return true;
  const int g = (q_ - 1) % 3 == 0 ? 3 : 1;
  return log_[a] % g == 0;
}

}  // namespace mobius3
