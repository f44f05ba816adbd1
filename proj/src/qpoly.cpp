#include "mobius3/qpoly.hpp"

#include "mobius3/error.hpp"

namespace mobius3 {

QPoly::QPoly(long long c) : QPoly(Rational(c)) {}

QPoly::QPoly(Rational c) {
  if (c != 0) c_[0] = std::move(c);
}

QPoly QPoly::terms(std::initializer_list<std::pair<int, Rational>> ts) {
  QPoly out;
  for (const auto& [e, c] : ts) out.c_[e] += c;
  out.trim();
  return out;
}

QPoly QPoly::q() { return terms({{1, 1}}); }

int QPoly::degree() const { return c_.empty() ? -1 : c_.rbegin()->first; }

Rational QPoly::leading() const { return c_.empty() ? Rational(0) : c_.rbegin()->second; }

void QPoly::trim() {
  std::erase_if(c_, [](const auto& kv) { return kv.second == 0; });
}

QPoly& QPoly::operator+=(const QPoly& o) {
  for (const auto& [e, c] : o.c_) c_[e] += c;
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  for (const auto& [e, c] : o.c_) c_[e] -= c;
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const QPoly& o) {
  std::map<int, Rational> out;
  for (const auto& [e1, c1] : c_)
    for (const auto& [e2, c2] : o.c_) out[e1 + e2] += c1 * c2;
  c_ = std::move(out);
  trim();
  return *this;
}

QPoly QPoly::pow(unsigned e) const {
  QPoly out(1);
  for (unsigned i = 0; i < e; ++i) out *= *this;
  return out;
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& d) const {
  if (d.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  QPoly quot;
  QPoly rem = *this;
  const int dd = d.degree();
  const Rational lead = d.leading();
  while (!rem.is_zero() && rem.degree() >= dd) {
    QPoly t = terms({{rem.degree() - dd, rem.leading() / lead}});
    quot += t;
    rem -= t * d;
  }
  return {quot, rem};
}

QPoly QPoly::exact_div(const QPoly& d) const {
  auto [quot, rem] = divmod(d);
  if (!rem.is_zero())
    throw Error(ErrorKind::VerificationMismatch, "(" + str() + ") / (" + d.str() + ") leaves " + rem.str());
  return quot;
}

Rational QPoly::eval(const BigInt& q) const {
  Rational acc = 0;
  int e_prev = degree();
  // Horner over the sparse exponents, top down.
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= Rational(ipow(q, static_cast<unsigned>(e_prev - it->first)));
    acc += it->second;
    e_prev = it->first;
  }
  return acc * Rational(ipow(q, static_cast<unsigned>(c_.empty() ? 0 : e_prev)));
}

BigInt QPoly::eval_int(const BigInt& q) const {
  const Rational v = eval(q);
  if (boost::multiprecision::denominator(v) != 1)
    throw Error(ErrorKind::VerificationMismatch, str() + " is not integral at q = " + q.str());
  return boost::multiprecision::numerator(v);
}

std::string QPoly::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : c_) {
    std::string term = to_string(c);
    if (e > 0) term += "*q^" + std::to_string(e);
    if (out.empty()) {
      out = term;
    } else if (term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

}  // namespace mobius3
