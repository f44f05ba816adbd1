#include "mobius3/eulerchar.hpp"

#include "mobius3/error.hpp"
#include "mobius3/gf.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mobius3 {

std::string to_string(RCase c) {
  switch (c) {
    case RCase::NotDividing: return "NotDividing";
    case RCase::DividesQ: return "DividesQ";
    case RCase::DividesQ2Q1_not3: return "DividesQ2Q1_not3";
    case RCase::DividesQplus1_not2: return "DividesQplus1_not2";
    case RCase::DividesQminus1_not23: return "DividesQminus1_not23";
    case RCase::Two_Qodd: return "Two_Qodd";
    case RCase::Three_divQminus1: return "Three_divQminus1";
  }
  return "?";
}

RCase r_case(int q, int r) {
  if (q < 2 || q > kMaxFieldSize || !prime_power(q)) throw Error(ErrorKind::InvalidInput, "q must be a prime power <= 128");
  if (!is_prime(r)) throw Error(ErrorKind::InvalidInput, "r must be prime");
  const BigInt Q = q;
  const BigInt order = Q * Q * Q * (Q * Q * Q - 1) * (Q * Q - 1);
  if (order % r != 0) return RCase::NotDividing;
  if (q % r == 0) return RCase::DividesQ;
  if (r == 3 && (q - 1) % 3 == 0) return RCase::Three_divQminus1;
  if (r == 2 && q % 2 == 1) return RCase::Two_Qodd;
  if ((q - 1) % r == 0) return RCase::DividesQminus1_not23;
  if ((q + 1) % r == 0) return RCase::DividesQplus1_not2;
  return RCase::DividesQ2Q1_not3;
}

BigInt chi_closed(int q, int r) {
  const RCase c = r_case(q, r);
  const BigInt Q = q;
  auto exact = [](const BigInt& a, int b) {
    if (a % b != 0) throw Error(ErrorKind::VerificationMismatch, "closed form is not integral");
    return BigInt(a / b);
  };
  switch (c) {
    case RCase::NotDividing: return 0;
    case RCase::DividesQ: return -(Q * Q * Q - 1);
    case RCase::DividesQ2Q1_not3: return exact(Q * Q * Q * (Q - 1) * (Q - 1) * (Q + 1), 3);
    case RCase::DividesQplus1_not2: return exact(Q * Q * Q * (Q * Q * Q - 1), 2);
    case RCase::DividesQminus1_not23:
    case RCase::Two_Qodd: return -exact(Q * Q * (Q * Q + Q + 1) * (Q * Q + Q - 3), 3);
    case RCase::Three_divQminus1: {
      const BigInt q3 = Q * Q * Q;
      return -exact(Q * Q * (q3 * q3 - q3 * Q + 7 * q3 - 7 * Q - 8), 8);
    }
  }
  return 0;
}

SubgroupRec pgl_full(const Pgl3& ctx) {
  if (ctx.q() > 5) throw Error(ErrorKind::BudgetExceeded, "brute force is limited to q <= 5");
  return closure(ctx, ctx.full_generators(GroupKind::PGL), 400'000);
}

namespace {

using Elems = std::vector<std::uint32_t>;

// <H, x> when x normalizes H and x^r lies in H: the cosets x^i H, i < r.
Elems extend_by(const IndexedGroup& g, const Elems& h, std::uint32_t x, int r) {
  Elems out;
  out.reserve(h.size() * r);
  std::uint32_t xi = g.identity();
  for (int i = 0; i < r; ++i) {
    for (std::uint32_t e : h) out.push_back(g.mul(xi, e));
    xi = g.mul(xi, x);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_r_power(std::uint64_t n, int r) {
  while (n % r == 0) n /= r;
  return n == 1;
}

}  // namespace

std::vector<ElemAbelianRecord> elem_abelian(const IndexedGroup& g, int r, std::uint64_t budget) {
  if (!is_prime(r)) throw Error(ErrorKind::InvalidInput, "r must be prime");
  // One representative per subgroup of order r: its least element.
  std::vector<std::uint32_t> reps;
  std::vector<Elems> cyc;
  {
    Marker seen(g.size());
    seen.reset();
    for (std::uint32_t a = 0; a < g.size(); ++a) {
      if (g.order_of(a) != static_cast<std::uint32_t>(r) || seen.test(a)) continue;
      Elems c = {g.identity()};
      std::uint32_t x = a;
      for (int i = 1; i < r; ++i, x = g.mul(x, a)) {
        seen.set(x);
        c.push_back(x);
      }
      std::sort(c.begin(), c.end());
      reps.push_back(a);
      cyc.push_back(std::move(c));
    }
  }

  std::vector<ElemAbelianRecord> out;
  if (reps.empty()) return out;

  const std::size_t n = reps.size();
  std::vector<std::vector<std::uint32_t>> commuting(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (g.mul(reps[i], reps[j]) == g.mul(reps[j], reps[i])) {
        commuting[i].push_back(static_cast<std::uint32_t>(j));
        commuting[j].push_back(static_cast<std::uint32_t>(i));
      }

  struct Sub {
    Elems elems;
    std::vector<std::uint32_t> gens;  // indices into reps
  };
  std::vector<Sub> level;
  for (std::size_t i = 0; i < n; ++i) level.push_back({cyc[i], {static_cast<std::uint32_t>(i)}});

  std::uint64_t total = 0;
  Marker mk(g.size());
  for (int rank = 1; !level.empty(); ++rank) {
    total += level.size();
    if (total > budget) throw Error(ErrorKind::BudgetExceeded, "too many elementary abelian subgroups");
    ElemAbelianRecord rec;
    rec.rank = rank;
    rec.count = level.size();
    std::set<Elems> next_set;
    std::vector<Sub> next;
    for (const Sub& s : level) {
      mk.reset();
      for (std::uint32_t e : s.elems) mk.set(e);
      for (std::uint32_t j : commuting[s.gens.front()]) {
        if (mk.test(reps[j])) continue;
        bool ok = true;
        for (std::size_t t = 1; t < s.gens.size() && ok; ++t)
          ok = g.mul(reps[j], reps[s.gens[t]]) == g.mul(reps[s.gens[t]], reps[j]);
        if (!ok) continue;
        Elems e = extend_by(g, s.elems, reps[j], r);
        if (next_set.insert(e).second) {
          Sub ns{std::move(e), s.gens};
          ns.gens.push_back(j);
          next.push_back(std::move(ns));
        }
      }
    }
    for (Sub& s : level) rec.subgroups.push_back(std::move(s.elems));
    std::sort(rec.subgroups.begin(), rec.subgroups.end());
    out.push_back(std::move(rec));
    level = std::move(next);
  }
  return out;
}

BigInt chi_bruteforce(const IndexedGroup& g, int r) {
  BigInt sum = 0;
  for (const ElemAbelianRecord& rec : elem_abelian(g, r)) {
    const BigInt term = BigInt(rec.count) * ipow(BigInt(r), static_cast<unsigned>(rec.rank * (rec.rank - 1) / 2));
    sum += rec.rank % 2 ? -term : term;
  }
  return -sum;
}

std::vector<Elems> r_subgroups(const IndexedGroup& g, int r, std::size_t max_count) {
  if (!is_prime(r)) throw Error(ErrorKind::InvalidInput, "r must be prime");
  std::vector<std::uint32_t> rpow;
  for (std::uint32_t a = 0; a < g.size(); ++a)
    if (a != g.identity() && is_r_power(g.order_of(a), r)) rpow.push_back(a);

  struct Sub {
    Elems elems;
    std::vector<std::uint32_t> gens;
  };
  std::vector<Sub> level;
  {
    std::set<Elems> seen;
    for (std::uint32_t a : rpow) {
      if (g.order_of(a) != static_cast<std::uint32_t>(r)) continue;
      Elems e = extend_by(g, {g.identity()}, a, r);
      if (seen.insert(e).second) level.push_back({std::move(e), {a}});
    }
  }

  std::vector<Elems> out;
  Marker mk(g.size());
  while (!level.empty()) {
    std::set<Elems> seen;
    std::vector<Sub> next;
    for (const Sub& s : level) {
      mk.reset();
      for (std::uint32_t e : s.elems) mk.set(e);
      for (std::uint32_t x : rpow) {
        if (mk.test(x) || !mk.test(g.power(x, r))) continue;
        bool normal = true;
        for (std::uint32_t h : s.gens)
          if (!mk.test(g.conj(h, x))) {
            normal = false;
            break;
          }
        if (!normal) continue;
        Elems e = extend_by(g, s.elems, x, r);
        if (seen.insert(e).second) {
          Sub ns{std::move(e), s.gens};
          ns.gens.push_back(x);
          next.push_back(std::move(ns));
        }
      }
    }
    std::vector<Elems> sorted;
    for (Sub& s : level) sorted.push_back(std::move(s.elems));
    std::sort(sorted.begin(), sorted.end());
    for (Elems& e : sorted) out.push_back(std::move(e));
    if (out.size() > max_count) throw Error(ErrorKind::BudgetExceeded, "r-subgroup poset exceeds budget");
    level = std::move(next);
  }
  return out;
}

BigInt chi_chaincount(const IndexedGroup& g, int r, std::size_t max_poset) {
  const std::vector<Elems> subs = r_subgroups(g, r, max_poset);
  const std::size_t n = subs.size();

  // below[j]: every i with subs[i] a proper subgroup of subs[j].
  std::vector<std::vector<std::uint32_t>> below(n);
  Marker mk(g.size());
  for (std::size_t j = 0; j < n; ++j) {
    mk.reset();
    for (std::uint32_t e : subs[j]) mk.set(e);
    for (std::size_t i = 0; i < n && subs[i].size() < subs[j].size(); ++i) {
      if (subs[j].size() % subs[i].size() != 0) continue;
      if (std::all_of(subs[i].begin(), subs[i].end(), [&](std::uint32_t e) { return mk.test(e); }))
        below[j].push_back(static_cast<std::uint32_t>(i));
    }
  }

  // chains[j]: number of chains with k+1 members whose top is subs[j].
  std::vector<BigInt> chains(n, 1);
  BigInt chi = 0;
  for (int k = 0;; ++k) {
    BigInt f = 0;
    for (const BigInt& c : chains) f += c;
    if (f == 0) break;
    chi += k % 2 ? -f : f;
    std::vector<BigInt> next(n, 0);
    for (std::size_t j = 0; j < n; ++j)
      for (std::uint32_t i : below[j]) next[j] += chains[i];
    chains = std::move(next);
  }
  return chi;
}

BigInt gaussian_binomial(int n, int k, int r) {
  if (k < 0 || k > n) return 0;
  BigInt num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= ipow(BigInt(r), static_cast<unsigned>(n - i)) - 1;
    den *= ipow(BigInt(r), static_cast<unsigned>(i + 1)) - 1;
  }
  return num / den;
}

namespace {

// Subgroups of an elementary abelian group of at most 64 elements given by
// its multiplication table, as membership masks (identity included).
std::vector<std::uint64_t> all_subgroups(const std::vector<std::vector<int>>& mul, int id, int r) {
  const int n = static_cast<int>(mul.size());
  std::set<std::uint64_t> seen;
  std::vector<std::uint64_t> frontier = {std::uint64_t{1} << id};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t s : frontier) {
      for (int x = 0; x < n; ++x) {
        if (s >> x & 1) continue;
        std::uint64_t t = s;
        int xi = x;
        for (int i = 1; i < r; ++i, xi = mul[xi][x])
          for (int e = 0; e < n; ++e)
            if (s >> e & 1) t |= std::uint64_t{1} << mul[xi][e];
        if (seen.insert(t).second) next.push_back(t);
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

struct ElationFamily {
  std::vector<std::vector<int>> mul;
  std::vector<int> center, axis;  // per element, -1 for the identity
  int id = -1;
};

// The q^2 elations I + v w^T with w . v = 0; pinned is w (axis family) or
// v (center family).
ElationFamily elation_family(const Pgl3& ctx, const Vec3& pinned, bool pin_axis) {
  const FieldSpec& f = ctx.field();
  const Plane& pl = ctx.plane();
  const int q = ctx.q();
  ElationFamily fam;
  std::vector<Mat3> mats;
  std::map<ElemKey, int> index;
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c) {
        const Vec3 u = {static_cast<Fq>(a), static_cast<Fq>(b), static_cast<Fq>(c)};
        if (pl.dot(pinned, u) != 0) continue;
        const Vec3& v = pin_axis ? u : pinned;
        const Vec3& w = pin_axis ? pinned : u;
        Mat3 m{};
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) m[3 * i + j] = f.add(i == j ? 1 : 0, f.mul(v[i], w[j]));
        const Mat3 cm = ctx.canonical(m);
        if (index.emplace(Pgl3::key(cm), static_cast<int>(mats.size())).second) mats.push_back(cm);
      }
  const int n = static_cast<int>(mats.size());
  if (n != q * q) throw Error(ErrorKind::VerificationMismatch, "elation family has the wrong size");
  fam.mul.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto it = index.find(Pgl3::key(ctx.mul(mats[i], mats[j])));
      if (it == index.end()) throw Error(ErrorKind::VerificationMismatch, "elation family is not closed");
      fam.mul[i][j] = it->second;
    }
  for (int i = 0; i < n; ++i) {
    const ElementClass ec = ctx.classify(mats[i]);
    if (ec.tag == ElementTag::Identity) {
      fam.id = i;
      fam.center.push_back(-1);
      fam.axis.push_back(-1);
    } else {
      if (ec.tag != ElementTag::Elation) throw Error(ErrorKind::VerificationMismatch, "non-elation in family");
      fam.center.push_back(*ec.center);
      fam.axis.push_back(*ec.axis);
    }
  }
  return fam;
}

int log_r(std::uint64_t n, int r) {
  int k = 0;
  while (n > 1) {
    n /= r;
    ++k;
  }
  return k;
}

}  // namespace

ElationCensus elation_census(int q) {
  const auto pk = prime_power(q);
  if (!pk || q > 8) throw Error(ErrorKind::InvalidQ, "elation census needs a prime power q <= 8");
  Pgl3 ctx(q);
  const Plane& pl = ctx.plane();
  ElationCensus out;
  out.q = q;
  out.r = pk->first;
  out.d = pk->second;
  const int r = out.r, d = out.d;
  out.n_ac.assign(2 * d + 1, 0);
  out.n_a.assign(2 * d + 1, 0);
  out.n_c.assign(2 * d + 1, 0);
  std::vector<BigInt> n_ac_dual(2 * d + 1, 0);

  for (int pass = 0; pass < 2; ++pass) {
    const bool by_axis = pass == 0;
    for (int id = 0; id < pl.size(); ++id) {
      const ElationFamily fam = elation_family(ctx, pl.coords(id), by_axis);
      for (std::uint64_t mask : all_subgroups(fam.mul, fam.id, r)) {
        const int size = std::popcount(mask);
        if (size == 1) continue;
        std::set<int> centers, axes;
        for (int e = 0; e < static_cast<int>(fam.mul.size()); ++e)
          if ((mask >> e & 1) && e != fam.id) {
            centers.insert(fam.center[e]);
            axes.insert(fam.axis[e]);
          }
        const int rank = log_r(static_cast<std::uint64_t>(size), r);
        const bool both = centers.size() == 1 && axes.size() == 1;
        if (by_axis) (both ? out.n_ac : out.n_a)[rank] += 1;
        else (both ? n_ac_dual : out.n_c)[rank] += 1;
      }
    }
  }

  out.n_ac_formula.assign(2 * d + 1, 0);
  out.n_a_formula.assign(2 * d + 1, 0);
  const BigInt Q = q;
  const BigInt points = Q * Q + Q + 1;
  out.chi = 0;
  out.ok = n_ac_dual == out.n_ac && out.n_c == out.n_a;
  for (int i = 1; i <= 2 * d; ++i) {
    out.n_ac_formula[i] = points * (Q + 1) * gaussian_binomial(d, i, r);
    out.n_a_formula[i] = points * (gaussian_binomial(2 * d, i, r) - (Q + 1) * gaussian_binomial(d, i, r));
    out.ok = out.ok && out.n_ac[i] == out.n_ac_formula[i] && out.n_a[i] == out.n_a_formula[i];
    const BigInt w = ipow(BigInt(r), static_cast<unsigned>(i * (i - 1) / 2));
    const BigInt term = (out.n_ac[i] + out.n_a[i] + out.n_c[i]) * w;
    out.chi += i % 2 ? term : -term;
  }
  out.ok = out.ok && out.chi == -(Q * Q * Q - 1);
  return out;
}

}  // namespace mobius3
