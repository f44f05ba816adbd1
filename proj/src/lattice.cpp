#include "mobius3/lattice.hpp"

#include "mobius3/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

namespace mobius3 {

namespace {

constexpr std::uint32_t kNone = 0xFFFFFFFFu;

std::uint64_t hash_elems(const std::uint32_t* p, std::size_t n) {
  std::uint64_t h = 0xcbf29ce484222325ull ^ n;
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  return h ^ (h >> 32);
}

// Every subgroup found so far, flattened, with a hash index.
class Store {
 public:
  std::size_t count() const { return offset_.size() - 1; }
  std::span<const std::uint32_t> get(std::size_t i) const {
    return {data_.data() + offset_[i], offset_[i + 1] - offset_[i]};
  }
  std::uint32_t class_of(std::size_t i) const { return cls_[i]; }

  std::optional<std::uint32_t> find(const std::vector<std::uint32_t>& s) const {
    auto it = index_.find(hash_elems(s.data(), s.size()));
    if (it == index_.end()) return std::nullopt;
    for (std::uint32_t id : it->second) {
      auto t = get(id);
      if (t.size() == s.size() && std::equal(t.begin(), t.end(), s.begin())) return id;
    }
    return std::nullopt;
  }

  std::uint32_t add(const std::vector<std::uint32_t>& s, std::uint32_t cls) {
    const auto id = static_cast<std::uint32_t>(count());
    data_.insert(data_.end(), s.begin(), s.end());
    offset_.push_back(data_.size());
    cls_.push_back(cls);
    index_[hash_elems(s.data(), s.size())].push_back(id);
    return id;
  }

  std::vector<std::uint32_t> data_;
  std::vector<std::size_t> offset_{0};
  std::vector<std::uint32_t> cls_;

 private:
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> index_;
};

struct WorkClass {
  std::vector<std::uint32_t> rep;
  std::vector<std::uint32_t> gens;
  std::vector<std::uint32_t> members;
};

bool is_prime_power(std::uint32_t n) {
  if (n < 2) return false;
  std::uint32_t p = 2;
  while (n % p) ++p;
  while (n % p == 0) n /= p;
  return n == 1;
}

std::vector<std::uint32_t> conjugate_set(const IndexedGroup& g, std::span<const std::uint32_t> s, std::uint32_t x) {
  std::vector<std::uint32_t> out;
  out.reserve(s.size());
  for (std::uint32_t e : s) out.push_back(g.conj(e, x));
  std::sort(out.begin(), out.end());
  return out;
}

std::uint32_t uf_find(std::vector<std::uint32_t>& parent, std::uint32_t a) {
  while (parent[a] != a) {
    parent[a] = parent[parent[a]];
    a = parent[a];
  }
  return a;
}

void uf_union(std::vector<std::uint32_t>& parent, std::uint32_t a, std::uint32_t b) {
  a = uf_find(parent, a);
  b = uf_find(parent, b);
  if (a < b) parent[b] = a;
  else if (b < a) parent[a] = b;
}

}  // namespace

LatticeModel enumerate(const IndexedGroup& g, const LatticeBudget& budget) {
  const std::uint32_t n = g.size();
  if (n > budget.max_group_order)
    throw Error(ErrorKind::BudgetExceeded,
                "group order " + std::to_string(n) + " exceeds " + std::to_string(budget.max_group_order));
  Marker mk(n), mk2(n);

  // Cyclic subgroups of prime-power order, each named by its least generator.
  std::vector<std::uint32_t> cyc_of(n, kNone), cyc_gen;
  for (std::uint32_t x = 0; x < n; ++x) {
    const std::uint32_t o = g.order_of(x);
    if (!is_prime_power(o) || cyc_of[x] != kNone) continue;
    const auto id = static_cast<std::uint32_t>(cyc_gen.size());
    cyc_gen.push_back(x);
    std::uint32_t y = x;
    for (std::uint32_t k = 1; k < o; ++k) {
      if (std::gcd(k, o) == 1) cyc_of[y] = id;
      y = g.mul(y, x);
    }
  }

  Store store;
  std::vector<WorkClass> work;
  auto new_class = [&](std::vector<std::uint32_t> elems, std::vector<std::uint32_t> gens) {
    const auto c = static_cast<std::uint32_t>(work.size());
    WorkClass w{std::move(elems), std::move(gens), {}};
    w.members.push_back(store.add(w.rep, c));
    for (std::size_t i = 0; i < w.members.size(); ++i) {
      const auto s = store.get(w.members[i]);
      const std::vector<std::uint32_t> copy(s.begin(), s.end());
      for (std::uint32_t x : g.generators()) {
        auto t = conjugate_set(g, copy, x);
        if (store.find(t)) continue;
        w.members.push_back(store.add(t, c));
      }
      if (store.count() > budget.max_subgroups)
        throw Error(ErrorKind::BudgetExceeded, "more than " + std::to_string(budget.max_subgroups) + " subgroups");
    }
    if (n % w.members.size() != 0) throw Error(ErrorKind::VerificationMismatch, "class size does not divide |G|");
    work.push_back(std::move(w));
  };

  new_class({g.identity()}, {});
  std::vector<std::uint32_t> parent(cyc_gen.size());
  for (std::size_t ci = 0; ci < work.size(); ++ci) {
    const std::vector<std::uint32_t> h = work[ci].rep;
    const std::vector<std::uint32_t> hg = work[ci].gens;
    if (h.size() == n) continue;

    mk.reset();
    for (std::uint32_t x : h) mk.set(x);
    std::vector<std::uint32_t> norm;
    for (std::uint32_t x = 0; x < n; ++x) {
      bool ok = true;
      for (std::uint32_t y : hg)
        if (!mk.test(g.conj(y, x))) {
          ok = false;
          break;
        }
      if (ok) norm.push_back(x);
    }
    if (norm.size() * work[ci].members.size() != n)
      throw Error(ErrorKind::VerificationMismatch, "normalizer order disagrees with class size");
    const auto ngens = greedy_generators(g, norm, mk2);

    std::iota(parent.begin(), parent.end(), 0u);
    for (std::uint32_t x : ngens)
      for (std::uint32_t c = 0; c < cyc_gen.size(); ++c) uf_union(parent, c, cyc_of[g.conj(cyc_gen[c], x)]);

    for (std::uint32_t c = 0; c < cyc_gen.size(); ++c) {
      if (uf_find(parent, c) != c || mk.test(cyc_gen[c])) continue;
      auto k = extend_subgroup(g, h, hg, cyc_gen[c], mk2);
      std::sort(k.begin(), k.end());
      if (store.find(k)) continue;
      auto gens = hg;
      gens.push_back(cyc_gen[c]);
      new_class(std::move(k), std::move(gens));
    }
  }

  // Deterministic order: by order, then least conjugate.
  std::vector<std::uint32_t> least(work.size());
  for (std::size_t c = 0; c < work.size(); ++c) {
    std::uint32_t best = work[c].members[0];
    for (std::uint32_t id : work[c].members) {
      auto a = store.get(id), b = store.get(best);
      if (std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end())) best = id;
    }
    least[c] = best;
  }
  std::vector<std::uint32_t> perm(work.size());
  std::iota(perm.begin(), perm.end(), 0u);
  std::sort(perm.begin(), perm.end(), [&](std::uint32_t a, std::uint32_t b) {
    auto sa = store.get(least[a]), sb = store.get(least[b]);
    if (sa.size() != sb.size()) return sa.size() < sb.size();
    return std::lexicographical_compare(sa.begin(), sa.end(), sb.begin(), sb.end());
  });
  std::vector<std::uint32_t> new_id(work.size());
  for (std::uint32_t i = 0; i < perm.size(); ++i) new_id[perm[i]] = i;

  LatticeModel l;
  l.group = &g;
  l.total_subgroups = store.count();
  l.sub_data = std::move(store.data_);
  l.sub_offset = std::move(store.offset_);
  l.sub_class.resize(store.cls_.size());
  for (std::size_t i = 0; i < store.cls_.size(); ++i) l.sub_class[i] = new_id[store.cls_[i]];

  l.classes.resize(work.size());
  for (std::uint32_t i = 0; i < perm.size(); ++i) {
    const WorkClass& w = work[perm[i]];
    ConjClass& c = l.classes[i];
    c.rep_id = least[perm[i]];
    auto s = l.subgroup(c.rep_id);
    c.rep.assign(s.begin(), s.end());
    c.rep_gens = greedy_generators(g, c.rep, mk);
    c.order = c.rep.size();
    c.size = w.members.size();
    c.normalizer_order = n / c.size;
    c.fingerprint = fingerprint(g, c.rep, c.rep_gens);
  }

  const std::size_t nc = l.classes.size();
  l.containment.assign(nc, std::vector<std::uint64_t>(nc, 0));
  for (std::size_t i = 0; i < l.total_subgroups; ++i) {
    const std::uint32_t k = l.sub_class[i];
    const std::uint64_t ok = l.classes[k].order;
    mk.reset();
    for (std::uint32_t x : l.subgroup(i)) mk.set(x);
    for (std::size_t h = 0; h < nc; ++h) {
      const std::uint64_t oh = l.classes[h].order;
      if (oh >= ok || ok % oh != 0) continue;
      const auto& gens = l.classes[h].rep_gens;
      if (std::all_of(gens.begin(), gens.end(), [&](std::uint32_t x) { return mk.test(x); })) ++l.containment[h][k];
    }
  }
  return l;
}

void moebius(LatticeModel& l) {
  const std::size_t nc = l.classes.size();
  for (std::size_t i = nc; i-- > 0;) {
    if (i == l.top()) {
      l.classes[i].mu = 1;
      continue;
    }
    BigInt s = 0;
    for (std::size_t k = i + 1; k < nc; ++k)
      if (l.classes[k].order > l.classes[i].order) s += l.containment[i][k] * l.classes[k].mu;
    l.classes[i].mu = -s;
  }
}

std::vector<BigInt> recursion_residuals(const LatticeModel& l) {
  const std::size_t nc = l.classes.size();
  std::vector<BigInt> out(nc, 0);
  for (std::size_t i = 0; i < nc; ++i) {
    if (i == l.top()) {
      out[i] = l.classes[i].mu - 1;
      continue;
    }
    BigInt s = l.classes[i].mu;
    for (std::size_t k = 0; k < nc; ++k)
      if (l.classes[k].order > l.classes[i].order) s += l.containment[i][k] * l.classes[k].mu;
    out[i] = s;
  }
  return out;
}

std::vector<BigInt> chain_mu(const LatticeModel& l) {
  const IndexedGroup& g = *l.group;
  if (g.size() > 1000) throw Error(ErrorKind::BudgetExceeded, "chain counting needs |G| <= 1000");
  const std::size_t ns = l.total_subgroups;
  std::vector<std::size_t> by_size(ns);
  std::iota(by_size.begin(), by_size.end(), std::size_t{0});
  std::stable_sort(by_size.begin(), by_size.end(),
                   [&](std::size_t a, std::size_t b) { return l.subgroup(a).size() < l.subgroup(b).size(); });

  // up[a]: subgroups strictly containing a.
  std::vector<std::vector<std::size_t>> up(ns);
  Marker mk(g.size());
  for (std::size_t b = 0; b < ns; ++b) {
    auto sb = l.subgroup(b);
    mk.reset();
    for (std::uint32_t x : sb) mk.set(x);
    for (std::size_t a = 0; a < ns; ++a) {
      auto sa = l.subgroup(a);
      if (sa.size() >= sb.size() || sb.size() % sa.size() != 0) continue;
      if (std::all_of(sa.begin(), sa.end(), [&](std::uint32_t x) { return mk.test(x); })) up[a].push_back(b);
    }
  }

  // chains[a][k]: chains a = H0 < ... < Hk = G.
  std::vector<std::vector<BigInt>> chains(ns);
  for (auto it = by_size.rbegin(); it != by_size.rend(); ++it) {
    const std::size_t a = *it;
    if (l.subgroup(a).size() == g.size()) {
      chains[a] = {1};
      continue;
    }
    for (std::size_t b : up[a]) {
      const auto& cb = chains[b];
      if (chains[a].size() < cb.size() + 1) chains[a].resize(cb.size() + 1, 0);
      for (std::size_t k = 0; k < cb.size(); ++k) chains[a][k + 1] += cb[k];
    }
  }

  std::vector<BigInt> out;
  for (const ConjClass& c : l.classes) {
    BigInt mu = 0;
    const auto& ch = chains[c.rep_id];
    for (std::size_t k = 0; k < ch.size(); ++k) mu += (k % 2 == 0) ? ch[k] : BigInt(-ch[k]);
    out.push_back(mu);
  }
  return out;
}

std::vector<std::size_t> maximal_classes(const LatticeModel& l) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < l.top(); ++k) {
    bool maximal = true;
    for (std::size_t j = 0; j < l.top(); ++j)
      if (l.classes[j].order > l.classes[k].order && l.containment[k][j] != 0) maximal = false;
    if (maximal) out.push_back(k);
  }
  return out;
}

std::vector<std::size_t> intersection_of_maximals_failures(const LatticeModel& l) {
  const IndexedGroup& g = *l.group;
  const auto maxes = maximal_classes(l);
  std::vector<char> is_max(l.classes.size(), 0);
  for (std::size_t k : maxes) is_max[k] = 1;
  std::vector<std::size_t> fails;
  Marker mk(g.size());
  std::vector<std::uint32_t> cnt(g.size());
  for (std::size_t h = 0; h < l.top(); ++h) {
    if (l.classes[h].mu == 0) continue;
    std::fill(cnt.begin(), cnt.end(), 0);
    std::uint32_t m = 0;
    const auto& gens = l.classes[h].rep_gens;
    for (std::size_t i = 0; i < l.total_subgroups; ++i) {
      if (!is_max[l.sub_class[i]]) continue;
      auto s = l.subgroup(i);
      mk.reset();
      for (std::uint32_t x : s) mk.set(x);
      if (!std::all_of(gens.begin(), gens.end(), [&](std::uint32_t x) { return mk.test(x); })) continue;
      ++m;
      for (std::uint32_t x : s) ++cnt[x];
    }
    std::vector<std::uint32_t> meet;
    for (std::uint32_t x = 0; x < g.size(); ++x)
      if (m > 0 && cnt[x] == m) meet.push_back(x);
    if (meet != l.classes[h].rep) fails.push_back(h);
  }
  return fails;
}

BigInt eulerian_phi(const LatticeModel& l, unsigned n) {
  BigInt s = 0;
  for (const ConjClass& c : l.classes) s += BigInt(c.size) * c.mu * ipow(BigInt(c.order), n);
  return s;
}

Rational gen_probability(const LatticeModel& l, unsigned n) {
  return Rational(eulerian_phi(l, n), ipow(BigInt(l.group->size()), n));
}

std::map<std::uint64_t, BigInt> a_coeffs(const LatticeModel& l) {
  std::map<std::uint64_t, BigInt> out;
  const std::uint64_t n = l.group->size();
  for (const ConjClass& c : l.classes) {
    if (c.mu == 0) continue;
    out[n / c.order] += BigInt(c.size) * c.mu;
  }
  return out;
}

Rational d_k(const LatticeModel& l, unsigned k, const BigInt& aut_order) {
  if (aut_order <= 0) throw Error(ErrorKind::InvalidInput, "automorphism group order must be positive");
  BigInt s = 0;
  for (const ConjClass& c : l.classes) s += BigInt(c.size) * c.mu * ipow(BigInt(c.order), k);
  return Rational(s, aut_order);
}

Fingerprint fingerprint(const IndexedGroup& g, const std::vector<std::uint32_t>& elems,
                        const std::vector<std::uint32_t>& gens) {
  Fingerprint f;
  f.order = elems.size();
  f.exponent = 1;
  for (std::uint32_t x : elems) {
    const std::uint32_t o = g.order_of(x);
    ++f.order_histogram[o];
    f.exponent = std::lcm(f.exponent, static_cast<std::uint64_t>(o));
  }
  auto commute = [&](std::uint32_t a, std::uint32_t b) { return g.mul(a, b) == g.mul(b, a); };
  f.abelian = true;
  for (std::size_t i = 0; i < gens.size() && f.abelian; ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!commute(gens[i], gens[j])) {
        f.abelian = false;
        break;
      }
  for (std::uint32_t x : elems)
    if (std::all_of(gens.begin(), gens.end(), [&](std::uint32_t y) { return commute(x, y); })) ++f.center_order;

  if (f.abelian) {
    // With invariants p^e_i, the elements of order dividing p^k number
    // p^L_k with L_k = sum_i min(e_i, k).
    std::uint64_t m = f.order;
    for (std::uint64_t p = 2; m > 1; ++p) {
      if (m % p) continue;
      int a = 0;
      while (m % p == 0) {
        m /= p;
        ++a;
      }
      std::vector<int> L{0};
      std::uint64_t pk = 1;
      while (L.back() < a) {
        pk *= p;
        std::uint64_t cnt = 0;
        for (const auto& [o, c] : f.order_histogram)
          if (pk % o == 0) cnt += c;
        int lg = 0;
        for (; cnt > 1; cnt /= p) ++lg;
        L.push_back(lg);
      }
      L.push_back(L.back());
      std::uint64_t pw = 1;
      for (std::size_t k = 1; k + 1 < L.size(); ++k) {
        pw *= p;
        const int exactly = (L[k] - L[k - 1]) - (L[k + 1] - L[k]);
        for (int r = 0; r < exactly; ++r) f.abelian_invariants.push_back(pw);
      }
    }
    std::sort(f.abelian_invariants.begin(), f.abelian_invariants.end());
  }

  // Derived series via normal closures of generator commutators.
  Marker mk(g.size());
  std::vector<std::uint32_t> cur = elems, cur_gens = gens;
  int length = 0;
  while (cur.size() > 1) {
    std::vector<std::uint32_t> d{g.identity()}, dg;
    auto add = [&](std::uint32_t x) {
      mk.reset();
      for (std::uint32_t y : d) mk.set(y);
      if (mk.test(x)) return false;
      d = extend_subgroup(g, d, dg, x, mk);
      dg.push_back(x);
      return true;
    };
    for (std::size_t i = 0; i < cur_gens.size(); ++i)
      for (std::size_t j = i + 1; j < cur_gens.size(); ++j) {
        const std::uint32_t a = cur_gens[i], b = cur_gens[j];
        add(g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
      }
    for (bool grew = true; grew;) {
      grew = false;
      for (std::size_t i = 0; i < dg.size(); ++i)
        for (std::uint32_t y : cur_gens)
          if (add(g.conj(dg[i], y))) grew = true;
    }
    if (d.size() == cur.size()) {
      length = -1;
      break;
    }
    std::sort(d.begin(), d.end());
    cur = std::move(d);
    cur_gens = std::move(dg);
    ++length;
  }
  f.derived_length = length;
  return f;
}

OwnedLattice build_lattice(int q, GroupKind kind, const LatticeBudget& budget) {
  OwnedLattice out;
  out.ctx = std::make_unique<Pgl3>(q);
  if (out.ctx->group_order(kind) > budget.max_group_order)
    throw Error(ErrorKind::BudgetExceeded, "group order exceeds the lattice budget");
  out.group = closure(*out.ctx, out.ctx->full_generators(kind), budget.max_group_order);
  out.indexed = std::make_unique<IndexedGroup>(*out.ctx, out.group);
  out.model = enumerate(*out.indexed, budget);
  moebius(out.model);
  return out;
}

}  // namespace mobius3
