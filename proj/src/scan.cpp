#include "mobius3/scan.hpp"

#include "mobius3/error.hpp"
#include "mobius3/keyset.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>

namespace mobius3 {

int resolve_threads(int hint) {
  if (hint > 0) return hint;
  if (const char* env = std::getenv("MOBIUS3_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1, omp_get_max_threads());
}

namespace {

std::vector<Vec3> nonzero_vectors(int q) {
  std::vector<Vec3> out;
  out.reserve(static_cast<std::size_t>(q) * q * q - 1);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c)
        if (a || b || c) out.push_back({static_cast<Fq>(a), static_cast<Fq>(b), static_cast<Fq>(c)});
  return out;
}

std::vector<Vec3> head_vectors(const Plane& pl) {
  std::vector<Vec3> out;
  for (int i = 0; i < pl.size(); ++i) out.push_back(pl.coords(i));
  return out;
}

// Table arithmetic with XOR addition in characteristic 2.
template <bool C2>
struct Arith {
  const Fq* mt;
  const Fq* at;
  const Fq* it;
  std::vector<Fq> negs;
  int q;

  explicit Arith(const FieldSpec& f) : mt(f.mul_table()), at(f.add_table()), it(f.inv_table()), q(f.q()) {
    negs.resize(q);
    for (int a = 0; a < q; ++a) negs[a] = f.neg(static_cast<Fq>(a));
  }

  Fq add(Fq a, Fq b) const noexcept {
    if constexpr (C2) return a ^ b;
    else return at[a * q + b];
  }
  Fq sub(Fq a, Fq b) const noexcept {
    if constexpr (C2) return a ^ b;
    else return at[a * q + negs[b]];
  }
  Fq mul(Fq a, Fq b) const noexcept { return mt[a * q + b]; }

  Fq dot(const Vec3& a, const Vec3& b) const noexcept {
    return add(add(mul(a[0], b[0]), mul(a[1], b[1])), mul(a[2], b[2]));
  }
  Vec3 cross(const Vec3& a, const Vec3& b) const noexcept {
    return {sub(mul(a[1], b[2]), mul(a[2], b[1])), sub(mul(a[2], b[0]), mul(a[0], b[2])),
            sub(mul(a[0], b[1]), mul(a[1], b[0]))};
  }
  Mat3 mm(const Mat3& a, const Mat3& b) const noexcept {
    Mat3 c;
    for (int i = 0; i < 3; ++i) {
      const Fq x = a[3 * i], y = a[3 * i + 1], z = a[3 * i + 2];
      for (int j = 0; j < 3; ++j) c[3 * i + j] = add(add(mul(x, b[j]), mul(y, b[3 + j])), mul(z, b[6 + j]));
    }
    return c;
  }
  // Key of the canonical form of adj * h * g.
  ElemKey conj_key(const Mat3& adj, const Mat3& h, const Mat3& g) const noexcept {
    const Mat3 x = mm(adj, mm(h, g));
    int i = 0;
    while (x[i] == 0) ++i;
    const Fq s = it[x[i]];
    ElemKey k = 0;
    for (int j = 0; j < 9; ++j) k = (k << 7) | mul(x[j], s);
    return k;
  }
};

// Streams every element g of the group with its adjugate, split over
// (row 0, row 1) pairs. body(thread, g, adj).
template <bool C2, class Body>
void stream(const Pgl3& ctx, GroupKind kind, int threads, const Arith<C2>& A, Body&& body) {
  const std::vector<Vec3> heads = head_vectors(ctx.plane());
  const std::vector<Vec3> all = nonzero_vectors(ctx.q());
  const bool restrict_det = kind == GroupKind::PSL && (ctx.q() - 1) % 3 == 0;
  std::vector<char> cube(ctx.q(), 1);
  for (int a = 1; a < ctx.q(); ++a) cube[a] = ctx.field().is_cube(static_cast<Fq>(a));
  const long long n_all = static_cast<long long>(all.size());
  const long long npairs = static_cast<long long>(heads.size()) * n_all;

#pragma omp parallel for schedule(dynamic, 8) num_threads(threads)
  for (long long idx = 0; idx < npairs; ++idx) {
    const int tid = omp_get_thread_num();
    const Vec3& r0 = heads[idx / n_all];
    const Vec3& r1 = all[idx % n_all];
    const Vec3 c01 = A.cross(r0, r1);
    if (c01[0] == 0 && c01[1] == 0 && c01[2] == 0) continue;
    Mat3 g{r0[0], r0[1], r0[2], r1[0], r1[1], r1[2], 0, 0, 0};
    Mat3 adj;
    adj[2] = c01[0];
    adj[5] = c01[1];
    adj[8] = c01[2];
    for (const Vec3& r2 : all) {
      const Fq d = A.dot(r2, c01);
      if (d == 0 || (restrict_det && !cube[d])) continue;
      g[6] = r2[0];
      g[7] = r2[1];
      g[8] = r2[2];
      const Vec3 c12 = A.cross(r1, r2);
      const Vec3 c20 = A.cross(r2, r0);
      adj[0] = c12[0];
      adj[3] = c12[1];
      adj[6] = c12[2];
      adj[1] = c20[0];
      adj[4] = c20[1];
      adj[7] = c20[2];
      body(tid, g, adj);
    }
  }
}

template <class Fn>
auto dispatch_char(const Pgl3& ctx, Fn&& fn) {
  if (ctx.field().p() == 2) return fn(Arith<true>(ctx.field()));
  return fn(Arith<false>(ctx.field()));
}

FlatKeySet key_set(const SubgroupRec& h) {
  FlatKeySet s(h.order());
  for (ElemKey k : h.elements) s.insert(k);
  return s;
}

// Serial reference: membership of every conjugated generator, by Pgl3 calls.
bool conjugates_into(const Pgl3& ctx, const SubgroupRec& h, const SubgroupRec& target, const Mat3& g) {
  for (const Mat3& x : h.generators)
    if (!target.contains(Pgl3::key(ctx.conjugate(x, g)))) return false;
  return true;
}

}  // namespace

void for_each_element(const Pgl3& ctx, GroupKind kind, const std::function<void(const Mat3&)>& f) {
  const Plane& pl = ctx.plane();
  const std::vector<Vec3> all = nonzero_vectors(ctx.q());
  for (int i = 0; i < pl.size(); ++i) {
    const Vec3& r0 = pl.coords(i);
    for (const Vec3& r1 : all)
      for (const Vec3& r2 : all) {
        const Mat3 g{r0[0], r0[1], r0[2], r1[0], r1[1], r1[2], r2[0], r2[1], r2[2]};
        if (ctx.det(g) == 0) continue;
        if (kind == GroupKind::PSL && !ctx.in_psl(g)) continue;
        f(g);
      }
  }
}

std::uint64_t count_elements(const Pgl3& ctx, GroupKind kind, const ScanOptions& opt) {
  if (opt.mode == ScanMode::Serial) {
    std::uint64_t n = 0;
    for_each_element(ctx, kind, [&](const Mat3&) { ++n; });
    return n;
  }
  const int threads = resolve_threads(opt.threads);
  std::vector<std::uint64_t> per(threads * 8, 0);
  dispatch_char(ctx, [&](const auto& A) {
    stream(ctx, kind, threads, A, [&](int tid, const Mat3&, const Mat3&) { ++per[tid * 8]; });
    return 0;
  });
  std::uint64_t n = 0;
  for (int t = 0; t < threads; ++t) n += per[t * 8];
  return n;
}

std::uint64_t normalizer_order(const Pgl3& ctx, GroupKind kind, const SubgroupRec& h, const ScanOptions& opt) {
  if (opt.mode == ScanMode::Serial) {
    std::uint64_t n = 0;
    for_each_element(ctx, kind, [&](const Mat3& g) {
      if (conjugates_into(ctx, h, h, g)) ++n;
    });
    return n;
  }
  const int threads = resolve_threads(opt.threads);
  const FlatKeySet members = key_set(h);
  std::vector<std::uint64_t> per(threads * 8, 0);
  dispatch_char(ctx, [&](const auto& A) {
    stream(ctx, kind, threads, A, [&](int tid, const Mat3& g, const Mat3& adj) {
      for (const Mat3& x : h.generators)
        if (!members.contains(A.conj_key(adj, x, g))) return;
      ++per[tid * 8];
    });
    return 0;
  });
  std::uint64_t n = 0;
  for (int t = 0; t < threads; ++t) n += per[t * 8];
  return n;
}

SubgroupRec normalizer_full(const Pgl3& ctx, GroupKind kind, const SubgroupRec& h, std::size_t cap,
                            const ScanOptions& opt) {
  std::vector<ElemKey> keys;
  if (opt.mode == ScanMode::Serial) {
    for_each_element(ctx, kind, [&](const Mat3& g) {
      if (!conjugates_into(ctx, h, h, g)) return;
      if (keys.size() >= cap) throw Error(ErrorKind::TooLarge, "normalizer exceeds cap " + std::to_string(cap));
      keys.push_back(Pgl3::key(ctx.canonical(g)));
    });
  } else {
    const int threads = resolve_threads(opt.threads);
    const FlatKeySet members = key_set(h);
    std::vector<std::vector<ElemKey>> per(threads);
    std::atomic<bool> overflow{false};
    dispatch_char(ctx, [&](const auto& A) {
      stream(ctx, kind, threads, A, [&](int tid, const Mat3& g, const Mat3& adj) {
        for (const Mat3& x : h.generators)
          if (!members.contains(A.conj_key(adj, x, g))) return;
        if (per[tid].size() < cap) per[tid].push_back(Pgl3::key(g));
        else overflow = true;
      });
      return 0;
    });
    for (auto& v : per) keys.insert(keys.end(), v.begin(), v.end());
    if (overflow || keys.size() > cap)
      throw Error(ErrorKind::TooLarge, "normalizer exceeds cap " + std::to_string(cap));
  }
  std::sort(keys.begin(), keys.end());
  Closure c(ctx, keys.size());
  for (ElemKey k : keys)
    if (!c.contains(k)) c.add_generator(Pgl3::unkey(k));
  SubgroupRec rec = c.finish();
  if (rec.elements != keys) throw Error(ErrorKind::VerificationMismatch, "normalizer scan is not a subgroup");
  return rec;
}

std::vector<std::uint64_t> transporter_counts(const Pgl3& ctx, GroupKind kind, const SubgroupRec& h,
                                              const std::vector<const SubgroupRec*>& ks, const ScanOptions& opt) {
  const std::size_t nk = ks.size();
  if (nk > 64) throw Error(ErrorKind::InvalidInput, "at most 64 transporter targets");
  std::vector<std::uint64_t> counts(nk, 0);
  if (nk == 0) return counts;
  if (opt.mode == ScanMode::Serial) {
    for_each_element(ctx, kind, [&](const Mat3& g) {
      for (std::size_t j = 0; j < nk; ++j)
        if (conjugates_into(ctx, h, *ks[j], g)) ++counts[j];
    });
    return counts;
  }

  const std::uint64_t all_bits = nk == 64 ? ~0ull : ((1ull << nk) - 1);
  std::size_t total = 0;
  for (const SubgroupRec* k : ks) total += k->order();
  FlatKeyMap<std::uint64_t> masks(total);
  for (std::size_t j = 0; j < nk; ++j)
    for (ElemKey e : ks[j]->elements) masks[e] |= 1ull << j;

  const int threads = resolve_threads(opt.threads);
  const std::size_t stride = ((nk + 7) / 8) * 8;
  std::vector<std::uint64_t> per(threads * stride, 0);
  dispatch_char(ctx, [&](const auto& A) {
    stream(ctx, kind, threads, A, [&](int tid, const Mat3& g, const Mat3& adj) {
      std::uint64_t m = all_bits;
      for (const Mat3& x : h.generators) {
        m &= masks.get(A.conj_key(adj, x, g));
        if (m == 0) return;
      }
      std::uint64_t* out = &per[tid * stride];
      while (m) {
        out[__builtin_ctzll(m)]++;
        m &= m - 1;
      }
    });
    return 0;
  });
  for (int t = 0; t < threads; ++t)
    for (std::size_t j = 0; j < nk; ++j) counts[j] += per[t * stride + j];
  return counts;
}

std::uint64_t count_conjugates_containing(const Pgl3& ctx, GroupKind kind, const SubgroupRec& h, const SubgroupRec& k,
                                          std::uint64_t n_k, const ScanOptions& opt) {
  if (n_k == 0) throw Error(ErrorKind::InvalidInput, "normalizer order must be positive");
  const std::uint64_t t = transporter_counts(ctx, kind, h, {&k}, opt)[0];
  if (t % n_k != 0)
    throw Error(ErrorKind::NonIntegralCount,
                "transporter count " + std::to_string(t) + " not divisible by " + std::to_string(n_k));
  return t / n_k;
}

}  // namespace mobius3
