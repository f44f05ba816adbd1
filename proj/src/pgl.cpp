#include "mobius3/pgl.hpp"

#include "mobius3/error.hpp"

#include <algorithm>
#include <unordered_map>

namespace mobius3 {

GroupKind parse_group_kind(const std::string& s) {
  if (s == "pgl3") return GroupKind::PGL;
  if (s == "psl3") return GroupKind::PSL;
  throw Error(ErrorKind::InvalidKind, "group must be pgl3 or psl3, got '" + s + "'");
}

std::string to_string(GroupKind kind) { return kind == GroupKind::PGL ? "pgl3" : "psl3"; }

std::string to_string(ElementTag tag) {
  switch (tag) {
    case ElementTag::Identity: return "Identity";
    case ElementTag::Elation: return "Elation";
    case ElementTag::OrderFourUnipotent: return "OrderFourUnipotent";
    case ElementTag::Homology: return "Homology";
    case ElementTag::MixedOrder: return "MixedOrder";
    case ElementTag::TriangleDiagonal: return "TriangleDiagonal";
    case ElementTag::QuadraticSemisimple: return "QuadraticSemisimple";
    case ElementTag::SingerType: return "SingerType";
  }
  return "Unknown";
}

bool SubgroupRec::contains(ElemKey k) const { return std::binary_search(elements.begin(), elements.end(), k); }

Pgl3::Pgl3(int q) : field_(std::make_unique<FieldSpec>(make_field_q(q))) {
  plane_ = std::make_unique<Plane>(*field_);
}

BigInt Pgl3::pgl_order() const {
  const BigInt q = this->q();
  return q * q * q * (q * q * q - 1) * (q * q - 1);
}

BigInt Pgl3::psl_order() const {
  const int g = (q() - 1) % 3 == 0 ? 3 : 1;
  return pgl_order() / g;
}

Mat3 Pgl3::mul_raw(const Mat3& a, const Mat3& b) const noexcept {
  const FieldSpec& f = *field_;
  Mat3 c;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      c[3 * i + j] =
          f.add(f.add(f.mul(a[3 * i], b[j]), f.mul(a[3 * i + 1], b[3 + j])), f.mul(a[3 * i + 2], b[6 + j]));
  return c;
}

Mat3 Pgl3::adjugate(const Mat3& a) const noexcept {
  const FieldSpec& f = *field_;
  auto cof = [&](int r0, int r1, int c0, int c1) {
    return f.sub(f.mul(a[3 * r0 + c0], a[3 * r1 + c1]), f.mul(a[3 * r0 + c1], a[3 * r1 + c0]));
  };
  // adj[i][j] = cofactor of entry (j, i)
  return {cof(1, 2, 1, 2), cof(2, 0, 1, 2), cof(0, 1, 1, 2),
          cof(1, 2, 2, 0), cof(2, 0, 2, 0), cof(0, 1, 2, 0),
          cof(1, 2, 0, 1), cof(2, 0, 0, 1), cof(0, 1, 0, 1)};
}

Mat3 Pgl3::conjugate(const Mat3& h, const Mat3& g) const noexcept {
  return canonical(mul_raw(adjugate(g), mul_raw(h, g)));
}

Fq Pgl3::det(const Mat3& a) const noexcept {
  const FieldSpec& f = *field_;
  const Fq c0 = f.sub(f.mul(a[4], a[8]), f.mul(a[5], a[7]));
  const Fq c1 = f.sub(f.mul(a[5], a[6]), f.mul(a[3], a[8]));
  const Fq c2 = f.sub(f.mul(a[3], a[7]), f.mul(a[4], a[6]));
  return f.add(f.add(f.mul(a[0], c0), f.mul(a[1], c1)), f.mul(a[2], c2));
}

Mat3 Pgl3::canonical(Mat3 a) const noexcept {
  int i = 0;
  while (i < 9 && a[i] == 0) ++i;
  if (i == 9 || a[i] == 1) return a;
  const Fq s = field_->inv_table()[a[i]];
  for (int j = i; j < 9; ++j) a[j] = field_->mul(a[j], s);
  return a;
}

Mat3 Pgl3::power(const Mat3& a, long long e) const {
  Mat3 base = e < 0 ? inverse(a) : canonical(a);
  if (e < 0) e = -e;
  Mat3 result = identity();
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

ElemKey Pgl3::key(const Mat3& m) noexcept {
  ElemKey k = 0;
  for (int i = 0; i < 9; ++i) k = (k << 7) | m[i];
  return k;
}

Mat3 Pgl3::unkey(ElemKey k) noexcept {
  Mat3 m;
  for (int i = 8; i >= 0; --i) {
    m[i] = static_cast<Fq>(k & 0x7f);
    k >>= 7;
  }
  return m;
}

GElem Pgl3::elem(const Mat3& m) const {
  if (det(m) == 0) throw Error(ErrorKind::Singular, "matrix is singular");
  const Mat3 c = canonical(m);
  return {c, key(c), perm(c)};
}

Mat3 Pgl3::from_entries(const std::vector<int>& entries) const {
  if (entries.size() != 9) throw Error(ErrorKind::InvalidInput, "expected 9 matrix entries");
  Mat3 m;
  for (int i = 0; i < 9; ++i) {
    if (entries[i] < 0 || entries[i] >= q())
      throw Error(ErrorKind::InvalidInput, "entry " + std::to_string(entries[i]) + " is not a field index");
    m[i] = static_cast<Fq>(entries[i]);
  }
  if (det(m) == 0) throw Error(ErrorKind::Singular, "matrix is singular");
  return canonical(m);
}

int Pgl3::apply_point(const Mat3& m, int point) const {
  const Vec3& x = plane_->coords(point);
  const FieldSpec& f = *field_;
  Vec3 y;
  for (int i = 0; i < 3; ++i)
    y[i] = f.add(f.add(f.mul(m[3 * i], x[0]), f.mul(m[3 * i + 1], x[1])), f.mul(m[3 * i + 2], x[2]));
  return plane_->id_of(y);
}

int Pgl3::apply_line(const Mat3& m, int line) const {
  const Vec3& l = plane_->coords(line);
  const Mat3 a = adjugate(m);
  const FieldSpec& f = *field_;
  Vec3 y;
  for (int j = 0; j < 3; ++j) y[j] = f.add(f.add(f.mul(l[0], a[j]), f.mul(l[1], a[3 + j])), f.mul(l[2], a[6 + j]));
  return plane_->id_of(y);
}

std::vector<std::uint16_t> Pgl3::perm(const Mat3& m) const {
  std::vector<std::uint16_t> out(plane_->size());
  for (int x = 0; x < plane_->size(); ++x) out[x] = static_cast<std::uint16_t>(apply_point(m, x));
  return out;
}

int Pgl3::order(const Mat3& m) const {
  const Mat3 id = identity();
  const Mat3 c = canonical(m);
  Mat3 x = c;
  int o = 1;
  while (x != id) {
    x = mul(x, c);
    ++o;
  }
  return o;
}

ElementClass Pgl3::classify(const Mat3& m) const {
  const Plane& pl = *plane_;
  ElementClass out{ElementTag::Identity, order(m), 0, 0, std::nullopt, std::nullopt};
  std::vector<int> fixed_lines;
  std::vector<char> point_fixed(pl.size(), 0);
  for (int x = 0; x < pl.size(); ++x)
    if (apply_point(m, x) == x) {
      point_fixed[x] = 1;
      ++out.fixed_points;
    }
  for (int l = 0; l < pl.size(); ++l)
    if (apply_line(m, l) == l) fixed_lines.push_back(l);
  out.fixed_lines = static_cast<int>(fixed_lines.size());
  if (out.order == 1) return out;

  int o = out.order;
  const int p = field_->p();
  while (o % p == 0) o /= p;
  const bool unipotent = (o == 1);
  const int F = out.fixed_points;
  if (unipotent) {
    out.tag = F == q() + 1 ? ElementTag::Elation : ElementTag::OrderFourUnipotent;
  } else if (F == q() + 2) {
    out.tag = ElementTag::Homology;
  } else if (F == 3) {
    out.tag = ElementTag::TriangleDiagonal;
  } else if (F == 2) {
    out.tag = ElementTag::MixedOrder;
  } else if (F == 1) {
    out.tag = ElementTag::QuadraticSemisimple;
  } else {
    out.tag = ElementTag::SingerType;
  }

  if (out.tag == ElementTag::Elation || out.tag == ElementTag::Homology) {
    for (int l : fixed_lines) {
      const auto& pts = pl.points_on(l);
      if (std::all_of(pts.begin(), pts.end(), [&](int x) { return point_fixed[x] != 0; })) {
        out.axis = l;
        break;
      }
    }
    if (out.tag == ElementTag::Elation) {
      out.center = pl.meet(fixed_lines[0], fixed_lines[1]);
    } else {
      for (int x = 0; x < pl.size(); ++x)
        if (point_fixed[x] && !pl.incident(x, *out.axis)) out.center = x;
    }
  }
  return out;
}

Mat3 elementary(int i, int j, Fq t) {
  Mat3 m{1, 0, 0, 0, 1, 0, 0, 0, 1};
  m[3 * i + j] = t;
  return m;
}

Mat3 diagonal(Fq a, Fq b, Fq c) { return {a, 0, 0, 0, b, 0, 0, 0, c}; }

Mat3 permutation_matrix(const std::array<int, 3>& img) {
  Mat3 m{};
  for (int j = 0; j < 3; ++j) m[3 * img[j] + j] = 1;
  return m;
}

namespace {

// Additive generators of GF(q) over GF(p): the indices p^i.
std::vector<Fq> additive_basis(const FieldSpec& f) {
  std::vector<Fq> out;
  int t = 1;
  for (int i = 0; i < f.k(); ++i) {
    out.push_back(static_cast<Fq>(t));
    t *= f.p();
  }
  return out;
}

void push_root_group(std::vector<Mat3>& gens, const FieldSpec& f, int i, int j) {
  for (Fq t : additive_basis(f)) gens.push_back(elementary(i, j, t));
}

std::size_t mix(ElemKey k) { return static_cast<std::size_t>((k * 0x9E3779B97F4A7C15ull) >> 17); }

}  // namespace

std::vector<Mat3> Pgl3::full_generators(GroupKind kind) const {
  std::vector<Mat3> gens;
  push_root_group(gens, *field_, 0, 1);
  push_root_group(gens, *field_, 1, 0);
  push_root_group(gens, *field_, 1, 2);
  push_root_group(gens, *field_, 2, 1);
  if (kind == GroupKind::PGL && q() > 2) gens.push_back(diagonal(field_->primitive(), 1, 1));
  return gens;
}

Closure::Closure(const Pgl3& ctx, std::size_t cap) : ctx_(&ctx), cap_(cap) {
  slots_.assign(64, 0);
  mask_ = 63;
  push(ctx.identity());
}

bool Closure::contains(ElemKey k) const {
  for (std::size_t i = mix(k) & mask_;; i = (i + 1) & mask_) {
    if (slots_[i] == k) return true;
    if (slots_[i] == 0) return false;
  }
}

void Closure::push(const Mat3& m) {
  if (elems_.size() >= cap_) throw Error(ErrorKind::CapExceeded, "subgroup exceeds cap " + std::to_string(cap_));
  if (2 * (elems_.size() + 1) > slots_.size()) {
    std::vector<ElemKey> old(slots_.size() * 2, 0);
    old.swap(slots_);
    mask_ = slots_.size() - 1;
    for (ElemKey k : old)
      if (k != 0) {
        std::size_t i = mix(k) & mask_;
        while (slots_[i] != 0) i = (i + 1) & mask_;
        slots_[i] = k;
      }
  }
  const ElemKey k = Pgl3::key(m);
  std::size_t i = mix(k) & mask_;
  while (slots_[i] != 0) i = (i + 1) & mask_;
  slots_[i] = k;
  elems_.push_back(m);
}

bool Closure::add_generator(const Mat3& g_raw) {
  const Mat3 g = ctx_->canonical(g_raw);
  if (contains(Pgl3::key(g))) return false;
  const std::size_t block = elems_.size();
  gens_.push_back(g);
  // elems_ is the old subgroup H; append the right coset H*g, then close
  // the union of cosets under right multiplication by all generators.
  const std::vector<Mat3> h(elems_.begin(), elems_.end());
  for (const Mat3& x : h) push(ctx_->mul(x, g));
  for (std::size_t pos = block; pos < elems_.size(); pos += block) {
    const Mat3 rep = elems_[pos];
    for (const Mat3& t : gens_) {
      const Mat3 e = ctx_->mul(rep, t);
      if (contains(Pgl3::key(e))) continue;
      for (const Mat3& x : h) push(ctx_->mul(x, e));
    }
  }
  return true;
}

SubgroupRec Closure::finish(std::optional<int> tag) const {
  SubgroupRec rec;
  rec.generators = gens_;
  rec.elements.reserve(elems_.size());
  for (const Mat3& m : elems_) rec.elements.push_back(Pgl3::key(m));
  std::sort(rec.elements.begin(), rec.elements.end());
  rec.tag = tag;
  return rec;
}

SubgroupRec closure(const Pgl3& ctx, const std::vector<Mat3>& gens, std::size_t cap) {
  Closure c(ctx, cap);
  for (const Mat3& g : gens) {
    if (ctx.det(g) == 0) throw Error(ErrorKind::Singular, "generator is singular");
    c.add_generator(g);
  }
  return c.finish();
}

MaximalKind parse_maximal_kind(const std::string& s) {
  if (s == "point_stab") return MaximalKind::PointStab;
  if (s == "line_stab") return MaximalKind::LineStab;
  if (s == "triangle_stab") return MaximalKind::TriangleStab;
  if (s == "singer_norm") return MaximalKind::SingerNorm;
  if (s == "subplane_stab") return MaximalKind::SubplaneStab;
  throw Error(ErrorKind::InvalidKind, "unknown maximal subgroup kind '" + s + "'");
}

namespace {

bool is_scalar(const Mat3& m) {
  return m[1] == 0 && m[2] == 0 && m[3] == 0 && m[5] == 0 && m[6] == 0 && m[7] == 0 && m[0] == m[4] && m[4] == m[8];
}

Mat3 raw_power(const Pgl3& ctx, Mat3 base, long long e) {
  Mat3 result = ctx.identity();
  while (e > 0) {
    if (e & 1) result = ctx.mul_raw(result, base);
    base = ctx.mul_raw(base, base);
    e >>= 1;
  }
  return result;
}

std::vector<long long> prime_divisors(long long n) {
  std::vector<long long> out;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

// Frobenius x -> x^base of GF(base)[x]/(f) in the basis 1, x, x^2, where f is
// the characteristic polynomial of the companion matrix c.
Mat3 frobenius_with_base(const Pgl3& ctx, const Mat3& c, long long base) {
  Mat3 m{};
  for (int i = 0; i < 3; ++i) {
    const Mat3 pw = raw_power(ctx, c, base * i);
    for (int r = 0; r < 3; ++r) m[3 * r + i] = pw[3 * r];
  }
  return ctx.canonical(m);
}

}  // namespace

Mat3 companion(const Pgl3& ctx, const std::array<Fq, 3>& cubic) {
  const FieldSpec& f = ctx.field();
  return {0, 0, f.neg(cubic[0]), 1, 0, f.neg(cubic[1]), 0, 1, f.neg(cubic[2])};
}

std::array<Fq, 3> singer_cubic(const Pgl3& ctx) {
  const FieldSpec& f = ctx.field();
  const int q = f.q();
  const long long n = static_cast<long long>(q) * q + q + 1;
  const auto primes = prime_divisors(n);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 1; c < q; ++c) {
        bool has_root = false;
        for (int x = 0; x < q && !has_root; ++x) {
          const Fq xx = static_cast<Fq>(x);
          const Fq v = f.add(f.add(f.mul(f.mul(xx, xx), f.add(xx, static_cast<Fq>(a))), f.mul(static_cast<Fq>(b), xx)),
                             static_cast<Fq>(c));
          has_root = (v == 0);
        }
        if (has_root) continue;
        const std::array<Fq, 3> cubic{static_cast<Fq>(c), static_cast<Fq>(b), static_cast<Fq>(a)};
        const Mat3 cm = companion(ctx, cubic);
        if (!is_scalar(raw_power(ctx, cm, n))) continue;
        bool full = true;
        for (long long r : primes)
          if (is_scalar(raw_power(ctx, cm, n / r))) full = false;
        if (full) return cubic;
      }
  throw Error(ErrorKind::VerificationMismatch, "no Singer cubic found");
}

Mat3 frobenius_matrix(const Pgl3& ctx, const Mat3& comp) { return frobenius_with_base(ctx, comp, ctx.q()); }

namespace {

constexpr std::size_t kMaximalCap = 4'000'000;

SubgroupRec capped_closure(const Pgl3& ctx, const std::vector<Mat3>& gens, std::size_t cap, std::optional<int> tag) {
  try {
    Closure c(ctx, cap);
    for (const Mat3& g : gens) c.add_generator(g);
    return c.finish(tag);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::CapExceeded) throw Error(ErrorKind::TooLarge, e.what());
    throw;
  }
}

std::vector<Mat3> gf2_psl32_generators() {
  return {elementary(0, 1, 1), elementary(1, 0, 1), elementary(1, 2, 1), elementary(2, 1, 1)};
}

}  // namespace

SubgroupRec maximal_subgroup(const Pgl3& ctx, MaximalKind kind) {
  const FieldSpec& f = ctx.field();
  const Fq eps = f.primitive();
  std::vector<Mat3> gens;
  switch (kind) {
    case MaximalKind::PointStab:
      push_root_group(gens, f, 0, 1);
      push_root_group(gens, f, 0, 2);
      push_root_group(gens, f, 1, 2);
      push_root_group(gens, f, 2, 1);
      gens.push_back(diagonal(eps, 1, 1));
      gens.push_back(diagonal(1, eps, 1));
      break;
    case MaximalKind::LineStab:
      push_root_group(gens, f, 0, 1);
      push_root_group(gens, f, 1, 0);
      push_root_group(gens, f, 0, 2);
      push_root_group(gens, f, 1, 2);
      gens.push_back(diagonal(eps, 1, 1));
      gens.push_back(diagonal(1, eps, 1));
      break;
    case MaximalKind::TriangleStab:
      gens = {diagonal(eps, 1, 1), diagonal(1, eps, 1), permutation_matrix({1, 2, 0}), permutation_matrix({1, 0, 2})};
      break;
    case MaximalKind::SingerNorm: {
      const Mat3 c = companion(ctx, singer_cubic(ctx));
      gens = {c, frobenius_matrix(ctx, c)};
      break;
    }
    case MaximalKind::SubplaneStab:
      if (f.p() != 2) throw Error(ErrorKind::InvalidQ, "subplane stabilizer needs characteristic 2");
      gens = gf2_psl32_generators();
      break;
  }
  return capped_closure(ctx, gens, kMaximalCap, std::nullopt);
}

SubgroupRec line_rep(const Pgl3& ctx, int line_id) {
  const FieldSpec& f = ctx.field();
  if (f.p() != 2 || f.k() < 3 || !is_prime(f.k()))
    throw Error(ErrorKind::InvalidP, "line representatives need q = 2^p with p an odd prime");
  if (line_id < 1 || line_id > 31) throw Error(ErrorKind::UnsupportedLine, "line must be in 1..31");
  const Fq eps = f.primitive();
  const Mat3 d0 = diagonal(eps, 1, 1);
  const Mat3 d1 = diagonal(1, eps, 1);
  const Mat3 d2 = diagonal(1, 1, eps);
  const Mat3 cyc3 = permutation_matrix({1, 2, 0});
  const Mat3 swap01 = permutation_matrix({1, 0, 2});
  std::vector<Mat3> g;
  auto root = [&](int i, int j) { push_root_group(g, f, i, j); };
  switch (line_id) {
    case 1: root(0, 1); root(0, 2); root(1, 2); root(2, 1); g.push_back(d0); g.push_back(d1); break;
    case 2: root(0, 1); root(1, 0); root(0, 2); root(1, 2); g.push_back(d0); g.push_back(d1); break;
    case 3: g = {d0, d1, cyc3, swap01}; break;
    case 4: {
      const Mat3 c = companion(ctx, singer_cubic(ctx));
      g = {c, frobenius_matrix(ctx, c)};
      break;
    }
    case 5: g = gf2_psl32_generators(); break;
    case 6: root(0, 1); root(0, 2); root(1, 2); g.push_back(d0); g.push_back(d1); break;
    case 7: root(1, 2); root(2, 1); g.push_back(d1); g.push_back(d2); break;
    case 8: root(0, 2); root(1, 2); g.push_back(d0); g.push_back(d1); break;
    case 9: root(0, 1); root(0, 2); g.push_back(d0); g.push_back(d1); break;
    case 10: root(0, 2); root(1, 2); g.push_back(d2); break;
    case 11: root(0, 1); root(0, 2); g.push_back(d0); break;
    case 12: root(0, 2); g.push_back(d0); g.push_back(d1); break;
    case 13: g = {d0, d1, permutation_matrix({0, 2, 1})}; break;
    case 14: g = {d0, d1}; break;
    case 15: root(2, 0); g.push_back(d0); break;
    case 16: root(0, 2); g.push_back(d0); break;
    case 17: g = {Mat3{1, 0, 1, 0, eps, 0, 0, 0, 1}}; break;
    case 18: root(0, 2); break;
    case 19: g = {d0}; break;
    case 20: g = {elementary(0, 1, 1), elementary(0, 2, 1), elementary(1, 2, 1), elementary(2, 1, 1)}; break;
    case 21: g = {elementary(0, 1, 1), elementary(1, 0, 1), elementary(0, 2, 1), elementary(1, 2, 1)}; break;
    case 22: {
      const Mat3 c = companion(ctx, {1, 1, 0});  // x^3 + x + 1 over GF(2)
      g = {c, frobenius_with_base(ctx, c, 2)};
      break;
    }
    case 23: g = {elementary(0, 1, 1), elementary(1, 2, 1)}; break;
    case 24: g = {companion(ctx, {1, 1, 0})}; break;
    case 25: g = {cyc3, swap01}; break;
    case 26: g = {Mat3{1, 1, 1, 0, 1, 1, 0, 0, 1}}; break;
    case 27: g = {elementary(0, 1, 1), elementary(0, 2, 1)}; break;
    case 28: g = {elementary(0, 2, 1), elementary(1, 2, 1)}; break;
    case 29: g = {cyc3}; break;
    case 30: g = {elementary(0, 2, 1)}; break;
    case 31: break;
  }
  return capped_closure(ctx, g, kLineRepBudget, line_id);
}

namespace {

std::uint64_t encode_items(const std::vector<PlaneItem>& items) {
  std::uint64_t code = 0;
  for (const PlaneItem& it : items) code = (code << 16) | (static_cast<std::uint64_t>(it.is_line) << 15) | it.id;
  return code;
}

std::vector<PlaneItem> act(const Pgl3& ctx, const Mat3& m, const std::vector<PlaneItem>& items) {
  std::vector<PlaneItem> out;
  out.reserve(items.size());
  for (const PlaneItem& it : items)
    out.push_back({it.is_line, it.is_line ? ctx.apply_line(m, it.id) : ctx.apply_point(m, it.id)});
  return out;
}

}  // namespace

OrbitStabilizer orbit_stabilizer(const Pgl3& ctx, const std::vector<Mat3>& gens, const std::vector<PlaneItem>& seed,
                                 std::size_t cap) {
  if (seed.empty() || seed.size() > 4) throw Error(ErrorKind::InvalidInput, "seed must have 1 to 4 items");
  for (const PlaneItem& it : seed)
    if (it.id < 0 || it.id >= ctx.plane().size()) throw Error(ErrorKind::InvalidInput, "seed id out of range");

  OrbitStabilizer out;
  std::vector<Mat3> transversal;  // transversal[i] maps seed to orbit[i]
  std::unordered_map<std::uint64_t, std::size_t> where;
  out.orbit.push_back(seed);
  transversal.push_back(ctx.identity());
  where.emplace(encode_items(seed), 0);
  Closure stab(ctx, cap);
  for (std::size_t i = 0; i < out.orbit.size(); ++i) {
    for (const Mat3& s : gens) {
      auto img = act(ctx, s, out.orbit[i]);
      const Mat3 su = ctx.mul(s, transversal[i]);
      auto [it, fresh] = where.emplace(encode_items(img), out.orbit.size());
      if (fresh) {
        out.orbit.push_back(std::move(img));
        transversal.push_back(su);
      } else {
        stab.add_generator(ctx.mul(ctx.inverse(transversal[it->second]), su));
      }
    }
  }
  out.stabilizer = stab.finish();
  return out;
}

SubgroupRec normalizer_in(const Pgl3& ctx, const SubgroupRec& ambient, const SubgroupRec& h) {
  Closure c(ctx, ambient.order());
  std::size_t count = 0;
  for (ElemKey k : ambient.elements) {
    const Mat3 g = Pgl3::unkey(k);
    bool ok = true;
    for (const Mat3& x : h.generators)
      if (!h.contains(Pgl3::key(ctx.conjugate(x, g)))) {
        ok = false;
        break;
      }
    if (!ok) continue;
    ++count;
    if (!c.contains(k)) c.add_generator(g);
  }
  SubgroupRec rec = c.finish();
  if (rec.order() != count) throw Error(ErrorKind::VerificationMismatch, "normalizer scan is not a subgroup");
  return rec;
}

}  // namespace mobius3
