#include "mobius3/indexed_group.hpp"

#include "mobius3/error.hpp"

#include <algorithm>
#include <string>

namespace mobius3 {

IndexedGroup::IndexedGroup(const Pgl3& ctx, const SubgroupRec& group) : ctx_(&ctx), frame_map_(16) {
  np_ = ctx.plane().size();
  if (np_ > 255) throw Error(ErrorKind::TooLarge, "indexed groups need q <= 13");
  if (group.order() > 0xFFFFFFFEu) throw Error(ErrorKind::TooLarge, "group too large to index");
  n_ = static_cast<std::uint32_t>(group.order());
  keys_ = group.elements;

  const Plane& pl = ctx.plane();
  const int q = ctx.q();
  const int frame[4] = {0, q * q, q * q + q, q + 1};  // e0, e1, e2, e0+e1+e2
  perms_.resize(static_cast<std::size_t>(n_) * np_);
  frames_.resize(4 * static_cast<std::size_t>(n_));
  const std::size_t cells = static_cast<std::size_t>(np_) * np_ * np_ * np_;
  const bool dense = np_ <= 63;
  if (dense) table_.assign(cells, 0xFFFFFFFFu);
  else frame_map_ = FlatKeyMap<std::uint32_t>(n_);

  for (std::uint32_t a = 0; a < n_; ++a) {
    const Mat3 m = Pgl3::unkey(keys_[a]);
    std::uint8_t* pa = &perms_[static_cast<std::size_t>(a) * np_];
    for (int x = 0; x < pl.size(); ++x) pa[x] = static_cast<std::uint8_t>(ctx.apply_point(m, x));
    for (int i = 0; i < 4; ++i) frames_[4 * static_cast<std::size_t>(a) + i] = pa[frame[i]];
    const std::uint8_t* f = &frames_[4 * static_cast<std::size_t>(a)];
    if (dense) table_[((static_cast<std::size_t>(f[0]) * np_ + f[1]) * np_ + f[2]) * np_ + f[3]] = a;
    else frame_map_[pack(f[0], f[1], f[2], f[3])] = a + 1;
  }
  const auto id = index_of(Pgl3::key(ctx.identity()));
  if (!id) throw Error(ErrorKind::InvalidInput, "element set does not contain the identity");
  identity_ = *id;

  order_.assign(n_, 0);
  inv_.assign(n_, 0);
  for (std::uint32_t a = 0; a < n_; ++a) {
    std::uint32_t x = a, prev = identity_, o = 1;
    while (x != identity_) {
      prev = x;
      x = mul(x, a);
      if (x == 0xFFFFFFFFu) throw Error(ErrorKind::InvalidInput, "element set is not closed");
      ++o;
    }
    order_[a] = o;
    inv_[a] = prev;  // a^(o-1)
  }

  Marker mk(n_);
  std::vector<std::uint32_t> cur{identity_};
  for (std::uint32_t a = 0; a < n_ && cur.size() < n_; ++a) {
    mk.reset();
    for (std::uint32_t x : cur) mk.set(x);
    if (mk.test(a)) continue;
    cur = extend_subgroup(*this, cur, gens_, a, mk);
    gens_.push_back(a);
  }
  if (cur.size() != n_) throw Error(ErrorKind::InvalidInput, "element set is not a group");
}

std::uint32_t IndexedGroup::power(std::uint32_t a, std::uint64_t e) const noexcept {
  e %= order_[a];
  std::uint32_t r = identity_;
  for (std::uint64_t i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

std::optional<std::uint32_t> IndexedGroup::index_of(ElemKey k) const {
  auto it = std::lower_bound(keys_.begin(), keys_.end(), k);
  if (it == keys_.end() || *it != k) return std::nullopt;
  return static_cast<std::uint32_t>(it - keys_.begin());
}

std::vector<std::uint32_t> extend_subgroup(const IndexedGroup& g, const std::vector<std::uint32_t>& h_elems,
                                           const std::vector<std::uint32_t>& h_gens, std::uint32_t s, Marker& mk) {
  mk.reset();
  std::vector<std::uint32_t> out(h_elems);
  for (std::uint32_t x : out) mk.set(x);
  if (mk.test(s)) return out;
  std::vector<std::uint32_t> gens(h_gens);
  gens.push_back(s);
  const std::size_t block = h_elems.size();
  auto add_coset = [&](std::uint32_t r) {
    for (std::size_t i = 0; i < block; ++i) {
      const std::uint32_t y = g.mul(h_elems[i], r);
      mk.set(y);
      out.push_back(y);
    }
  };
  add_coset(s);
  for (std::size_t pos = block; pos < out.size(); pos += block) {
    const std::uint32_t rep = out[pos];
    for (std::uint32_t t : gens) {
      const std::uint32_t e = g.mul(rep, t);
      if (!mk.test(e)) add_coset(e);
    }
  }
  return out;
}

std::vector<std::uint32_t> generate(const IndexedGroup& g, const std::vector<std::uint32_t>& gens, Marker& mk) {
  std::vector<std::uint32_t> cur{g.identity()};
  std::vector<std::uint32_t> used;
  for (std::uint32_t s : gens) {
    const std::size_t before = cur.size();
    cur = extend_subgroup(g, cur, used, s, mk);
    if (cur.size() != before) used.push_back(s);
  }
  std::sort(cur.begin(), cur.end());
  return cur;
}

std::vector<std::uint32_t> greedy_generators(const IndexedGroup& g, const std::vector<std::uint32_t>& elems,
                                             Marker& mk) {
  std::vector<std::uint32_t> cur{g.identity()};
  std::vector<std::uint32_t> gens;
  for (std::uint32_t a : elems) {
    if (cur.size() == elems.size()) break;
    mk.reset();
    for (std::uint32_t x : cur) mk.set(x);
    if (mk.test(a)) continue;
    cur = extend_subgroup(g, cur, gens, a, mk);
    gens.push_back(a);
  }
  return gens;
}

}  // namespace mobius3
