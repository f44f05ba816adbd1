#pragma once

// A materialized subgroup of PGL(3,q), q <= 13, with elements numbered
// 0..n-1 in ascending key order. A projective map is determined by the
// images of the frame e0, e1, e2, e0+e1+e2, so a product is four
// permutation lookups plus one frame lookup.

#include "mobius3/keyset.hpp"
#include "mobius3/pgl.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace mobius3 {

class IndexedGroup {
 public:
  IndexedGroup(const Pgl3& ctx, const SubgroupRec& group);

  const Pgl3& ctx() const noexcept { return *ctx_; }
  std::uint32_t size() const noexcept { return n_; }
  std::uint32_t identity() const noexcept { return identity_; }

  /// Index of the matrix product a * b.
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    const std::uint8_t* pa = &perms_[static_cast<std::size_t>(a) * np_];
    const std::uint8_t* fb = &frames_[4 * static_cast<std::size_t>(b)];
    return lookup(pa[fb[0]], pa[fb[1]], pa[fb[2]], pa[fb[3]]);
  }
  std::uint32_t inv(std::uint32_t a) const noexcept { return inv_[a]; }
  /// g^-1 x g.
  std::uint32_t conj(std::uint32_t x, std::uint32_t g) const noexcept { return mul(inv_[g], mul(x, g)); }
  std::uint32_t order_of(std::uint32_t a) const noexcept { return order_[a]; }
  std::uint32_t power(std::uint32_t a, std::uint64_t e) const noexcept;

  ElemKey key(std::uint32_t a) const noexcept { return keys_[a]; }
  Mat3 matrix(std::uint32_t a) const noexcept { return Pgl3::unkey(keys_[a]); }
  std::optional<std::uint32_t> index_of(ElemKey k) const;
  int point_image(std::uint32_t a, int point) const noexcept { return perms_[static_cast<std::size_t>(a) * np_ + point]; }

  /// Greedy generating set: least elements not in the span of earlier ones.
  const std::vector<std::uint32_t>& generators() const noexcept { return gens_; }

 private:
  std::uint32_t lookup(int a, int b, int c, int d) const noexcept {
    if (!table_.empty()) return table_[((static_cast<std::size_t>(a) * np_ + b) * np_ + c) * np_ + d];
    return frame_map_.get(pack(a, b, c, d)) - 1;
  }
  static std::uint64_t pack(int a, int b, int c, int d) noexcept {
    return (static_cast<std::uint64_t>(a) << 24 | static_cast<std::uint64_t>(b) << 16 |
            static_cast<std::uint64_t>(c) << 8 | static_cast<std::uint64_t>(d)) + 1;
  }

  const Pgl3* ctx_;
  std::uint32_t n_ = 0;
  int np_ = 0;
  std::uint32_t identity_ = 0;
  std::vector<ElemKey> keys_;
  std::vector<std::uint8_t> perms_;
  std::vector<std::uint8_t> frames_;
  std::vector<std::uint32_t> table_;
  FlatKeyMap<std::uint32_t> frame_map_;
  std::vector<std::uint32_t> inv_;
  std::vector<std::uint32_t> order_;
  std::vector<std::uint32_t> gens_;
};

/// Reusable membership marks over element indices; reset is O(1).
class Marker {
 public:
  explicit Marker(std::uint32_t n) : stamp_(n, 0) {}
  void reset() {
    if (++cur_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      cur_ = 1;
    }
  }
  void set(std::uint32_t i) noexcept { stamp_[i] = cur_; }
  bool test(std::uint32_t i) const noexcept { return stamp_[i] == cur_; }

 private:
  std::vector<std::uint32_t> stamp_;
  std::uint32_t cur_ = 1;
};

/// Dimino extension: elements of <H, s> given the elements of H (any
/// order), the generators of H and a new generator s.
/// Uses mk as scratch. Result keeps H's elements as its first block.
std::vector<std::uint32_t> extend_subgroup(const IndexedGroup& g, const std::vector<std::uint32_t>& h_elems,
                                           const std::vector<std::uint32_t>& h_gens, std::uint32_t s, Marker& mk);

/// Elements of <gens>, sorted ascending.
std::vector<std::uint32_t> generate(const IndexedGroup& g, const std::vector<std::uint32_t>& gens, Marker& mk);

/// Greedy generating set of a subgroup given by its sorted elements.
std::vector<std::uint32_t> greedy_generators(const IndexedGroup& g, const std::vector<std::uint32_t>& elems, Marker& mk);

}  // namespace mobius3
