#pragma once

// Open-addressing hash containers for nonzero 64-bit keys. Built once, then
// read concurrently by the scan kernels.

#include <cstdint>
#include <vector>

namespace mobius3 {

inline std::size_t key_hash(std::uint64_t k) noexcept {
  k ^= k >> 31;
  k *= 0x9E3779B97F4A7C15ull;
  return static_cast<std::size_t>(k ^ (k >> 29));
}

template <class V>
class FlatKeyMap {
 public:
  explicit FlatKeyMap(std::size_t expected = 16) {
    std::size_t cap = 16;
    while (cap < 2 * expected) cap <<= 1;
    keys_.assign(cap, 0);
    vals_.assign(cap, V{});
    mask_ = cap - 1;
  }

  /// Returns a reference to the value slot, inserting V{} when absent.
  V& operator[](std::uint64_t k) {
    if (2 * (size_ + 1) > keys_.size()) grow();
    std::size_t i = key_hash(k) & mask_;
    while (keys_[i] != 0 && keys_[i] != k) i = (i + 1) & mask_;
    if (keys_[i] == 0) {
      keys_[i] = k;
      ++size_;
    }
    return vals_[i];
  }

  /// Value for k, or V{} when absent.
  V get(std::uint64_t k) const noexcept {
    for (std::size_t i = key_hash(k) & mask_;; i = (i + 1) & mask_) {
      if (keys_[i] == k) return vals_[i];
      if (keys_[i] == 0) return V{};
    }
  }

  bool contains(std::uint64_t k) const noexcept {
    for (std::size_t i = key_hash(k) & mask_;; i = (i + 1) & mask_) {
      if (keys_[i] == k) return true;
      if (keys_[i] == 0) return false;
    }
  }

  std::size_t size() const noexcept { return size_; }

 private:
  void grow() {
    std::vector<std::uint64_t> old_keys(keys_.size() * 2, 0);
    std::vector<V> old_vals(vals_.size() * 2, V{});
    old_keys.swap(keys_);
    old_vals.swap(vals_);
    mask_ = keys_.size() - 1;
    size_ = 0;
    for (std::size_t j = 0; j < old_keys.size(); ++j)
      if (old_keys[j] != 0) (*this)[old_keys[j]] = old_vals[j];
  }

  std::vector<std::uint64_t> keys_;
  std::vector<V> vals_;
  std::size_t mask_ = 0;
  std::size_t size_ = 0;
};

class FlatKeySet {
 public:
  explicit FlatKeySet(std::size_t expected = 16) : map_(expected) {}
  void insert(std::uint64_t k) { map_[k] = 1; }
  bool contains(std::uint64_t k) const noexcept { return map_.contains(k); }
  std::size_t size() const noexcept { return map_.size(); }

 private:
  FlatKeyMap<unsigned char> map_;
};

}  // namespace mobius3
