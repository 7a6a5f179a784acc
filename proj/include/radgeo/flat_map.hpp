#pragma once

#include <cstdint>
#include <vector>

namespace radgeo {

/// Open-addressing map from nonzero-mixed 64-bit fingerprints to 32-bit
/// indices. Linear probing, power-of-two capacity, load factor <= 1/2.
class FingerprintMap {
 public:
  static constexpr std::uint32_t kAbsent = 0xFFFFFFFFu;

  explicit FingerprintMap(std::size_t expected = 1024) { rehash(capacity_for(expected)); }

  /// Returns {index, inserted}.
  std::pair<std::uint32_t, bool> try_emplace(std::uint64_t key, std::uint32_t value) {
    if ((size_ + 1) * 2 > keys_.size()) rehash(keys_.size() * 2);
    std::size_t i = slot(key);
    while (vals_[i] != kAbsent) {
      if (keys_[i] == key) return {vals_[i], false};
      i = (i + 1) & mask_;
    }
    keys_[i] = key;
    vals_[i] = value;
    ++size_;
    return {value, true};
  }

  std::uint32_t find(std::uint64_t key) const {
    for (std::size_t i = slot(key); vals_[i] != kAbsent; i = (i + 1) & mask_)
      if (keys_[i] == key) return vals_[i];
    return kAbsent;
  }

  std::size_t size() const { return size_; }

 private:
  static std::size_t capacity_for(std::size_t n) {
    std::size_t c = 16;
    while (c < 2 * n) c <<= 1;
    return c;
  }
  std::size_t slot(std::uint64_t key) const {
    return static_cast<std::size_t>((key * 0x9E3779B97F4A7C15ull) >> 17) & mask_;
  }
  void rehash(std::size_t cap) {
    std::vector<std::uint64_t> old_keys(cap);
    std::vector<std::uint32_t> old_vals(cap, kAbsent);
    old_keys.swap(keys_);
    old_vals.swap(vals_);
    mask_ = cap - 1;
    for (std::size_t i = 0; i < old_vals.size(); ++i) {
      if (old_vals[i] == kAbsent) continue;
      std::size_t j = slot(old_keys[i]);
      while (vals_[j] != kAbsent) j = (j + 1) & mask_;
      keys_[j] = old_keys[i];
      vals_[j] = old_vals[i];
    }
  }

  std::vector<std::uint64_t> keys_;
  std::vector<std::uint32_t> vals_;
  std::size_t mask_ = 0;
  std::size_t size_ = 0;
};

}  // namespace radgeo
