// Dense bit-indexed sets of group elements. Element indices are 0..n-1 where
// n is the order of the owning group; index 0 is always the identity.
#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace fusionlab {

class ElemSet {
 public:
  ElemSet() = default;
  explicit ElemSet(int universe)
      : words_((static_cast<size_t>(universe) + 63) / 64, 0), n_(universe) {}

  static ElemSet single(int universe, int i) {
    ElemSet s(universe);
    s.set(i);
    return s;
  }

  int universe() const { return n_; }

  bool test(int i) const {
    return (words_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1u;
  }
  void set(int i) { words_[static_cast<size_t>(i) >> 6] |= uint64_t(1) << (i & 63); }
  void reset(int i) { words_[static_cast<size_t>(i) >> 6] &= ~(uint64_t(1) << (i & 63)); }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }
  bool any() const {
    for (uint64_t w : words_)
      if (w) return true;
    return false;
  }
  bool empty() const { return !any(); }

  // Index of the smallest member, or -1 when empty.
  int first() const {
    for (size_t k = 0; k < words_.size(); ++k)
      if (words_[k]) return static_cast<int>(k * 64 + std::countr_zero(words_[k]));
    return -1;
  }

  bool subset_of(const ElemSet& o) const {
    for (size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~o.words_[k]) return false;
    return true;
  }
  bool proper_subset_of(const ElemSet& o) const {
    return subset_of(o) && *this != o;
  }
  bool intersects(const ElemSet& o) const {
    for (size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & o.words_[k]) return true;
    return false;
  }

  ElemSet& operator&=(const ElemSet& o) {
    for (size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  ElemSet& operator|=(const ElemSet& o) {
    for (size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  friend ElemSet operator&(ElemSet a, const ElemSet& b) { return a &= b; }
  friend ElemSet operator|(ElemSet a, const ElemSet& b) { return a |= b; }

  friend bool operator==(const ElemSet& a, const ElemSet& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }
  friend bool operator!=(const ElemSet& a, const ElemSet& b) { return !(a == b); }

  template <class F>
  void for_each(F f) const {
    for (size_t k = 0; k < words_.size(); ++k) {
      uint64_t w = words_[k];
      while (w) {
        int bit = std::countr_zero(w);
        f(static_cast<int>(k * 64 + bit));
        w &= w - 1;
      }
    }
  }

  std::vector<int> members() const {
    std::vector<int> v;
    v.reserve(static_cast<size_t>(count()));
    for_each([&](int i) { v.push_back(i); });
    return v;
  }

  size_t hash() const {
    uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<uint64_t>(n_);
    for (uint64_t w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<size_t>(h);
  }

  // Canonical order: by size, then lexicographically by sorted member list.
  // For equal sizes the set owning the first differing bit is the smaller one.
  static bool canon_less(const ElemSet& a, const ElemSet& b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    for (size_t k = 0; k < a.words_.size(); ++k) {
      uint64_t diff = a.words_[k] ^ b.words_[k];
      if (diff) {
        uint64_t low = diff & (~diff + 1);
        return (a.words_[k] & low) != 0;
      }
    }
    return false;
  }

 private:
  std::vector<uint64_t> words_;
  int n_ = 0;
};

struct ElemSetHash {
  size_t operator()(const ElemSet& s) const { return s.hash(); }
};

}  // namespace fusionlab
