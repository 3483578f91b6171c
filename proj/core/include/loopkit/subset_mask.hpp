#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace loopkit {

using Elem = std::uint16_t;

// Hard cap on loop order; chosen so the Paige loop of order 1080 fits and
// masks stay word-aligned (17 x 64).
inline constexpr int kMaxOrder = 1088;

// Fixed-capacity bitset over element indices. The all-zero tail above the
// ambient order keeps the representation canonical: equal subsets compare
// equal as raw words.
struct SubsetMask {
  static constexpr int kWords = kMaxOrder / 64;
  std::array<std::uint64_t, kWords> words{};

  static SubsetMask single(int i) {
    SubsetMask m;
    m.set(i);
    return m;
  }

  static SubsetMask full(int n) {
    SubsetMask m;
    for (int w = 0; w < kWords; ++w) {
      int lo = w * 64;
      if (n <= lo) break;
      int k = n - lo >= 64 ? 64 : n - lo;
      m.words[w] = k == 64 ? ~0ULL : ((1ULL << k) - 1);
    }
    return m;
  }

  static SubsetMask of(std::initializer_list<int> elems) {
    SubsetMask m;
    for (int e : elems) m.set(e);
    return m;
  }

  template <typename Seq>
  static SubsetMask from_elements(const Seq& elems) {
    SubsetMask m;
    for (auto e : elems) m.set(static_cast<int>(e));
    return m;
  }

  bool test(int i) const { return (words[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { words[i >> 6] |= 1ULL << (i & 63); }
  void reset(int i) { words[i >> 6] &= ~(1ULL << (i & 63)); }

  int count() const {
    int c = 0;
    for (auto w : words) c += std::popcount(w);
    return c;
  }

  bool none() const {
    for (auto w : words)
      if (w) return false;
    return true;
  }

  bool subset_of(const SubsetMask& o) const {
    for (int i = 0; i < kWords; ++i)
      if (words[i] & ~o.words[i]) return false;
    return true;
  }

  bool intersects(const SubsetMask& o) const {
    for (int i = 0; i < kWords; ++i)
      if (words[i] & o.words[i]) return true;
    return false;
  }

  SubsetMask operator|(const SubsetMask& o) const {
    SubsetMask r;
    for (int i = 0; i < kWords; ++i) r.words[i] = words[i] | o.words[i];
    return r;
  }

  std::vector<Elem> elements() const {
    std::vector<Elem> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (int w = 0; w < kWords; ++w) {
      std::uint64_t v = words[w];
      while (v) {
        int b = std::countr_zero(v);
        out.push_back(static_cast<Elem>(w * 64 + b));
        v &= v - 1;
      }
    }
    return out;
  }

  friend bool operator==(const SubsetMask&, const SubsetMask&) = default;
};

// Canonical order: by cardinality, then lexicographic on the sorted element
// sequence (the set owning the smallest element of the symmetric difference
// comes first).
inline bool canonical_less(const SubsetMask& a, const SubsetMask& b) {
  int ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  for (int i = 0; i < SubsetMask::kWords; ++i) {
    std::uint64_t d = a.words[i] ^ b.words[i];
    if (d) return (a.words[i] >> std::countr_zero(d)) & 1;
  }
  return false;
}

struct SubsetMaskHash {
  std::size_t operator()(const SubsetMask& m) const {
    // splitmix-style word mix
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : m.words) {
      std::uint64_t x = w + 0x9e3779b97f4a7c15ULL + h;
      x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
      x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
      h = x ^ (x >> 31);
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace loopkit
