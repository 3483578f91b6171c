#pragma once

#include <cstdint>
#include <vector>

#include "loopkit/subset_mask.hpp"

namespace loopkit {

// A bijection on [0, n), stored as its image vector.
struct Permutation {
  std::vector<Elem> img;

  static Permutation identity(int n) {
    Permutation p;
    p.img.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p.img[static_cast<std::size_t>(i)] = static_cast<Elem>(i);
    return p;
  }

  int degree() const { return static_cast<int>(img.size()); }

  Elem operator()(Elem x) const { return img[x]; }

  bool is_identity() const {
    for (std::size_t i = 0; i < img.size(); ++i)
      if (img[i] != i) return false;
    return true;
  }

  Permutation inverse() const {
    Permutation p;
    p.img.resize(img.size());
    for (std::size_t i = 0; i < img.size(); ++i) p.img[img[i]] = static_cast<Elem>(i);
    return p;
  }

  // this first, then g: z -> g(this(z))
  Permutation then(const Permutation& g) const {
    Permutation p;
    p.img.resize(img.size());
    for (std::size_t i = 0; i < img.size(); ++i) p.img[i] = g.img[img[i]];
    return p;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
};

inline bool is_bijection(const std::vector<Elem>& img) {
  std::vector<bool> seen(img.size(), false);
  for (auto v : img) {
    if (v >= img.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

}  // namespace loopkit
