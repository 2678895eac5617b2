#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace cvx {

/// Subset of a ground set, one bit per element. Ground sets are capped at
/// 64 elements so every set fits in one machine word.
using Mask = std::uint64_t;

inline constexpr int kMaxGroundSize = 64;

constexpr Mask bit(int i) { return Mask{1} << i; }

constexpr bool has(Mask m, int i) { return (m >> i) & 1; }

constexpr int popcount(Mask m) { return std::popcount(m); }

constexpr Mask full_mask(int n) {
  return n == 0 ? 0 : (~Mask{0} >> (kMaxGroundSize - n));
}

constexpr bool subset(Mask a, Mask b) { return (a & ~b) == 0; }

/// Canonical order: by size, then by the sequence of element indices
/// (so {e0,e3} precedes {e1,e2}). Used for witness selection and output.
constexpr bool canonical_less(Mask a, Mask b) {
  const int pa = std::popcount(a), pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  if (a == b) return false;
  // Equal size: the mask owning the lowest differing bit comes first.
  return has(a, std::countr_zero(a ^ b));
}

struct CanonicalLess {
  constexpr bool operator()(Mask a, Mask b) const { return canonical_less(a, b); }
};

inline std::vector<int> elements_of(Mask m) {
  std::vector<int> out;
  while (m) {
    const int i = std::countr_zero(m);
    out.push_back(i);
    m &= m - 1;
  }
  return out;
}

/// Visits every subset of `m` (including 0 and m itself).
template <typename F>
void for_each_subset(Mask m, F&& fn) {
  Mask s = m;
  while (true) {
    fn(s);
    if (s == 0) break;
    s = (s - 1) & m;
  }
}

}  // namespace cvx
