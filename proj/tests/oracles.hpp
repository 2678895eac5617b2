#pragma once

// Test-only oracles: definition-level brute force, kept independent of the
// library's computation paths so the two routes can check each other.

#include <algorithm>
#include <string>
#include <vector>

#include "cvxgeo/resolution.hpp"

namespace oracles {

using cvx::ConvexGeometry;
using cvx::GroundSet;
using cvx::Mask;
using cvx::SetFamily;

inline ConvexGeometry make_geometry(std::vector<std::string> labels,
                                    std::vector<std::vector<std::string>> sets) {
  GroundSet ground(std::move(labels));
  std::vector<Mask> masks;
  for (const auto& s : sets) masks.push_back(ground.mask_of(s));
  return ConvexGeometry::certify(SetFamily(std::move(ground), std::move(masks)));
}

inline SetFamily make_family(std::vector<std::string> labels,
                             std::vector<std::vector<std::string>> sets) {
  GroundSet ground(std::move(labels));
  std::vector<Mask> masks;
  for (const auto& s : sets) masks.push_back(ground.mask_of(s));
  return SetFamily(std::move(ground), std::move(masks));
}

// Intersection of all members above `a`, straight from the definition.
inline Mask naive_conv(const std::vector<Mask>& members, Mask full, Mask a) {
  Mask r = full;
  for (Mask m : members)
    if ((a & ~m) == 0) r &= m;
  return r;
}

inline Mask naive_extreme(const std::vector<Mask>& members, Mask full, Mask a) {
  Mask out = 0;
  for (int p = 0; p < 64; ++p) {
    if (!((a >> p) & 1)) continue;
    if (!((naive_conv(members, full, a & ~(Mask{1} << p)) >> p) & 1)) out |= Mask{1} << p;
  }
  return out;
}

// Filters all subsets of Z by the three resolution requirements; this is the
// definition, not the structured generator the library uses.
inline std::vector<Mask> naive_resolve(const cvx::ResolutionSpec& spec, bool require_r3) {
  const int nz = spec.resolved_size();
  const Mask base_full = spec.base().full();
  std::vector<Mask> out;
  for (Mask a = 0;; ++a) {
    const Mask pa = spec.project_mask(a);
    bool ok = spec.base().contains(pa);  // R1
    if (ok) {                            // R2
      for (int x : cvx::elements_of(pa))
        if (!spec.fiber(x).contains(spec.trace(x, a))) {
          ok = false;
          break;
        }
    }
    if (ok && require_r3) {  // R3
      const Mask ex = naive_extreme(spec.base().sets(), base_full, pa);
      for (int x : cvx::elements_of(pa & ~ex))
        if ((a & spec.fiber_mask(x)) != spec.fiber_mask(x)) {
          ok = false;
          break;
        }
    }
    if (ok) out.push_back(a);
    if (a == cvx::full_mask(nz)) break;
  }
  return out;
}

// Paper fixtures -------------------------------------------------------

// The six geometries on {x,y,z}.
inline ConvexGeometry g1() {
  return make_geometry({"x", "y", "z"}, {{}, {"x"}, {"x", "y"}, {"x", "y", "z"}});
}
inline ConvexGeometry g2() {
  return make_geometry({"x", "y", "z"}, {{}, {"x"}, {"y"}, {"x", "y"}, {"x", "y", "z"}});
}
inline ConvexGeometry g3() {
  return make_geometry({"x", "y", "z"}, {{}, {"x"}, {"x", "y"}, {"x", "z"}, {"x", "y", "z"}});
}
inline ConvexGeometry g4() {
  return make_geometry({"x", "y", "z"},
                       {{}, {"x"}, {"y"}, {"x", "y"}, {"x", "z"}, {"x", "y", "z"}});
}
inline ConvexGeometry g5() {
  return make_geometry({"x", "y", "z"},
                       {{}, {"x"}, {"y"}, {"z"}, {"x", "y"}, {"x", "z"}, {"x", "y", "z"}});
}
inline ConvexGeometry g6() {
  return make_geometry({"x", "y", "z"},
                       {{}, {"x"}, {"y"}, {"z"}, {"x", "y"}, {"x", "z"}, {"y", "z"},
                        {"x", "y", "z"}});
}

// Four points with c between b and d, a off the line: every subset is convex
// except {b,d} and {a,b,d}.
inline ConvexGeometry fig2_geometry() {
  std::vector<std::vector<std::string>> sets;
  const std::vector<std::string> labels = {"a", "b", "c", "d"};
  for (unsigned m = 0; m < 16; ++m) {
    std::vector<std::string> s;
    for (int i = 0; i < 4; ++i)
      if ((m >> i) & 1) s.push_back(labels[i]);
    const bool bd = (m == 0b1010u) || (m == 0b1011u);  // {b,d}, {a,b,d}
    if (!bd) sets.push_back(s);
  }
  return make_geometry(labels, sets);
}

inline ConvexGeometry powerset(std::vector<std::string> labels) {
  GroundSet ground(labels);
  std::vector<Mask> masks;
  for (Mask m = 0;; ++m) {
    masks.push_back(m);
    if (m == ground.full()) break;
  }
  return ConvexGeometry::certify(SetFamily(std::move(ground), std::move(masks)));
}

// Base {empty,{1},X} on {1,2}; fibers {a1,b1} and {a2}, both full powersets.
inline cvx::ResolutionSpec example_31_spec() {
  ConvexGeometry base = make_geometry({"1", "2"}, {{}, {"1"}, {"1", "2"}});
  std::vector<ConvexGeometry> fibers = {powerset({"a1", "b1"}), powerset({"a2"})};
  return cvx::ResolutionSpec(std::move(base), std::move(fibers));
}

// Base 2^X minus {1,3} on {1,2,3}; fibers {a} | {b,c} | {d}.
inline cvx::ResolutionSpec example_41a_spec() {
  ConvexGeometry base = make_geometry(
      {"1", "2", "3"},
      {{}, {"1"}, {"2"}, {"3"}, {"1", "2"}, {"2", "3"}, {"1", "2", "3"}});
  std::vector<ConvexGeometry> fibers = {powerset({"a"}), powerset({"b", "c"}), powerset({"d"})};
  return cvx::ResolutionSpec(std::move(base), std::move(fibers));
}

// Same base; fibers {a} | {b} | {c,d}.
inline cvx::ResolutionSpec example_41b_spec() {
  ConvexGeometry base = make_geometry(
      {"1", "2", "3"},
      {{}, {"1"}, {"2"}, {"3"}, {"1", "2"}, {"2", "3"}, {"1", "2", "3"}});
  std::vector<ConvexGeometry> fibers = {powerset({"a"}), powerset({"b"}), powerset({"c", "d"})};
  return cvx::ResolutionSpec(std::move(base), std::move(fibers));
}

// Fig. 2 as a resolution: base 2^{1,2}, fiber {a} over 1 and the collinear
// triple over 2.
inline cvx::ResolutionSpec fig2_spec() {
  ConvexGeometry base = powerset({"1", "2"});
  ConvexGeometry triple = make_geometry(
      {"b", "c", "d"}, {{}, {"b"}, {"c"}, {"d"}, {"b", "c"}, {"c", "d"}, {"b", "c", "d"}});
  std::vector<ConvexGeometry> fibers = {powerset({"a"}), std::move(triple)};
  return cvx::ResolutionSpec(std::move(base), std::move(fibers));
}

inline Mask mask_of(const ConvexGeometry& g, std::vector<std::string> labels) {
  return g.ground().mask_of(labels);
}

inline ConvexGeometry relabel(const ConvexGeometry& g, std::vector<std::string> labels) {
  return ConvexGeometry::certify(SetFamily(GroundSet(std::move(labels)), g.sets()));
}

inline std::vector<ConvexGeometry> classes_of_size(int n) {
  switch (n) {
    case 1: return {powerset({"a"})};
    case 2: return {powerset({"a", "b"}), make_geometry({"a", "b"}, {{}, {"a"}, {"a", "b"}})};
    case 3: return {g1(), g2(), g3(), g4(), g5(), g6()};
    default: return {};
  }
}

inline std::vector<std::string> stem_labels(int position, int count) {
  std::vector<std::string> out;
  const std::string stem = "f" + std::to_string(position);
  for (int i = 0; i < count; ++i) out.push_back(stem + std::string(1, static_cast<char>('a' + i)));
  return out;
}

// Every spec whose base and fibers come from the census on at most three
// elements, with the resolved ground set capped at max_z.
template <typename Fn>
void for_each_small_spec(int max_z, Fn&& fn) {
  for (int base_n = 1; base_n <= 3; ++base_n) {
    for (const auto& base : classes_of_size(base_n)) {
      std::vector<int> sizes(base_n, 1);
      while (true) {
        int total = 0;
        for (int s : sizes) total += s;
        if (total <= max_z) {
          std::vector<std::size_t> pick(base_n, 0);
          while (true) {
            std::vector<ConvexGeometry> fibers;
            for (int i = 0; i < base_n; ++i)
              fibers.push_back(
                  relabel(classes_of_size(sizes[i])[pick[i]], stem_labels(i, sizes[i])));
            fn(cvx::ResolutionSpec(base, std::move(fibers)));
            std::size_t i = 0;
            for (; i < static_cast<std::size_t>(base_n); ++i) {
              if (++pick[i] < classes_of_size(sizes[i]).size()) break;
              pick[i] = 0;
            }
            if (i == static_cast<std::size_t>(base_n)) break;
          }
        }
        int i = 0;
        for (; i < base_n; ++i) {
          if (++sizes[i] <= 3) break;
          sizes[i] = 1;
        }
        if (i == base_n) break;
      }
    }
  }
}

// Random geometry via a random walk over the complement family: masks in
// (size, value) order, unions of accepted sets forced in, otherwise a coin
// flip wherever accessibility allows one. Retries until the full set lands
// inside.
template <typename Rng>
ConvexGeometry random_geometry(int n, Rng& rng) {
  const Mask full = cvx::full_mask(n);
  std::vector<Mask> order;
  for (Mask m = 1; m <= full; ++m) order.push_back(m);
  std::sort(order.begin(), order.end(), [](Mask a, Mask b) {
    if (cvx::popcount(a) != cvx::popcount(b)) return cvx::popcount(a) < cvx::popcount(b);
    return a < b;
  });
  while (true) {
    std::vector<Mask> feasible = {0};
    std::vector<bool> in(static_cast<std::size_t>(1) << n, false);
    in[0] = true;
    for (Mask m : order) {
      bool forced = false;
      for (std::size_t i = 0; i < feasible.size() && !forced; ++i)
        for (std::size_t j = i + 1; j < feasible.size(); ++j)
          if ((feasible[i] | feasible[j]) == m) {
            forced = true;
            break;
          }
      bool accessible = false;
      for (int x : cvx::elements_of(m))
        if (in[m & ~cvx::bit(x)]) {
          accessible = true;
          break;
        }
      if (forced || (accessible && (rng() & 1))) {
        feasible.push_back(m);
        in[m] = true;
      }
    }
    if (!in[full]) continue;
    std::vector<Mask> convex;
    for (Mask f : feasible) convex.push_back(full & ~f);
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
    return ConvexGeometry::certify(SetFamily(GroundSet(labels), std::move(convex)));
  }
}

}  // namespace oracles
