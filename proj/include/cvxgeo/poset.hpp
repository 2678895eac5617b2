#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cvxgeo/geometry.hpp"

namespace cvx {

/// Finite poset stored as a comparability matrix (one up-set mask per
/// element). Construction takes an arbitrary pair list, applies the
/// reflexive-transitive closure, and rejects cycles with a witness.
class Poset {
 public:
  /// `pairs` are (i, j) meaning i <= j; closure is applied.
  Poset(GroundSet ground, const std::vector<std::pair<int, int>>& pairs);

  const GroundSet& ground() const { return ground_; }
  int size() const { return ground_.size(); }

  bool leq(int i, int j) const { return has(up_[i], j); }
  bool less(int i, int j) const { return i != j && leq(i, j); }
  /// Elements j with i <= j.
  Mask up_set(int i) const { return up_[i]; }
  /// Elements i with i <= j.
  Mask down_set(int j) const { return down_[j]; }

  bool operator==(const Poset& other) const {
    return ground_ == other.ground_ && up_ == other.up_;
  }

 private:
  GroundSet ground_;
  std::vector<Mask> up_;
  std::vector<Mask> down_;
};

/// All ideals (down-closed sets) of p, certified as a convex geometry.
/// Union-closed by construction. Ground sets above 20 elements are rejected.
ConvexGeometry ideals(const Poset& p);

/// The unique poset whose ideals are g: x <= y iff x lies in conv({y}).
/// Requires g union-closed (throws otherwise).
Poset associated_order(const ConvexGeometry& g);

/// Non-dominated elements of a.
Mask max_elements(const Poset& p, Mask a);

/// Lexicographic sum: inside a fiber the fiber order decides, across fibers
/// the base order does. Fiber labels follow the same qualification scheme as
/// resolutions so the ground sets line up in cross-checks.
Poset lex_sum(const Poset& base, const std::vector<Poset>& fibers);

/// All S with 1 < |S| < n whose members relate identically to every outside
/// element, in canonical order.
std::vector<Mask> autonomous_sets(const Poset& p);

/// No autonomous set exists.
bool is_primitive_poset(const Poset& p);

/// All posets on n elements up to isomorphism (n <= 5), labels "a", "b", ...
/// Used to cross-check the ordinal slice of the geometry census.
std::vector<Poset> enumerate_posets(int n);

}  // namespace cvx
