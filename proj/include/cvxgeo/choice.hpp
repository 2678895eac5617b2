#pragma once

#include <cstddef>
#include <vector>

#include "cvxgeo/geometry.hpp"

namespace cvx {

/// Fully tabulated choice function: one chosen subset per subset of the
/// ground set, indexed by mask. Validated at construction:
/// c(A) is a subset of A, nonempty for nonempty A, and c(empty) = empty.
class ChoiceFunction {
 public:
  ChoiceFunction(GroundSet ground, std::vector<Mask> table);

  const GroundSet& ground() const { return ground_; }
  Mask operator()(Mask a) const { return table_[static_cast<std::size_t>(a)]; }
  const std::vector<Mask>& table() const { return table_; }

  bool operator==(const ChoiceFunction& other) const {
    return ground_ == other.ground_ && table_ == other.table_;
  }

 private:
  GroundSet ground_;
  std::vector<Mask> table_;
};

/// Tabulates the extreme operator over all subsets. Ground sets above
/// 20 elements are rejected (the table has 2^n entries).
ChoiceFunction extreme_as_choice(const ConvexGeometry& g);

struct PathIndependenceWitness {
  Mask a = 0, b = 0;  // first pair with c(a|b) != c(c(a)|c(b))
};

/// Checks c(A u B) = c(c(A) u c(B)) over all ordered pairs; on failure the
/// first violating pair in canonical order is reported.
bool is_path_independent(const ChoiceFunction& c,
                         PathIndependenceWitness* witness = nullptr);

/// The unique geometry whose extreme operator is c: members are the sets G
/// such that c(A) = c(G) forces A inside G. Rejects non-path-independent
/// input with the violating pair in the exception text.
ConvexGeometry geometry_from_choice(const ChoiceFunction& c);

}  // namespace cvx
