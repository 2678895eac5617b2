#pragma once

#include <unordered_set>
#include <vector>

#include "cvxgeo/ground_set.hpp"
#include "cvxgeo/mask.hpp"

namespace cvx {

/// Collection of subsets of a ground set. Masks are kept strictly sorted as
/// integers for iteration plus a hash index for O(1) membership.
class SetFamily {
 public:
  SetFamily(GroundSet ground, std::vector<Mask> sets);

  const GroundSet& ground() const { return ground_; }
  const std::vector<Mask>& sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }

  bool contains(Mask m) const { return index_.count(m) != 0; }

  /// Members reordered canonically (by size, then element sequence); this is
  /// the order used for serialized output and witness scans.
  std::vector<Mask> canonical_order() const;

  bool operator==(const SetFamily& other) const {
    return ground_ == other.ground_ && sets_ == other.sets_;
  }

 private:
  GroundSet ground_;
  std::vector<Mask> sets_;
  std::unordered_set<Mask> index_;
};

}  // namespace cvx
