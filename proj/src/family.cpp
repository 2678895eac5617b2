#include "cvxgeo/family.hpp"

#include <algorithm>
#include <stdexcept>

namespace cvx {

SetFamily::SetFamily(GroundSet ground, std::vector<Mask> sets)
    : ground_(std::move(ground)), sets_(std::move(sets)) {
  std::sort(sets_.begin(), sets_.end());
  sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
  for (Mask m : sets_) {
    if (!ground_.valid(m))
      throw std::invalid_argument("set family contains a mask outside its ground set");
  }
  index_.insert(sets_.begin(), sets_.end());
}

std::vector<Mask> SetFamily::canonical_order() const {
  std::vector<Mask> out = sets_;
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

}  // namespace cvx
