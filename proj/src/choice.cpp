#include "cvxgeo/choice.hpp"

#include <algorithm>
#include <stdexcept>

namespace cvx {

namespace {

constexpr int kMaxChoiceGround = 20;  // table has 2^n entries

std::vector<Mask> all_masks_canonical(int n) {
  std::vector<Mask> out(static_cast<std::size_t>(1) << n);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Mask>(i);
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

}  // namespace

ChoiceFunction::ChoiceFunction(GroundSet ground, std::vector<Mask> table)
    : ground_(std::move(ground)), table_(std::move(table)) {
  if (ground_.size() > kMaxChoiceGround)
    throw std::invalid_argument("choice tables are limited to 20 elements");
  const std::size_t want = static_cast<std::size_t>(1) << ground_.size();
  if (table_.size() != want)
    throw std::invalid_argument("choice table must cover every subset");
  for (std::size_t a = 0; a < want; ++a) {
    if (!subset(table_[a], static_cast<Mask>(a)))
      throw std::invalid_argument("choice must pick inside its menu at " +
                                  ground_.to_string(static_cast<Mask>(a)));
    if (a != 0 && table_[a] == 0)
      throw std::invalid_argument("choice must be nonempty on nonempty menu " +
                                  ground_.to_string(static_cast<Mask>(a)));
  }
  if (table_[0] != 0) throw std::invalid_argument("choice on the empty set must be empty");
}

ChoiceFunction extreme_as_choice(const ConvexGeometry& g) {
  if (g.ground_size() > kMaxChoiceGround)
    throw std::invalid_argument("extreme_as_choice: ground set too large to tabulate");
  const std::size_t count = static_cast<std::size_t>(1) << g.ground_size();
  std::vector<Mask> table(count);
  for (std::size_t a = 0; a < count; ++a) table[a] = extreme(g, static_cast<Mask>(a));
  return ChoiceFunction(g.ground(), std::move(table));
}

bool is_path_independent(const ChoiceFunction& c, PathIndependenceWitness* witness) {
  const auto order = all_masks_canonical(c.ground().size());
  for (Mask a : order)
    for (Mask b : order) {
      if (c(a | b) != c(c(a) | c(b))) {
        if (witness) *witness = {a, b};
        return false;
      }
    }
  return true;
}

ConvexGeometry geometry_from_choice(const ChoiceFunction& c) {
  PathIndependenceWitness w;
  if (!is_path_independent(c, &w))
    throw std::invalid_argument("choice is not path independent: c(A u B) != c(c(A) u c(B)) for A=" +
                                c.ground().to_string(w.a) + ", B=" + c.ground().to_string(w.b));
  const std::size_t count = static_cast<std::size_t>(1) << c.ground().size();
  std::vector<Mask> members;
  for (std::size_t g = 0; g < count; ++g) {
    const Mask cg = c(static_cast<Mask>(g));
    bool keep = true;
    for (std::size_t a = 0; a < count && keep; ++a)
      if (c(static_cast<Mask>(a)) == cg && !subset(static_cast<Mask>(a), static_cast<Mask>(g)))
        keep = false;
    if (keep) members.push_back(static_cast<Mask>(g));
  }
  return ConvexGeometry::certify(SetFamily(c.ground(), std::move(members)));
}

}  // namespace cvx
