#include "cvxgeo/resolution.hpp"

#include <algorithm>
#include <stdexcept>

namespace cvx {

GroundSet ResolutionSpec::build_ground(const ConvexGeometry& base,
                                       const std::vector<ConvexGeometry>& fibers) {
  std::vector<const GroundSet*> grounds;
  grounds.reserve(fibers.size());
  for (const auto& f : fibers) grounds.push_back(&f.ground());
  return fiber_union_ground(base.ground(), grounds);
}

ResolutionSpec::ResolutionSpec(ConvexGeometry base, std::vector<ConvexGeometry> fibers)
    : base_(std::move(base)),
      fibers_(std::move(fibers)),
      ground_(build_ground(base_, fibers_)) {
  fiber_offset_.resize(fibers_.size());
  fiber_masks_.resize(fibers_.size());
  int offset = 0;
  for (int x = 0; x < base_.ground_size(); ++x) {
    const int size = fibers_[x].ground_size();
    fiber_offset_[x] = offset;
    fiber_masks_[x] = full_mask(size) << offset;
    for (int i = 0; i < size; ++i) project_.push_back(x);
    offset += size;
  }
}

Mask ResolutionSpec::project_mask(Mask a) const {
  Mask out = 0;
  for (int z : elements_of(a)) out |= bit(project_[z]);
  return out;
}

Mask ResolutionSpec::lift(int base_elem, Mask fiber_local) const {
  return fiber_local << fiber_offset_[base_elem];
}

Mask ResolutionSpec::trace(int base_elem, Mask a) const {
  return (a & fiber_masks_[base_elem]) >> fiber_offset_[base_elem];
}

bool ResolutionSpec::is_nontrivial() const {
  if (base_.ground_size() < 2) return false;
  for (const auto& f : fibers_)
    if (f.ground_size() > 1) return true;
  return false;
}

namespace {

// Shared generator: one candidate per (base member G, per-element trace
// choice). Elements of G in `free_of(G)` may take any nonempty fiber member;
// the rest of G take the whole fiber. Projections determine G uniquely, so
// no candidate appears twice.
template <typename FreeFn>
std::vector<Mask> generate(const ResolutionSpec& spec, FreeFn&& free_of) {
  std::vector<Mask> out;
  for (Mask g : spec.base().sets()) {
    const Mask free = free_of(g);
    std::vector<int> elems = elements_of(g);
    std::vector<std::vector<Mask>> options;
    options.reserve(elems.size());
    for (int x : elems) {
      std::vector<Mask> opts;
      if (has(free, x)) {
        for (Mask t : spec.fiber(x).sets())
          if (t != 0) opts.push_back(spec.lift(x, t));
      } else {
        opts.push_back(spec.fiber_mask(x));
      }
      options.push_back(std::move(opts));
    }
    // Cartesian product over per-element trace options.
    std::vector<std::size_t> pick(options.size(), 0);
    while (true) {
      Mask a = 0;
      for (std::size_t i = 0; i < options.size(); ++i) a |= options[i][pick[i]];
      out.push_back(a);
      std::size_t i = 0;
      for (; i < options.size(); ++i) {
        if (++pick[i] < options[i].size()) break;
        pick[i] = 0;
      }
      if (i == options.size()) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ConvexGeometry resolve(const ResolutionSpec& spec) {
  auto sets = generate(spec, [&](Mask g) { return extreme(spec.base(), g); });
  return ConvexGeometry::certify(SetFamily(spec.resolved_ground(), std::move(sets)));
}

SetFamily compose(const ResolutionSpec& spec) {
  auto sets = generate(spec, [](Mask g) { return g; });
  return SetFamily(spec.resolved_ground(), std::move(sets));
}

Mask resolved_conv(const ResolutionSpec& spec, Mask a) {
  const Mask pa = spec.project_mask(a);
  const Mask ex = extreme(spec.base(), pa);
  const Mask hull = conv(spec.base(), pa);
  Mask out = 0;
  for (int x : elements_of(ex)) out |= spec.lift(x, conv(spec.fiber(x), spec.trace(x, a)));
  for (int x : elements_of(hull & ~ex)) out |= spec.fiber_mask(x);
  return out;
}

Mask resolved_extreme(const ResolutionSpec& spec, Mask a) {
  const Mask ex = extreme(spec.base(), spec.project_mask(a));
  Mask out = 0;
  for (int x : elements_of(ex)) out |= spec.lift(x, extreme(spec.fiber(x), spec.trace(x, a)));
  return out;
}

bool is_extreme_resolution(const ResolutionSpec& spec) {
  const Mask ex = extreme(spec.base(), spec.base().full());
  for (int x = 0; x < spec.base().ground_size(); ++x)
    if (!has(ex, x) && spec.fiber(x).ground_size() > 1) return false;
  return true;
}

bool check_extreme_composition_equality(const ResolutionSpec& spec) {
  const bool equal = resolve(spec).family() == compose(spec);
  if (equal != is_extreme_resolution(spec))
    throw std::logic_error(
        "resolution/composition equality disagrees with extremeness of the spec");
  return equal;
}

}  // namespace cvx
