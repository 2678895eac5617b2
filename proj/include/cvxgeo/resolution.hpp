#pragma once

#include <string>
#include <vector>

#include "cvxgeo/geometry.hpp"

namespace cvx {

/// A base geometry on X plus one fiber geometry per base element. The
/// resolved ground set Z concatenates the fibers in base-element order; the
/// projection sends each fiber element to its base element.
///
/// Fiber labels must be pairwise distinct across fibers; when they are not,
/// every fiber element is requalified as "<base>.<fiber>" so that Z is
/// reproducible.
class ResolutionSpec {
 public:
  ResolutionSpec(ConvexGeometry base, std::vector<ConvexGeometry> fibers);

  const ConvexGeometry& base() const { return base_; }
  const ConvexGeometry& fiber(int base_elem) const { return fibers_[base_elem]; }
  const std::vector<ConvexGeometry>& fibers() const { return fibers_; }

  const GroundSet& resolved_ground() const { return ground_; }
  int resolved_size() const { return ground_.size(); }

  /// Base element owning resolved element z.
  int project(int z) const { return project_[z]; }
  /// Projection of a subset of Z onto the base ground set.
  Mask project_mask(Mask a) const;
  /// All of fiber Y_x as a mask over Z.
  Mask fiber_mask(int base_elem) const { return fiber_masks_[base_elem]; }
  /// Lifts a fiber-local mask into Z coordinates.
  Mask lift(int base_elem, Mask fiber_local) const;
  /// Restricts a Z-mask to fiber coordinates.
  Mask trace(int base_elem, Mask a) const;

  /// Base and at least one fiber have more than one element.
  bool is_nontrivial() const;

 private:
  ConvexGeometry base_;
  std::vector<ConvexGeometry> fibers_;
  GroundSet ground_;                 // Z
  std::vector<int> project_;         // Z index -> base index
  std::vector<int> fiber_offset_;    // base index -> first Z bit of its fiber
  std::vector<Mask> fiber_masks_;    // base index -> fiber as Z-mask

  static GroundSet build_ground(const ConvexGeometry& base,
                                const std::vector<ConvexGeometry>& fibers);
};

/// The resolution: all subsets of Z whose projection is convex in the base
/// (R1), whose fiber traces are convex in their fibers (R2), and which
/// swallow the whole fiber over every non-extreme element of the projection
/// (R3). Always a convex geometry; certified before returning.
ConvexGeometry resolve(const ResolutionSpec& spec);

/// Same construction without R3. May fail the geometry axioms, so the raw
/// family is returned; validate it separately if needed.
SetFamily compose(const ResolutionSpec& spec);

/// Closed-form hull in the resolution: fiber hulls over base-extreme
/// projected elements plus whole fibers over the rest of the base hull.
/// Agrees pointwise with conv(resolve(spec), a).
Mask resolved_conv(const ResolutionSpec& spec, Mask a);

/// Closed-form extreme set: union of fiber-extreme traces over base-extreme
/// projected elements. Agrees pointwise with extreme(resolve(spec), a).
Mask resolved_extreme(const ResolutionSpec& spec, Mask a);

/// Every non-extreme base element carries a singleton fiber.
bool is_extreme_resolution(const ResolutionSpec& spec);

/// Whether resolution and composition coincide as families; equivalent to
/// is_extreme_resolution (checked, a mismatch throws).
bool check_extreme_composition_equality(const ResolutionSpec& spec);

}  // namespace cvx
