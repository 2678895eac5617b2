#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cvxgeo/family.hpp"

namespace cvx {

/// One failed axiom with its first witness in canonical order.
struct AxiomViolation {
  std::string axiom;           // "G1", "G2" or "G3"
  std::string message;
  std::vector<Mask> witness;   // G1: empty; G2: the pair {F,G}; G3: the stuck member
};

struct ValidationReport {
  std::vector<AxiomViolation> violations;
  bool ok() const { return violations.empty(); }
  std::string to_string(const GroundSet& ground) const;
};

/// A set family certified against the convex-geometry axioms:
/// contains the empty set, closed under pairwise intersection, and every
/// member other than the full set extends by one element inside the family.
/// Instances are immutable; all operations are pure.
class ConvexGeometry {
 public:
  /// Checks the axioms; on failure fills `report` (if given) with one witness
  /// per failed axiom and returns nullopt.
  static std::optional<ConvexGeometry> validate(SetFamily family,
                                                ValidationReport* report = nullptr);

  /// Validating constructor; throws std::invalid_argument with the report text.
  static ConvexGeometry certify(SetFamily family);

  const SetFamily& family() const { return family_; }
  const GroundSet& ground() const { return family_.ground(); }
  int ground_size() const { return family_.ground().size(); }
  Mask full() const { return family_.ground().full(); }
  bool contains(Mask m) const { return family_.contains(m); }
  const std::vector<Mask>& sets() const { return family_.sets(); }

  bool operator==(const ConvexGeometry& other) const { return family_ == other.family_; }

 private:
  explicit ConvexGeometry(SetFamily family) : family_(std::move(family)) {}
  SetFamily family_;
};

/// Smallest member containing `a`: the intersection of all members above `a`.
Mask conv(const ConvexGeometry& g, Mask a);

/// Elements p of `a` with p outside conv(a minus p). Nonempty whenever a is.
Mask extreme(const ConvexGeometry& g, Mask a);

/// True iff some member G holds a\{p} while excluding p; returns the first
/// such witness in canonical order. Requires p in a.
bool is_extreme_in(const ConvexGeometry& g, int p, Mask a, Mask* witness = nullptr);

/// Geometry induced on the nonempty subset s: traces of all members on s,
/// re-indexed over the elements of s (labels preserved).
ConvexGeometry induced_subgeometry(const ConvexGeometry& g, Mask s);

/// True iff the union of every pair of members is a member.
bool is_union_closed(const ConvexGeometry& g);

/// True iff every singleton is a member.
bool is_atomistic(const ConvexGeometry& g);

/// Equality as named geometries: same label set (order may differ) and the
/// label bijection carries one family onto the other.
bool same_geometry(const ConvexGeometry& a, const ConvexGeometry& b);

}  // namespace cvx
