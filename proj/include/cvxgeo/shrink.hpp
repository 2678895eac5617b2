#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cvxgeo/resolution.hpp"

namespace cvx {

/// Three-valued outcome: the shrinkability properties are defined only for
/// candidate sets S with 1 < |S| < |Z|; outside that window every property
/// reports NotApplicable.
enum class Verdict { NotApplicable, Holds, Fails };

struct PropertyCheck {
  Verdict verdict = Verdict::NotApplicable;
  std::vector<Mask> witness;  // violating sets, property-specific (G; G,H; or A)

  bool holds() const { return verdict == Verdict::Holds; }
  bool fails() const { return verdict == Verdict::Fails; }
};

/// S1: removing S from any member that does not absorb S stays convex.
/// S2: members split by S accept any other member's trace on S.
struct SCheck {
  PropertyCheck s1, s2;
};

/// Choice-theoretic characterization quantified over all subsets A.
struct TCheck {
  PropertyCheck t1, t2, t3;
};

/// V1: a member meeting S in one point absorbs S convexly.
/// V2: the complement of S plus any member's trace on S is convex.
struct VCheck {
  PropertyCheck v1, v2;
};

struct ShrinkReport {
  Mask subject = 0;
  SCheck s;
  TCheck t;
  VCheck v;
  bool shrinkable = false;            // S1 and S2 (cross-checked against T1-T3)
  bool extremely_shrinkable = false;  // shrinkable and Z\S convex (= V1 and V2)
};

SCheck check_S(const ConvexGeometry& g, Mask s);
TCheck check_T(const ConvexGeometry& g, Mask s);
VCheck check_V(const ConvexGeometry& g, Mask s);

/// Full verdict sheet for one candidate set; asserts the cross-checks
/// (S1^S2 == T1^T2^T3, V1^V2 == shrinkable ^ complement-convex).
ShrinkReport shrink_report(const ConvexGeometry& g, Mask s);

/// Verdict sheets for every candidate set in the window, canonical order.
/// Tabulates the extreme operator once and shares it across candidates.
std::vector<ShrinkReport> shrink_table(const ConvexGeometry& g);

/// All shrinkable sets, in canonical order.
std::vector<Mask> shrinkable_sets(const ConvexGeometry& g);

/// No shrinkable set exists.
bool is_primitive(const ConvexGeometry& g);

bool is_extremely_shrinkable(const ConvexGeometry& g, Mask s);

/// Rewrites g as a resolution whose unique nontrivial fiber is s: the base
/// merges s into one element (named by joining the labels of s with '+'),
/// all other fibers are singletons. Requires s shrinkable; the failing
/// S-property witness is reported otherwise. resolve() of the result equals
/// g up to ground-set reordering (asserted).
ResolutionSpec deresolve(const ConvexGeometry& g, Mask s);

}  // namespace cvx
