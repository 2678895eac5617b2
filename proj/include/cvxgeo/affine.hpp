#pragma once

#include <array>
#include <string>
#include <vector>

#include "cvxgeo/rational.hpp"
#include "cvxgeo/resolution.hpp"

namespace cvx {

/// Labeled points with exact rational coordinates in dimension d >= 1.
/// Points must be pairwise distinct.
class PointConfig {
 public:
  PointConfig(GroundSet ground, int dim, std::vector<RatVec> coords);

  const GroundSet& ground() const { return ground_; }
  int size() const { return ground_.size(); }
  int dim() const { return dim_; }
  const RatVec& coords(int i) const { return coords_[i]; }

 private:
  GroundSet ground_;
  int dim_;
  std::vector<RatVec> coords_;
};

/// Geometry induced by ambient convexity: the sets G whose real hull catches
/// no point outside G. Exact arithmetic throughout; configs above 16 points
/// are rejected.
ConvexGeometry induced_geometry(const PointConfig& cfg);

/// Exact membership of point p in the real hull of the points of a, decided
/// by scanning affinely independent subsets of at most dim+1 points and
/// testing barycentric signs.
bool point_in_hull(const PointConfig& cfg, int p, Mask a);

struct ExchangeWitness {
  Mask a = 0;
  int p = -1;
};

/// Exchange property: whenever p lies in conv(A), the hull is covered by the
/// hulls of A with one element swapped for p. First violating (A, p) pair is
/// reported.
bool has_exchange_property(const ConvexGeometry& g, ExchangeWitness* witness = nullptr);

/// All traces on the configuration of unions of proper faces of the hull
/// polytope, in canonical order. Faces are enumerated exactly via supporting
/// hyperplanes inside the affine span of the configuration.
std::vector<Mask> face_trace_sets(const PointConfig& cfg);

/// One betweenness pattern that no affinely embedded geometry can exhibit.
/// O1 on (a,d | b,c): b and c both inside conv({a,d}) yet neither between a
/// and the other. O2 on (a,b | c,d): b inside conv({a,c}) and conv({a,d})
/// yet neither c nor d between b and the other.
struct ObstructionFinding {
  std::string kind;            // "O1" or "O2"
  std::array<int, 4> elems{};  // O1: a,d,b,c; O2: a,b,c,d
  std::string describe(const GroundSet& ground) const;
};

/// Scans all element tuples for the two obstruction patterns. An empty list
/// is necessary but not sufficient for affineness.
std::vector<ObstructionFinding> affine_obstructions(const ConvexGeometry& g);

/// For every minimal dependence p in conv({p_1..p_m}) of the base and every
/// transversal choice q_i in the fibers over the p_i, verifies that each
/// fiber over a p_i lies in the affine span of the q_i. Requires the induced
/// geometry of cfg to equal resolve(spec). Expected true for every affine
/// resolution; a violation is reported through `witness`.
bool fiber_subspace_check(const ResolutionSpec& spec, const PointConfig& cfg,
                          std::string* witness = nullptr);

}  // namespace cvx
