#pragma once

#include <cstdint>
#include <vector>

#include "cvxgeo/affine.hpp"
#include "cvxgeo/geometry.hpp"

namespace cvx {

/// Isomorphism-invariant fingerprint: the mask list minimized over all
/// relabelings (n <= 8, by exhaustive permutation). Two geometries are
/// isomorphic iff their canonical forms are equal.
struct CanonicalForm {
  int n = 0;
  std::vector<Mask> masks;  // sorted ascending as integers

  bool operator==(const CanonicalForm& o) const { return n == o.n && masks == o.masks; }
  bool operator<(const CanonicalForm& o) const {
    if (n != o.n) return n < o.n;
    return masks < o.masks;
  }
};

CanonicalForm canonical_form(const ConvexGeometry& g);

/// Materializes a canonical form with labels "a", "b", "c", ...
ConvexGeometry geometry_from_canonical(const CanonicalForm& cf);

bool are_isomorphic(const ConvexGeometry& a, const ConvexGeometry& b);

/// Number of relabelings fixing the family.
int automorphism_count(const ConvexGeometry& g);

struct EnumerationResult {
  std::vector<CanonicalForm> classes;  // sorted
  std::uint64_t labeled_count = 0;     // labeled geometries visited by the generator
};

/// All isomorphism classes on n elements (1 <= n <= 5), generated as
/// union-closed accessible complement families by depth-first extension.
EnumerationResult enumerate_geometries(int n);

/// Independent oracle for n <= 4: tests every family of subsets of 2^X
/// (2^(2^n) candidates) against the axioms, then canonicalizes.
std::vector<CanonicalForm> enumerate_geometries_brute(int n);

/// Self-consistency audit of an enumeration run: every class is a valid
/// geometry, canonically stable, pairwise distinct, and the labeled count
/// matches the orbit-stabilizer sum of n!/|Aut|.
bool audit_enumeration(const EnumerationResult& result, int n);

enum class Tristate { False, True, Unknown };

struct CensusEntry {
  ConvexGeometry geometry;  // canonical labeling a, b, c, ...
  bool ordinal = false;
  bool atomistic = false;
  bool primitive = false;
  bool extremely_resolvable = false;
  Tristate affine = Tristate::Unknown;  // decided for n <= 4 only
  int shrinkable_count = 0;
};

/// Fills every flag; the affine flag is decided for n <= 4 by isomorphism
/// against the bundled reference point configurations.
CensusEntry classify(const ConvexGeometry& g);

/// Classified census of all classes on n elements, deterministic order.
/// `jobs` > 1 classifies entries in parallel; the merged output is identical.
std::vector<CensusEntry> census(int n, int jobs = 1);

/// Reference configurations whose induced geometries are the affine classes
/// on n points (available for n <= 4).
const std::vector<PointConfig>& affine_reference_configs(int n);

struct ResolvableNonOrdinal4 {
  int type_a = 0;  // base is the non-ordinal 3-class, fiber sizes 1,1,2
  int type_b = 0;  // two-element base, one fiber is the non-ordinal 3-class
  int total = 0;   // distinct classes across both types
};

/// Builds every nontrivial resolution on four elements with a non-ordinal
/// base or fiber and counts the distinct isomorphism classes per shape.
ResolvableNonOrdinal4 count_resolvable_nonordinal_4();

}  // namespace cvx
