#pragma once

#include <nlohmann/json_fwd.hpp>

#include <string>

#include "cvxgeo/affine.hpp"
#include "cvxgeo/poset.hpp"
#include "cvxgeo/resolution.hpp"

// Stable JSON formats. Writers always emit the normalized form (sorted keys,
// sets ordered by size then element sequence, "format": 1); readers accept
// unsorted input and normalize.
namespace cvx::io {

using json = nlohmann::json;

json family_to_json(const SetFamily& f);
SetFamily family_from_json(const json& j);

json geometry_to_json(const ConvexGeometry& g);
/// Reads and certifies; throws std::invalid_argument with the axiom report
/// when the family is not a convex geometry.
ConvexGeometry geometry_from_json(const json& j);

json spec_to_json(const ResolutionSpec& spec);
ResolutionSpec spec_from_json(const json& j);

json poset_to_json(const Poset& p);
Poset poset_from_json(const json& j);

json config_to_json(const PointConfig& cfg);
PointConfig config_from_json(const json& j);

/// Normalized serialization: two-space indent, sorted keys, trailing newline.
/// Golden files depend on this being byte-stable.
std::string dump(const json& j);

json load_file(const std::string& path);
void save_file(const std::string& path, const json& j);

}  // namespace cvx::io
