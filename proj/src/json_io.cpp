#include "cvxgeo/json_io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <stdexcept>

namespace cvx::io {

namespace {

json mask_to_labels(const GroundSet& ground, Mask m) {
  json out = json::array();
  for (const auto& l : ground.labels_of(m)) out.push_back(l);
  return out;
}

std::vector<std::string> string_list(const json& j, const std::string& what) {
  if (!j.is_array()) throw std::invalid_argument(what + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& item : j) {
    if (!item.is_string()) throw std::invalid_argument(what + " must contain strings only");
    out.push_back(item.get<std::string>());
  }
  return out;
}

const json& require(const json& j, const char* key, const std::string& what) {
  auto it = j.find(key);
  if (it == j.end()) throw std::invalid_argument(what + ": missing \"" + key + "\"");
  return *it;
}

}  // namespace

json family_to_json(const SetFamily& f) {
  json j;
  j["format"] = 1;
  j["ground"] = json::array();
  for (const auto& l : f.ground().labels()) j["ground"].push_back(l);
  j["sets"] = json::array();
  for (Mask m : f.canonical_order()) j["sets"].push_back(mask_to_labels(f.ground(), m));
  return j;
}

SetFamily family_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("family: expected a JSON object");
  GroundSet ground(string_list(require(j, "ground", "family"), "family ground"));
  const json& sets = require(j, "sets", "family");
  if (!sets.is_array()) throw std::invalid_argument("family sets must be an array");
  std::vector<Mask> masks;
  for (const auto& s : sets) masks.push_back(ground.mask_of(string_list(s, "family set")));
  return SetFamily(std::move(ground), std::move(masks));
}

json geometry_to_json(const ConvexGeometry& g) { return family_to_json(g.family()); }

ConvexGeometry geometry_from_json(const json& j) {
  return ConvexGeometry::certify(family_from_json(j));
}

json spec_to_json(const ResolutionSpec& spec) {
  json j;
  j["format"] = 1;
  j["base"] = geometry_to_json(spec.base());
  j["fibers"] = json::object();
  for (int x = 0; x < spec.base().ground_size(); ++x)
    j["fibers"][spec.base().ground().label(x)] = geometry_to_json(spec.fiber(x));
  return j;
}

ResolutionSpec spec_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("resolution spec: expected a JSON object");
  ConvexGeometry base = geometry_from_json(require(j, "base", "resolution spec"));
  const json& fibers = require(j, "fibers", "resolution spec");
  if (!fibers.is_object())
    throw std::invalid_argument("resolution spec fibers must map base labels to geometries");
  for (auto it = fibers.begin(); it != fibers.end(); ++it)
    if (!base.ground().contains_label(it.key()))
      throw std::invalid_argument("fiber key \"" + it.key() + "\" is not a base element");
  std::vector<ConvexGeometry> fiber_list;
  for (int x = 0; x < base.ground_size(); ++x) {
    const std::string& label = base.ground().label(x);
    auto it = fibers.find(label);
    if (it == fibers.end())
      throw std::invalid_argument("missing fiber for base element \"" + label + "\"");
    fiber_list.push_back(geometry_from_json(*it));
  }
  return ResolutionSpec(std::move(base), std::move(fiber_list));
}

json poset_to_json(const Poset& p) {
  json j;
  j["format"] = 1;
  j["elements"] = json::array();
  for (const auto& l : p.ground().labels()) j["elements"].push_back(l);
  // Cover pairs only; readers re-close.
  j["leq"] = json::array();
  for (int i = 0; i < p.size(); ++i)
    for (int jx = 0; jx < p.size(); ++jx) {
      if (!p.less(i, jx)) continue;
      bool cover = true;
      for (int k = 0; k < p.size() && cover; ++k)
        if (k != i && k != jx && p.less(i, k) && p.less(k, jx)) cover = false;
      if (cover) j["leq"].push_back({p.ground().label(i), p.ground().label(jx)});
    }
  return j;
}

Poset poset_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("poset: expected a JSON object");
  GroundSet ground(string_list(require(j, "elements", "poset"), "poset elements"));
  const json& leq = require(j, "leq", "poset");
  if (!leq.is_array()) throw std::invalid_argument("poset leq must be an array of pairs");
  std::vector<std::pair<int, int>> pairs;
  for (const auto& item : leq) {
    const auto pair = string_list(item, "poset leq pair");
    if (pair.size() != 2) throw std::invalid_argument("poset leq entries must be pairs");
    pairs.emplace_back(ground.index_of(pair[0]), ground.index_of(pair[1]));
  }
  return Poset(std::move(ground), pairs);
}

json config_to_json(const PointConfig& cfg) {
  json j;
  j["format"] = 1;
  j["dim"] = cfg.dim();
  j["points"] = json::object();
  for (int i = 0; i < cfg.size(); ++i) {
    json coords = json::array();
    for (const auto& c : cfg.coords(i)) coords.push_back(rational_to_string(c));
    j["points"][cfg.ground().label(i)] = coords;
  }
  return j;
}

PointConfig config_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("point config: expected a JSON object");
  const json& dim_j = require(j, "dim", "point config");
  if (!dim_j.is_number_integer() || dim_j.get<int>() < 1)
    throw std::invalid_argument("point config dim must be a positive integer");
  const int dim = dim_j.get<int>();
  const json& points = require(j, "points", "point config");
  if (!points.is_object() || points.empty())
    throw std::invalid_argument("point config needs a nonempty points object");
  // Object keys arrive alphabetically; that ordering defines the element order.
  std::vector<std::string> labels;
  std::vector<RatVec> coords;
  for (auto it = points.begin(); it != points.end(); ++it) {
    labels.push_back(it.key());
    RatVec v;
    for (const auto& c : string_list(*it, "coordinates of " + it.key()))
      v.push_back(parse_rational(c));
    coords.push_back(std::move(v));
  }
  return PointConfig(GroundSet(std::move(labels)), dim, std::move(coords));
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
  return j;
}

void save_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << dump(j);
}

}  // namespace cvx::io
