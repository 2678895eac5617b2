#include "cvxgeo/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace cvx {

std::string ValidationReport::to_string(const GroundSet& ground) const {
  if (violations.empty()) return "valid convex geometry";
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += v.axiom + ": " + v.message;
    for (Mask w : v.witness) out += " " + ground.to_string(w);
  }
  return out;
}

std::optional<ConvexGeometry> ConvexGeometry::validate(SetFamily family,
                                                       ValidationReport* report) {
  ValidationReport local;
  const auto ordered = family.canonical_order();

  if (!family.contains(0))
    local.violations.push_back({"G1", "empty set missing", {}});

  // G2: first pair (canonical order) whose intersection escapes the family.
  [&] {
    for (std::size_t i = 0; i < ordered.size(); ++i)
      for (std::size_t j = i + 1; j < ordered.size(); ++j) {
        const Mask meet = ordered[i] & ordered[j];
        if (!family.contains(meet)) {
          local.violations.push_back({"G2",
                                      "intersection " + family.ground().to_string(meet) +
                                          " missing for members",
                                      {ordered[i], ordered[j]}});
          return;
        }
      }
  }();

  // G3: first member (canonical order) with no one-element extension.
  const Mask full = family.ground().full();
  for (Mask g : ordered) {
    if (g == full) continue;
    bool upgradable = false;
    for (int x = 0; x < family.ground().size() && !upgradable; ++x)
      if (!has(g, x) && family.contains(g | bit(x))) upgradable = true;
    if (!upgradable) {
      local.violations.push_back({"G3", "member has no one-element extension", {g}});
      break;
    }
  }

  if (!local.ok()) {
    if (report) *report = std::move(local);
    return std::nullopt;
  }
  return ConvexGeometry(std::move(family));
}

ConvexGeometry ConvexGeometry::certify(SetFamily family) {
  ValidationReport report;
  const GroundSet ground = family.ground();
  auto g = validate(std::move(family), &report);
  if (!g) throw std::invalid_argument("not a convex geometry: " + report.to_string(ground));
  return *std::move(g);
}

Mask conv(const ConvexGeometry& g, Mask a) {
  Mask r = g.full();
  for (Mask m : g.sets())
    if (subset(a, m)) r &= m;
  return r;
}

Mask extreme(const ConvexGeometry& g, Mask a) {
  Mask r = 0;
  for (int p : elements_of(a))
    if (!has(conv(g, a & ~bit(p)), p)) r |= bit(p);
  return r;
}

bool is_extreme_in(const ConvexGeometry& g, int p, Mask a, Mask* witness) {
  if (!has(a, p)) throw std::invalid_argument("is_extreme_in: element not in the set");
  const Mask rest = a & ~bit(p);
  for (Mask m : g.family().canonical_order()) {
    if (subset(rest, m) && !has(m, p)) {
      if (witness) *witness = m;
      return true;
    }
  }
  return false;
}

ConvexGeometry induced_subgeometry(const ConvexGeometry& g, Mask s) {
  if (s == 0) throw std::invalid_argument("induced_subgeometry: empty subset");
  const auto idx = elements_of(s);
  GroundSet sub(g.ground().labels_of(s));
  std::vector<Mask> traces;
  traces.reserve(g.sets().size());
  for (Mask m : g.sets()) {
    Mask t = 0;
    for (std::size_t i = 0; i < idx.size(); ++i)
      if (has(m, idx[i])) t |= bit(static_cast<int>(i));
    traces.push_back(t);
  }
  return ConvexGeometry::certify(SetFamily(std::move(sub), std::move(traces)));
}

bool is_union_closed(const ConvexGeometry& g) {
  const auto& sets = g.sets();
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if (!g.contains(sets[i] | sets[j])) return false;
  return true;
}

bool is_atomistic(const ConvexGeometry& g) {
  for (int x = 0; x < g.ground_size(); ++x)
    if (!g.contains(bit(x))) return false;
  return true;
}

bool same_geometry(const ConvexGeometry& a, const ConvexGeometry& b) {
  if (a.ground_size() != b.ground_size()) return false;
  std::vector<int> to_b(a.ground_size());
  for (int i = 0; i < a.ground_size(); ++i) {
    if (!b.ground().contains_label(a.ground().label(i))) return false;
    to_b[i] = b.ground().index_of(a.ground().label(i));
  }
  if (a.sets().size() != b.sets().size()) return false;
  std::vector<Mask> mapped;
  mapped.reserve(a.sets().size());
  for (Mask m : a.sets()) {
    Mask t = 0;
    for (int i : elements_of(m)) t |= bit(to_b[i]);
    mapped.push_back(t);
  }
  std::sort(mapped.begin(), mapped.end());
  return mapped == b.sets();
}

}  // namespace cvx
