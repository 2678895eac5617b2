#include "cvxgeo/shrink.hpp"

#include <algorithm>
#include <stdexcept>

namespace cvx {

namespace {

bool in_window(const ConvexGeometry& g, Mask s) {
  const int k = popcount(s);
  return k > 1 && k < g.ground_size();
}

std::vector<Mask> all_subsets_canonical(int n) {
  if (n > 20)
    throw std::invalid_argument("exhaustive subset scans are limited to 20 elements");
  std::vector<Mask> out(static_cast<std::size_t>(1) << n);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Mask>(i);
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

// Extreme operator tabulated over every subset. One family pass per subset;
// the T-checks then run on lookups alone.
std::vector<Mask> tabulate_extreme(const ConvexGeometry& g) {
  const int n = g.ground_size();
  if (n > 20)
    throw std::invalid_argument("exhaustive subset scans are limited to 20 elements");
  const std::size_t count = std::size_t{1} << n;
  std::vector<Mask> hull(count);
  for (std::size_t a = 0; a < count; ++a) {
    Mask r = g.full();
    for (Mask m : g.sets())
      if (subset(static_cast<Mask>(a), m)) r &= m;
    hull[a] = r;
  }
  std::vector<Mask> ex(count);
  for (std::size_t a = 0; a < count; ++a) {
    Mask r = 0;
    for (int p : elements_of(static_cast<Mask>(a)))
      if (!has(hull[a & ~bit(p)], p)) r |= bit(p);
    ex[a] = r;
  }
  return ex;
}

TCheck check_T_tabulated(const ConvexGeometry& g, Mask s, const std::vector<Mask>& ex) {
  TCheck out;
  if (!in_window(g, s)) return out;
  out.t1.verdict = out.t2.verdict = out.t3.verdict = Verdict::Holds;

  for (Mask a : all_subsets_canonical(g.ground_size())) {
    const Mask ex_a = ex[a];
    if (out.t1.holds() && (ex_a & s) != 0) {
      if (!subset(ex[a & s], ex_a)) out.t1 = {Verdict::Fails, {a}};
    }
    if ((a & s) != 0) {
      const Mask ex_as = ex[a | s];
      if (out.t2.holds() && !subset(ex_a & ~s, ex_as)) out.t2 = {Verdict::Fails, {a}};
      if (out.t3.holds() && (ex_as & s) != 0 && (ex_a & s) == 0)
        out.t3 = {Verdict::Fails, {a}};
    }
    if (out.t1.fails() && out.t2.fails() && out.t3.fails()) break;
  }

  if (is_atomistic(g) && out.t1.holds() && out.t3.fails())
    throw std::logic_error("T1 must imply T3 on an atomistic geometry");
  return out;
}

ShrinkReport shrink_report_tabulated(const ConvexGeometry& g, Mask s,
                                     const std::vector<Mask>& ex) {
  ShrinkReport r;
  r.subject = s;
  r.s = check_S(g, s);
  r.t = check_T_tabulated(g, s, ex);
  r.v = check_V(g, s);
  if (!in_window(g, s)) return r;

  r.shrinkable = r.s.s1.holds() && r.s.s2.holds();
  const bool by_t = r.t.t1.holds() && r.t.t2.holds() && r.t.t3.holds();
  if (r.shrinkable != by_t)
    throw std::logic_error("S1^S2 and T1^T2^T3 disagree on " + g.ground().to_string(s));

  r.extremely_shrinkable = r.shrinkable && g.contains(g.full() & ~s);
  const bool by_v = r.v.v1.holds() && r.v.v2.holds();
  if (r.extremely_shrinkable != by_v)
    throw std::logic_error("V1^V2 disagrees with extreme shrinkability on " +
                           g.ground().to_string(s));
  return r;
}

}  // namespace

SCheck check_S(const ConvexGeometry& g, Mask s) {
  SCheck out;
  if (!in_window(g, s)) return out;
  const auto members = g.family().canonical_order();

  out.s1.verdict = Verdict::Holds;
  for (Mask m : members) {
    if ((m & s) != s && !g.contains(m & ~s)) {
      out.s1 = {Verdict::Fails, {m}};
      break;
    }
  }

  out.s2.verdict = Verdict::Holds;
  for (Mask m : members) {
    if ((m & s) == 0 || !g.contains(m & ~s)) continue;
    bool broke = false;
    for (Mask h : members) {
      if (!g.contains((m & ~s) | (h & s))) {
        out.s2 = {Verdict::Fails, {m, h}};
        broke = true;
        break;
      }
    }
    if (broke) break;
  }
  return out;
}

TCheck check_T(const ConvexGeometry& g, Mask s) {
  if (!in_window(g, s)) return {};
  return check_T_tabulated(g, s, tabulate_extreme(g));
}

VCheck check_V(const ConvexGeometry& g, Mask s) {
  VCheck out;
  if (!in_window(g, s)) return out;
  const auto members = g.family().canonical_order();

  out.v1.verdict = Verdict::Holds;
  for (Mask m : members) {
    if (popcount(m & s) == 1 && !g.contains(m | s)) {
      out.v1 = {Verdict::Fails, {m}};
      break;
    }
  }

  const Mask rest = g.full() & ~s;
  out.v2.verdict = Verdict::Holds;
  for (Mask h : members) {
    if (!g.contains(rest | (h & s))) {
      out.v2 = {Verdict::Fails, {h}};
      break;
    }
  }
  return out;
}

ShrinkReport shrink_report(const ConvexGeometry& g, Mask s) {
  if (!in_window(g, s)) {
    ShrinkReport r;
    r.subject = s;
    return r;
  }
  return shrink_report_tabulated(g, s, tabulate_extreme(g));
}

std::vector<ShrinkReport> shrink_table(const ConvexGeometry& g) {
  const auto ex = tabulate_extreme(g);
  std::vector<ShrinkReport> out;
  for (Mask s : all_subsets_canonical(g.ground_size()))
    if (in_window(g, s)) out.push_back(shrink_report_tabulated(g, s, ex));
  return out;
}

std::vector<Mask> shrinkable_sets(const ConvexGeometry& g) {
  std::vector<Mask> out;
  for (const auto& r : shrink_table(g))
    if (r.shrinkable) out.push_back(r.subject);
  return out;
}

bool is_primitive(const ConvexGeometry& g) {
  const Mask full = g.full();
  for (Mask s = 0;; ++s) {
    if (in_window(g, s)) {
      const SCheck sc = check_S(g, s);
      if (sc.s1.holds() && sc.s2.holds()) return false;
    }
    if (s == full) break;
  }
  return true;
}

bool is_extremely_shrinkable(const ConvexGeometry& g, Mask s) {
  if (!in_window(g, s) || !g.contains(g.full() & ~s)) return false;
  const SCheck sc = check_S(g, s);
  return sc.s1.holds() && sc.s2.holds();
}

ResolutionSpec deresolve(const ConvexGeometry& g, Mask s) {
  if (!in_window(g, s))
    throw std::invalid_argument("deresolve: candidate set must satisfy 1 < |S| < |Z|");
  const SCheck sc = check_S(g, s);
  if (sc.s1.fails())
    throw std::invalid_argument("deresolve: S1 fails, witness G=" +
                                g.ground().to_string(sc.s1.witness[0]));
  if (sc.s2.fails())
    throw std::invalid_argument("deresolve: S2 fails, witness G=" +
                                g.ground().to_string(sc.s2.witness[0]) +
                                ", H=" + g.ground().to_string(sc.s2.witness[1]));

  // Base elements: one singleton per element outside S plus the merged
  // element, ordered by their lowest original position.
  const int n = g.ground_size();
  const int s_low = elements_of(s).front();
  std::vector<std::string> base_labels;
  std::vector<int> base_of(n, -1);  // original element -> base index
  std::string merged;
  for (const auto& l : g.ground().labels_of(s)) {
    if (!merged.empty()) merged += "+";
    merged += l;
  }
  for (int z = 0; z < n; ++z) {
    if (has(s, z)) {
      if (z == s_low) base_labels.push_back(merged);
    } else {
      base_labels.push_back(g.ground().label(z));
    }
  }
  GroundSet base_ground(base_labels);
  for (int z = 0; z < n; ++z)
    base_of[z] = base_ground.index_of(has(s, z) ? merged : g.ground().label(z));

  std::vector<Mask> base_sets;
  base_sets.reserve(g.sets().size());
  for (Mask m : g.sets()) {
    Mask p = 0;
    for (int z : elements_of(m)) p |= bit(base_of[z]);
    base_sets.push_back(p);
  }
  ConvexGeometry base = ConvexGeometry::certify(SetFamily(base_ground, std::move(base_sets)));

  std::vector<ConvexGeometry> fibers;
  const int merged_elem = base_ground.index_of(merged);
  for (int b = 0; b < base.ground_size(); ++b) {
    if (b == merged_elem) {
      fibers.push_back(induced_subgeometry(g, s));
    } else {
      GroundSet one({base.ground().label(b)});
      fibers.push_back(ConvexGeometry::certify(SetFamily(one, {Mask{0}, Mask{1}})));
    }
  }

  ResolutionSpec spec(std::move(base), std::move(fibers));
  if (!same_geometry(resolve(spec), g))
    throw std::logic_error("deresolve: resolving the extracted spec did not reproduce the input");
  return spec;
}

}  // namespace cvx
