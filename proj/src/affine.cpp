#include "cvxgeo/affine.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cvx {

namespace {

constexpr int kMaxConfigSize = 16;

Rational rat_det(RatMat m) {
  const std::size_t n = m.size();
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

// Barycentric coefficients of `target` with respect to the listed points;
// nullopt when the points are affinely dependent or target is outside their
// affine hull.
std::optional<RatVec> barycentric(const PointConfig& cfg, const std::vector<int>& pts,
                                  const RatVec& target) {
  const std::size_t k = pts.size();
  RatMat a(static_cast<std::size_t>(cfg.dim()) + 1, RatVec(k, Rational(0)));
  RatVec b(static_cast<std::size_t>(cfg.dim()) + 1, Rational(0));
  for (int r = 0; r < cfg.dim(); ++r) {
    for (std::size_t c = 0; c < k; ++c) a[r][c] = cfg.coords(pts[c])[r];
    b[r] = target[r];
  }
  for (std::size_t c = 0; c < k; ++c) a[cfg.dim()][c] = 1;
  b[cfg.dim()] = 1;
  return solve_unique(std::move(a), std::move(b));
}

bool simplex_contains(const PointConfig& cfg, const std::vector<int>& pts,
                      const RatVec& target) {
  const auto lambda = barycentric(cfg, pts, target);
  if (!lambda) return false;
  for (const auto& l : *lambda)
    if (l < 0) return false;
  return true;
}

template <typename F>
void for_each_combination(const std::vector<int>& pool, int k, F&& fn) {
  std::vector<int> pick(k);
  const int n = static_cast<int>(pool.size());
  if (k > n) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    for (int i = 0; i < k; ++i) pick[i] = pool[idx[i]];
    fn(pick);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<Mask> all_subsets_canonical(int n) {
  std::vector<Mask> out(static_cast<std::size_t>(1) << n);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Mask>(i);
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

}  // namespace

PointConfig::PointConfig(GroundSet ground, int dim, std::vector<RatVec> coords)
    : ground_(std::move(ground)), dim_(dim), coords_(std::move(coords)) {
  if (dim_ < 1) throw std::invalid_argument("point configuration needs dimension >= 1");
  if (static_cast<int>(coords_.size()) != ground_.size())
    throw std::invalid_argument("one coordinate vector required per element");
  for (const auto& c : coords_)
    if (static_cast<int>(c.size()) != dim_)
      throw std::invalid_argument("coordinate vector has wrong dimension");
  for (int i = 0; i < ground_.size(); ++i)
    for (int j = i + 1; j < ground_.size(); ++j)
      if (coords_[i] == coords_[j])
        throw std::invalid_argument("duplicate points: " + ground_.label(i) + " and " +
                                    ground_.label(j));
}

bool point_in_hull(const PointConfig& cfg, int p, Mask a) {
  if (p < 0 || p >= cfg.size()) throw std::invalid_argument("point_in_hull: bad element");
  if (has(a, p)) return true;
  const auto pool = elements_of(a);
  const RatVec& target = cfg.coords(p);
  const int kmax = std::min<int>(static_cast<int>(pool.size()), cfg.dim() + 1);
  for (int k = 1; k <= kmax; ++k) {
    bool found = false;
    for_each_combination(pool, k, [&](const std::vector<int>& pts) {
      if (!found && simplex_contains(cfg, pts, target)) found = true;
    });
    if (found) return true;
  }
  return false;
}

ConvexGeometry induced_geometry(const PointConfig& cfg) {
  const int n = cfg.size();
  if (n > kMaxConfigSize)
    throw std::invalid_argument("induced geometries are limited to 16 points");
  const std::size_t count = static_cast<std::size_t>(1) << n;

  // caught[z][G] says z lies in the real hull of G. Seed with the minimal
  // simplices containing z, then close upward.
  std::vector<std::vector<bool>> caught(n, std::vector<bool>(count, false));
  for (int z = 0; z < n; ++z) {
    std::vector<int> pool;
    for (int i = 0; i < n; ++i)
      if (i != z) pool.push_back(i);
    const int kmax = std::min<int>(n - 1, cfg.dim() + 1);
    for (int k = 1; k <= kmax; ++k) {
      for_each_combination(pool, k, [&](const std::vector<int>& pts) {
        if (simplex_contains(cfg, pts, cfg.coords(z))) {
          Mask m = 0;
          for (int i : pts) m |= bit(i);
          caught[z][m] = true;
        }
      });
    }
    for (std::size_t m = 0; m < count; ++m) {
      if (!caught[z][m]) continue;
      for (int x = 0; x < n; ++x)
        if (!has(static_cast<Mask>(m), x)) caught[z][m | bit(x)] = true;
    }
  }

  std::vector<Mask> members;
  for (std::size_t m = 0; m < count; ++m) {
    bool convex = true;
    for (int z = 0; z < n && convex; ++z)
      if (!has(static_cast<Mask>(m), z) && caught[z][m]) convex = false;
    if (convex) members.push_back(static_cast<Mask>(m));
  }
  return ConvexGeometry::certify(SetFamily(cfg.ground(), std::move(members)));
}

bool has_exchange_property(const ConvexGeometry& g, ExchangeWitness* witness) {
  const int n = g.ground_size();
  if (n > 20) throw std::invalid_argument("exchange-property scan limited to 20 elements");
  for (Mask a : all_subsets_canonical(n)) {
    if (a == 0) continue;
    const Mask hull = conv(g, a);
    for (int p : elements_of(hull & ~a)) {
      Mask cover = 0;
      for (int x : elements_of(a)) cover |= conv(g, (a & ~bit(x)) | bit(p));
      if (!subset(hull, cover)) {
        if (witness) *witness = {a, p};
        return false;
      }
    }
  }
  return true;
}

std::vector<Mask> face_trace_sets(const PointConfig& cfg) {
  const int n = cfg.size();
  if (n > kMaxConfigSize)
    throw std::invalid_argument("face enumeration is limited to 16 points");

  // Affine basis of the configuration; r is the rank of its span.
  std::vector<int> basis = {0};
  RatMat dirs;
  for (int i = 1; i < n; ++i) {
    RatVec d(cfg.dim());
    for (int c = 0; c < cfg.dim(); ++c) d[c] = cfg.coords(i)[c] - cfg.coords(0)[c];
    RatMat trial = dirs;
    trial.push_back(d);
    if (rat_rank(trial) > static_cast<int>(dirs.size())) {
      dirs = std::move(trial);
      basis.push_back(i);
    }
  }
  const int r = static_cast<int>(dirs.size());
  if (r == 0) return {};

  // Exact coordinates of every point within the span.
  RatMat span(cfg.dim(), RatVec(r));
  for (int c = 0; c < cfg.dim(); ++c)
    for (int j = 0; j < r; ++j) span[c][j] = dirs[j][c];
  std::vector<RatVec> local(n);
  for (int i = 0; i < n; ++i) {
    RatVec rhs(cfg.dim());
    for (int c = 0; c < cfg.dim(); ++c) rhs[c] = cfg.coords(i)[c] - cfg.coords(0)[c];
    auto sol = solve_unique(span, rhs);
    if (!sol) throw std::logic_error("point escaped its own affine span");
    local[i] = *std::move(sol);
  }

  // Facets: supporting hyperplanes spanned by r affinely independent points.
  std::set<Mask> facet_traces;
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i;
  for_each_combination(pool, r, [&](const std::vector<int>& t) {
    RatMat frame;
    for (int j = 1; j < r; ++j) {
      RatVec d(r);
      for (int c = 0; c < r; ++c) d[c] = local[t[j]][c] - local[t[0]][c];
      frame.push_back(std::move(d));
    }
    if (!frame.empty() && rat_rank(frame) < r - 1) return;  // degenerate hyperplane
    bool pos = false, neg = false;
    Mask on = 0;
    for (int x = 0; x < n; ++x) {
      RatMat m = frame;
      RatVec d(r);
      for (int c = 0; c < r; ++c) d[c] = local[x][c] - local[t[0]][c];
      m.push_back(std::move(d));
      const Rational side = rat_det(std::move(m));
      if (side > 0) pos = true;
      else if (side < 0) neg = true;
      else on |= bit(x);
    }
    if (!(pos && neg)) facet_traces.insert(on);
  });

  // All proper nonempty faces arise as intersections of facets.
  std::set<Mask> faces = facet_traces;
  while (true) {
    std::set<Mask> next = faces;
    for (Mask a : faces)
      for (Mask b : faces)
        if ((a & b) != 0) next.insert(a & b);
    if (next == faces) break;
    faces = std::move(next);
  }

  // The queried sets are the unions of proper faces: exactly the masks
  // covered by the faces they contain.
  std::vector<Mask> out;
  const Mask full = full_mask(n);
  for (Mask m = 1;; ++m) {
    Mask covered = 0;
    for (Mask f : faces)
      if (subset(f, m)) covered |= f;
    if (covered == m) out.push_back(m);
    if (m == full) break;
  }
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

std::string ObstructionFinding::describe(const GroundSet& ground) const {
  const auto l = [&](int i) { return ground.label(i); };
  if (kind == "O1")
    return "O1: " + l(elems[2]) + "," + l(elems[3]) + " lie in conv({" + l(elems[0]) + "," +
           l(elems[1]) + "}) but neither lies between " + l(elems[0]) + " and the other";
  return "O2: " + l(elems[1]) + " lies in conv({" + l(elems[0]) + "," + l(elems[2]) +
         "}) and conv({" + l(elems[0]) + "," + l(elems[3]) + "}) but neither " + l(elems[2]) +
         " nor " + l(elems[3]) + " lies beyond it";
}

std::vector<ObstructionFinding> affine_obstructions(const ConvexGeometry& g) {
  const int n = g.ground_size();
  std::vector<std::vector<Mask>> pair_hull(n, std::vector<Mask>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) pair_hull[i][j] = conv(g, bit(i) | bit(j));

  std::vector<ObstructionFinding> out;
  // O1: b and c trapped in conv({a,d}) with no betweenness from a.
  for (int a = 0; a < n; ++a)
    for (int d = 0; d < n; ++d) {
      if (d == a) continue;
      for (int b = 0; b < n; ++b) {
        if (b == a || b == d) continue;
        for (int c = b + 1; c < n; ++c) {
          if (c == a || c == d) continue;
          if (has(pair_hull[a][d], b) && has(pair_hull[a][d], c) &&
              !has(pair_hull[a][c], b) && !has(pair_hull[a][b], c))
            out.push_back({"O1", {a, d, b, c}});
        }
      }
    }
  // O2: b trapped between a and both of c, d, which are unordered past b.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (b == a) continue;
      for (int c = 0; c < n; ++c) {
        if (c == a || c == b) continue;
        for (int d = c + 1; d < n; ++d) {
          if (d == a || d == b) continue;
          if (has(pair_hull[a][c], b) && has(pair_hull[a][d], b) &&
              !has(pair_hull[b][d], c) && !has(pair_hull[b][c], d))
            out.push_back({"O2", {a, b, c, d}});
        }
      }
    }
  return out;
}

bool fiber_subspace_check(const ResolutionSpec& spec, const PointConfig& cfg,
                          std::string* witness) {
  const ConvexGeometry resolved = resolve(spec);
  const ConvexGeometry induced = induced_geometry(cfg);
  if (!same_geometry(induced, resolved))
    throw std::invalid_argument(
        "fiber_subspace_check: configuration does not induce the resolved geometry");

  // Element of Z by label -> index into cfg.
  std::vector<int> cfg_index(spec.resolved_size());
  for (int z = 0; z < spec.resolved_size(); ++z)
    cfg_index[z] = cfg.ground().index_of(spec.resolved_ground().label(z));

  const ConvexGeometry& base = spec.base();
  const int nb = base.ground_size();

  auto in_span = [&](const std::vector<int>& anchors, int probe) {
    RatMat m;
    for (std::size_t i = 1; i < anchors.size(); ++i) {
      RatVec d(cfg.dim());
      for (int c = 0; c < cfg.dim(); ++c)
        d[c] = cfg.coords(anchors[i])[c] - cfg.coords(anchors[0])[c];
      m.push_back(std::move(d));
    }
    const int base_rank = rat_rank(m);
    RatVec d(cfg.dim());
    for (int c = 0; c < cfg.dim(); ++c)
      d[c] = cfg.coords(probe)[c] - cfg.coords(anchors[0])[c];
    m.push_back(std::move(d));
    return rat_rank(m) == base_rank;
  };

  for (int p = 0; p < nb; ++p) {
    for (Mask b = 0;; ++b) {
      const bool candidate = !has(b, p) && popcount(b) >= 2 && has(conv(base, b), p);
      if (candidate) {
        // Caratheodory-minimal: no proper subset already captures p.
        bool minimal = true;
        for_each_subset(b, [&](Mask t) {
          if (t != b && t != 0 && has(conv(base, t), p)) minimal = false;
        });
        if (minimal) {
          const auto belems = elements_of(b);
          // Every transversal of the fibers over b.
          std::vector<std::size_t> pick(belems.size(), 0);
          while (true) {
            std::vector<int> anchors;
            for (std::size_t i = 0; i < belems.size(); ++i) {
              const Mask fm = spec.fiber_mask(belems[i]);
              anchors.push_back(cfg_index[elements_of(fm)[pick[i]]]);
            }
            for (std::size_t i = 0; i < belems.size(); ++i) {
              for (int z : elements_of(spec.fiber_mask(belems[i]))) {
                if (!in_span(anchors, cfg_index[z])) {
                  if (witness)
                    *witness = "fiber element " + spec.resolved_ground().label(z) +
                               " leaves the span of a transversal over base set " +
                               base.ground().to_string(b);
                  return false;
                }
              }
            }
            std::size_t i = 0;
            for (; i < belems.size(); ++i) {
              if (++pick[i] < static_cast<std::size_t>(spec.fiber(belems[i]).ground_size()))
                break;
              pick[i] = 0;
            }
            if (i == belems.size()) break;
          }
        }
      }
      if (b == base.full()) break;
    }
  }
  return true;
}

}  // namespace cvx
