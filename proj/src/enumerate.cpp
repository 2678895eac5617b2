#include "cvxgeo/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "cvxgeo/shrink.hpp"

namespace cvx {

namespace {

std::vector<std::vector<int>> permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Mask permute_mask(Mask m, const std::vector<int>& perm) {
  Mask out = 0;
  for (int i : elements_of(m)) out |= bit(perm[i]);
  return out;
}

std::vector<Mask> permute_family(const std::vector<Mask>& sets, const std::vector<int>& perm) {
  std::vector<Mask> out;
  out.reserve(sets.size());
  for (Mask m : sets) out.push_back(permute_mask(m, perm));
  std::sort(out.begin(), out.end());
  return out;
}

GroundSet letter_ground(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
  return GroundSet(labels);
}

CanonicalForm canonicalize_masks(int n, const std::vector<Mask>& sets) {
  CanonicalForm best{n, sets};
  std::sort(best.masks.begin(), best.masks.end());
  for (const auto& perm : permutations(n)) {
    auto candidate = permute_family(sets, perm);
    if (candidate < best.masks) best.masks = std::move(candidate);
  }
  return best;
}

// Depth-first generator over the complement families: union-closed,
// accessible collections containing the empty set and the full set. Masks
// are decided in (size, value) order, so every union of two accepted sets is
// decided later than both and can be tracked as a forced inclusion.
class AntimatroidDfs {
 public:
  AntimatroidDfs(int n, std::uint64_t* labeled, std::set<CanonicalForm>* classes)
      : n_(n),
        full_(full_mask(n)),
        count_(std::size_t{1} << n),
        in_(count_, false),
        forced_(count_, 0),
        labeled_(labeled),
        classes_(classes) {
    for (Mask m = 1; m <= full_; ++m) order_.push_back(m);
    std::sort(order_.begin(), order_.end(), [](Mask a, Mask b) {
      if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
      return a < b;
    });
    in_[0] = true;
    members_.push_back(0);
  }

  void run() { descend(0); }

 private:
  void include(Mask m) {
    for (Mask b : members_) {
      const Mask u = m | b;
      if (u != m && u != b) ++forced_[u];
    }
    members_.push_back(m);
    in_[m] = true;
  }

  void exclude(Mask m) {
    in_[m] = false;
    members_.pop_back();
    for (Mask b : members_) {
      const Mask u = m | b;
      if (u != m && u != b) --forced_[u];
    }
  }

  bool accessible(Mask m) const {
    for (int x : elements_of(m))
      if (in_[m & ~bit(x)]) return true;
    return false;
  }

  void record() {
    if (!in_[full_]) return;
    ++*labeled_;
    std::vector<Mask> convex;
    convex.reserve(members_.size());
    for (Mask f : members_) convex.push_back(full_ & ~f);
    classes_->insert(canonicalize_masks(n_, convex));
  }

  void descend(std::size_t i) {
    if (i == order_.size()) {
      record();
      return;
    }
    const Mask m = order_[i];
    if (forced_[m] > 0) {
      include(m);
      descend(i + 1);
      exclude(m);
      return;
    }
    if (accessible(m)) {
      include(m);
      descend(i + 1);
      exclude(m);
    }
    descend(i + 1);
  }

  int n_;
  Mask full_;
  std::size_t count_;
  std::vector<Mask> order_;
  std::vector<bool> in_;
  std::vector<int> forced_;
  std::vector<Mask> members_;
  std::uint64_t* labeled_;
  std::set<CanonicalForm>* classes_;
};

}  // namespace

CanonicalForm canonical_form(const ConvexGeometry& g) {
  if (g.ground_size() > 8)
    throw std::invalid_argument("canonical forms are limited to 8 elements");
  return canonicalize_masks(g.ground_size(), g.sets());
}

ConvexGeometry geometry_from_canonical(const CanonicalForm& cf) {
  return ConvexGeometry::certify(SetFamily(letter_ground(cf.n), cf.masks));
}

bool are_isomorphic(const ConvexGeometry& a, const ConvexGeometry& b) {
  if (a.ground_size() != b.ground_size()) return false;
  return canonical_form(a) == canonical_form(b);
}

int automorphism_count(const ConvexGeometry& g) {
  if (g.ground_size() > 8)
    throw std::invalid_argument("automorphism counting is limited to 8 elements");
  std::vector<Mask> sorted = g.sets();
  int count = 0;
  for (const auto& perm : permutations(g.ground_size()))
    if (permute_family(sorted, perm) == sorted) ++count;
  return count;
}

EnumerationResult enumerate_geometries(int n) {
  if (n < 1 || n > 5) throw std::invalid_argument("enumeration supports 1..5 elements");
  EnumerationResult result;
  std::set<CanonicalForm> classes;
  AntimatroidDfs dfs(n, &result.labeled_count, &classes);
  dfs.run();
  result.classes.assign(classes.begin(), classes.end());
  return result;
}

std::vector<CanonicalForm> enumerate_geometries_brute(int n) {
  if (n < 1 || n > 4) throw std::invalid_argument("the brute-force oracle supports 1..4 elements");
  const int subsets = 1 << n;
  const Mask full = full_mask(n);
  std::set<CanonicalForm> classes;
  // Every family of subsets of 2^X is a candidate.
  for (std::uint64_t candidate = 0; candidate < (std::uint64_t{1} << subsets); ++candidate) {
    std::vector<Mask> members;
    for (int m = 0; m < subsets; ++m)
      if ((candidate >> m) & 1) members.push_back(static_cast<Mask>(m));
    if (members.empty() || members.front() != 0) continue;  // G1
    bool ok = true;
    for (std::size_t i = 0; i < members.size() && ok; ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        if (!((candidate >> (members[i] & members[j])) & 1)) {
          ok = false;
          break;
        }
    for (std::size_t i = 0; i < members.size() && ok; ++i) {
      if (members[i] == full) continue;
      bool upgradable = false;
      for (int x = 0; x < n && !upgradable; ++x)
        if (!has(members[i], x) && ((candidate >> (members[i] | bit(x))) & 1)) upgradable = true;
      if (!upgradable) ok = false;
    }
    if (ok) classes.insert(canonicalize_masks(n, members));
  }
  return {classes.begin(), classes.end()};
}

bool audit_enumeration(const EnumerationResult& result, int n) {
  std::uint64_t factorial = 1;
  for (int i = 2; i <= n; ++i) factorial *= i;

  std::uint64_t orbit_sum = 0;
  CanonicalForm prev;
  for (std::size_t i = 0; i < result.classes.size(); ++i) {
    const auto& cf = result.classes[i];
    if (cf.n != n) return false;
    if (i > 0 && !(prev < cf)) return false;  // sorted, distinct
    prev = cf;
    ConvexGeometry g = geometry_from_canonical(cf);  // throws if not a geometry
    if (!(canonical_form(g) == cf)) return false;    // canonically stable
    const int aut = automorphism_count(g);
    if (aut == 0 || factorial % aut != 0) return false;
    orbit_sum += factorial / aut;
  }
  return orbit_sum == result.labeled_count;
}

const std::vector<PointConfig>& affine_reference_configs(int n) {
  auto build = [](std::vector<std::string> labels, int dim,
                  std::vector<std::vector<std::string>> coords) {
    std::vector<RatVec> pts;
    for (const auto& row : coords) {
      RatVec v;
      for (const auto& s : row) v.push_back(parse_rational(s));
      pts.push_back(std::move(v));
    }
    return PointConfig(GroundSet(std::move(labels)), dim, std::move(pts));
  };
  static const std::vector<PointConfig> none;
  static const std::vector<PointConfig> n1 = {build({"a"}, 1, {{"0"}})};
  static const std::vector<PointConfig> n2 = {build({"a", "b"}, 1, {{"0"}, {"1"}})};
  static const std::vector<PointConfig> n3 = {
      build({"a", "b", "c"}, 1, {{"0"}, {"1"}, {"2"}}),
      build({"a", "b", "c"}, 2, {{"0", "0"}, {"1", "0"}, {"0", "1"}})};
  static const std::vector<PointConfig> n4 = {
      build({"a", "b", "c", "d"}, 1, {{"0"}, {"1"}, {"2"}, {"3"}}),
      build({"a", "b", "c", "d"}, 2, {{"0", "0"}, {"1", "0"}, {"2", "0"}, {"1", "3/2"}}),
      build({"a", "b", "c", "d"}, 2, {{"0", "0"}, {"1", "0"}, {"0", "1"}, {"1", "1"}}),
      build({"a", "b", "c", "d"}, 2, {{"0", "0"}, {"2", "0"}, {"1", "2"}, {"1", "1"}})};
  switch (n) {
    case 1: return n1;
    case 2: return n2;
    case 3: return n3;
    case 4: return n4;
    default: return none;
  }
}

CensusEntry classify(const ConvexGeometry& g) {
  CensusEntry entry{g};
  entry.ordinal = is_union_closed(g);
  entry.atomistic = is_atomistic(g);
  const auto shrinkables = shrinkable_sets(g);
  entry.shrinkable_count = static_cast<int>(shrinkables.size());
  entry.primitive = shrinkables.empty();
  entry.extremely_resolvable = std::any_of(shrinkables.begin(), shrinkables.end(), [&](Mask s) {
    return g.contains(g.full() & ~s);
  });
  const int n = g.ground_size();
  if (n <= 4) {
    const CanonicalForm cf = canonical_form(g);
    bool affine = false;
    for (const auto& ref : affine_reference_configs(n))
      if (canonical_form(induced_geometry(ref)) == cf) affine = true;
    entry.affine = affine ? Tristate::True : Tristate::False;
  }
  return entry;
}

std::vector<CensusEntry> census(int n, int jobs) {
  const auto classes = enumerate_geometries(n).classes;
  std::vector<std::optional<CensusEntry>> slots(classes.size());
  if (jobs < 1) jobs = 1;
  jobs = std::min<int>(jobs, static_cast<int>(classes.size()) == 0 ? 1 : static_cast<int>(classes.size()));

  auto work = [&](int worker) {
    for (std::size_t i = worker; i < classes.size(); i += jobs)
      slots[i] = classify(geometry_from_canonical(classes[i]));
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < jobs; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }

  std::vector<CensusEntry> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(*std::move(s));
  return out;
}

ResolvableNonOrdinal4 count_resolvable_nonordinal_4() {
  const GroundSet xyz({"x", "y", "z"});
  const ConvexGeometry g5 = ConvexGeometry::certify(SetFamily(
      xyz, {0, bit(0), bit(1), bit(2), bit(0) | bit(1), bit(0) | bit(2), full_mask(3)}));

  auto singleton = [](const std::string& label) {
    return ConvexGeometry::certify(SetFamily(GroundSet({label}), {Mask{0}, Mask{1}}));
  };
  auto pair_full = [](const std::string& a, const std::string& b) {
    return ConvexGeometry::certify(SetFamily(GroundSet({a, b}), {0, 1, 2, 3}));
  };
  auto pair_chain = [](const std::string& a, const std::string& b) {
    return ConvexGeometry::certify(SetFamily(GroundSet({a, b}), {0, 1, 3}));
  };
  auto relabel = [](const ConvexGeometry& g, std::vector<std::string> labels) {
    return ConvexGeometry::certify(SetFamily(GroundSet(std::move(labels)), g.sets()));
  };

  std::set<CanonicalForm> type_a, type_b;
  // Non-ordinal three-element base, fiber sizes 1,1,2.
  for (int pos = 0; pos < 3; ++pos) {
    for (int variant = 0; variant < 2; ++variant) {
      std::vector<ConvexGeometry> fibers;
      for (int x = 0; x < 3; ++x) {
        const std::string stem = "f" + std::to_string(x);
        if (x == pos)
          fibers.push_back(variant == 0 ? pair_full(stem + "a", stem + "b")
                                        : pair_chain(stem + "a", stem + "b"));
        else
          fibers.push_back(singleton(stem + "a"));
      }
      type_a.insert(canonical_form(resolve(ResolutionSpec(g5, std::move(fibers)))));
    }
  }
  // Two-element base, one fiber is the non-ordinal three-element class.
  const std::vector<ConvexGeometry> bases = {pair_full("1", "2"), pair_chain("1", "2")};
  for (const auto& base : bases) {
    for (int pos = 0; pos < 2; ++pos) {
      std::vector<ConvexGeometry> fibers;
      for (int x = 0; x < 2; ++x) {
        const std::string stem = "f" + std::to_string(x);
        if (x == pos)
          fibers.push_back(relabel(g5, {stem + "a", stem + "b", stem + "c"}));
        else
          fibers.push_back(singleton(stem + "a"));
      }
      type_b.insert(canonical_form(resolve(ResolutionSpec(base, std::move(fibers)))));
    }
  }

  std::set<CanonicalForm> all = type_a;
  all.insert(type_b.begin(), type_b.end());
  return {static_cast<int>(type_a.size()), static_cast<int>(type_b.size()),
          static_cast<int>(all.size())};
}

}  // namespace cvx
