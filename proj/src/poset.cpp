#include "cvxgeo/poset.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace cvx {

namespace {

// Path along the raw input pairs, for cycle reporting.
std::vector<int> find_path(const std::vector<std::pair<int, int>>& pairs, int from, int to,
                           int n) {
  std::vector<int> prev(n, -1);
  std::vector<bool> seen(n, false);
  std::queue<int> q;
  q.push(from);
  seen[from] = true;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    if (u == to) break;
    for (const auto& [a, b] : pairs)
      if (a == u && !seen[b]) {
        seen[b] = true;
        prev[b] = u;
        q.push(b);
      }
  }
  std::vector<int> path;
  for (int v = to; v != -1; v = prev[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

Poset::Poset(GroundSet ground, const std::vector<std::pair<int, int>>& pairs)
    : ground_(std::move(ground)) {
  const int n = ground_.size();
  up_.assign(n, 0);
  for (int i = 0; i < n; ++i) up_[i] = bit(i);
  for (const auto& [a, b] : pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw std::invalid_argument("poset pair references an element outside the ground set");
    up_[a] |= bit(b);
  }
  // Transitive closure (Warshall over up-set masks).
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (has(up_[i], k)) up_[i] |= up_[k];
  // Antisymmetry: a two-way comparison means the input pairs contain a cycle.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (has(up_[i], j) && has(up_[j], i)) {
        auto fwd = find_path(pairs, i, j, n);
        auto back = find_path(pairs, j, i, n);
        std::string cycle;
        for (int v : fwd) cycle += ground_.label(v) + " <= ";
        for (std::size_t t = 1; t < back.size(); ++t) cycle += ground_.label(back[t]) + (t + 1 < back.size() ? " <= " : "");
        throw std::invalid_argument("relation is not antisymmetric, cycle: " + cycle);
      }
  down_.assign(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j : elements_of(up_[i])) down_[j] |= bit(i);
}

ConvexGeometry ideals(const Poset& p) {
  const int n = p.size();
  if (n > 20) throw std::invalid_argument("ideal enumeration is limited to 20 elements");
  std::vector<Mask> sets;
  const Mask full = full_mask(n);
  for (Mask m = 0;; ++m) {
    bool closed = true;
    for (int j : elements_of(m))
      if (!subset(p.down_set(j), m)) {
        closed = false;
        break;
      }
    if (closed) sets.push_back(m);
    if (m == full) break;
  }
  return ConvexGeometry::certify(SetFamily(p.ground(), std::move(sets)));
}

Poset associated_order(const ConvexGeometry& g) {
  if (!is_union_closed(g))
    throw std::invalid_argument("associated_order: geometry is not union-closed");
  std::vector<std::pair<int, int>> pairs;
  for (int y = 0; y < g.ground_size(); ++y) {
    const Mask hull = conv(g, bit(y));
    for (int x : elements_of(hull)) pairs.emplace_back(x, y);
  }
  Poset order(g.ground(), pairs);
  if (g.ground_size() <= 20 && !(ideals(order).family() == g.family()))
    throw std::logic_error("associated_order: ideals of the extracted order differ from input");
  return order;
}

Mask max_elements(const Poset& p, Mask a) {
  Mask out = 0;
  for (int z : elements_of(a))
    if ((p.up_set(z) & a & ~bit(z)) == 0) out |= bit(z);
  return out;
}

Poset lex_sum(const Poset& base, const std::vector<Poset>& fibers) {
  std::vector<const GroundSet*> grounds;
  grounds.reserve(fibers.size());
  for (const auto& f : fibers) grounds.push_back(&f.ground());
  GroundSet ground = fiber_union_ground(base.ground(), grounds);

  std::vector<int> owner, local;
  for (int x = 0; x < base.size(); ++x)
    for (int i = 0; i < fibers[x].size(); ++i) {
      owner.push_back(x);
      local.push_back(i);
    }

  const int n = ground.size();
  std::vector<std::pair<int, int>> pairs;
  for (int zi = 0; zi < n; ++zi)
    for (int zj = 0; zj < n; ++zj) {
      if (owner[zi] == owner[zj]) {
        if (fibers[owner[zi]].leq(local[zi], local[zj])) pairs.emplace_back(zi, zj);
      } else if (base.leq(owner[zi], owner[zj])) {
        pairs.emplace_back(zi, zj);
      }
    }
  return Poset(std::move(ground), pairs);
}

std::vector<Mask> autonomous_sets(const Poset& p) {
  const int n = p.size();
  std::vector<Mask> all(static_cast<std::size_t>(1) << n);
  std::iota(all.begin(), all.end(), Mask{0});
  std::sort(all.begin(), all.end(), CanonicalLess{});

  std::vector<Mask> out;
  for (Mask s : all) {
    const int k = popcount(s);
    if (k <= 1 || k >= n) continue;
    bool autonomous = true;
    for (int z = 0; z < n && autonomous; ++z) {
      if (has(s, z)) continue;
      const Mask below = p.down_set(z) & s;  // members s with s <= z
      const Mask above = p.up_set(z) & s;    // members s with z <= s
      if ((below != 0 && below != s) || (above != 0 && above != s)) autonomous = false;
    }
    if (autonomous) out.push_back(s);
  }
  return out;
}

bool is_primitive_poset(const Poset& p) { return autonomous_sets(p).empty(); }

std::vector<Poset> enumerate_posets(int n) {
  if (n < 1 || n > 5) throw std::invalid_argument("poset enumeration supports 1..5 elements");
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
  GroundSet ground(labels);

  std::vector<std::pair<int, int>> slots;  // unordered pairs i < j
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);

  std::vector<std::vector<int>> perms;
  {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }

  auto encode = [&](const std::vector<Mask>& up) {
    std::uint64_t code = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) code = (code << 1) | (has(up[i], j) ? 1 : 0);
    return code;
  };

  std::set<std::uint64_t> seen;
  std::vector<Poset> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < slots.size(); ++i) total *= 3;

  for (std::size_t choice = 0; choice < total; ++choice) {
    std::vector<Mask> up(n);
    for (int i = 0; i < n; ++i) up[i] = bit(i);
    std::size_t c = choice;
    for (const auto& [i, j] : slots) {
      switch (c % 3) {
        case 1: up[i] |= bit(j); break;
        case 2: up[j] |= bit(i); break;
        default: break;
      }
      c /= 3;
    }
    // Keep transitive assignments only.
    bool transitive = true;
    for (int i = 0; i < n && transitive; ++i)
      for (int k : elements_of(up[i]))
        if (!subset(up[k], up[i])) {
          transitive = false;
          break;
        }
    if (!transitive) continue;

    std::uint64_t best = ~std::uint64_t{0};
    for (const auto& perm : perms) {
      std::vector<Mask> relabeled(n, 0);
      for (int i = 0; i < n; ++i)
        for (int j : elements_of(up[i])) relabeled[perm[i]] |= bit(perm[j]);
      best = std::min(best, encode(relabeled));
    }
    if (seen.insert(best).second) {
      std::vector<std::pair<int, int>> pairs;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (((best >> ((n - 1 - i) * n + (n - 1 - j))) & 1) && i != j) pairs.emplace_back(i, j);
      out.emplace_back(ground, pairs);
    }
  }
  return out;
}

}  // namespace cvx
