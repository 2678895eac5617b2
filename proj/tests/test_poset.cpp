#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>


#include "cvxgeo/enumerate.hpp"
#include "cvxgeo/poset.hpp"
#include "cvxgeo/shrink.hpp"
#include "oracles.hpp"

using namespace cvx;
using namespace oracles;

namespace {

Poset chain3() {
  return Poset(GroundSet({"x", "y", "z"}), {{0, 1}, {1, 2}});
}

Poset vee() {  // a < b, a < c
  return Poset(GroundSet({"a", "b", "c"}), {{0, 1}, {0, 2}});
}

Poset antichain(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
  return Poset(GroundSet(labels), {});
}

Poset n_poset() {  // a < c, b < c, b < d
  return Poset(GroundSet({"a", "b", "c", "d"}), {{0, 2}, {1, 2}, {1, 3}});
}

}  // namespace

TEST_CASE("construction closes transitively and rejects cycles") {
  Poset p(GroundSet({"a", "b", "c"}), {{0, 1}, {1, 2}});
  CHECK(p.leq(0, 2));  // closure
  CHECK(p.leq(1, 1));  // reflexive

  CHECK_THROWS_WITH_AS(Poset(GroundSet({"a", "b"}), {{0, 1}, {1, 0}}),
                       doctest::Contains("cycle"), std::invalid_argument);
}

TEST_CASE("ideal geometries") {
  CHECK(ideals(chain3()).sets() == g1().sets());
  CHECK(ideals(antichain(3)).sets() == g6().sets());
  CHECK(are_isomorphic(ideals(vee()), g3()));
  // Down-set oracle straight from the pair condition.
  auto p = vee();
  auto g = ideals(p);
  for (Mask m = 0; m <= g.full(); ++m) {
    bool down_closed = true;
    for (int y = 0; y < 3; ++y)
      for (int x = 0; x < 3; ++x)
        if (p.leq(x, y) && has(m, y) && !has(m, x)) down_closed = false;
    CHECK(g.contains(m) == down_closed);
  }
}

TEST_CASE("associated order round-trips") {
  auto order = associated_order(g1());
  CHECK(order.less(0, 1));
  CHECK(order.less(1, 2));
  CHECK(order.less(0, 2));

  auto anti = associated_order(g6());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(anti.leq(i, j) == (i == j));

  CHECK_THROWS_AS(associated_order(g5()), std::invalid_argument);
}

TEST_CASE("maximal elements coincide with the extreme operator") {
  auto chain = chain3();
  CHECK(max_elements(chain, chain.ground().mask_of({"x", "z"})) ==
        chain.ground().mask_of({"z"}));
  auto anti = antichain(4);
  for (Mask a = 0; a <= anti.ground().full(); ++a) CHECK(max_elements(anti, a) == a);
  auto v = vee();
  CHECK(max_elements(v, v.ground().mask_of({"a", "c"})) == v.ground().mask_of({"c"}));

  for (const auto& p : {chain3(), vee(), n_poset(), antichain(3)}) {
    auto g = ideals(p);
    for (Mask a = 0; a <= g.full(); ++a) CHECK(max_elements(p, a) == extreme(g, a));
  }
}

TEST_CASE("lexicographic sums") {
  Poset base(GroundSet({"1", "2"}), {{0, 1}});
  std::vector<Poset> fibers;
  fibers.emplace_back(GroundSet({"a1", "b1"}), std::vector<std::pair<int, int>>{});
  fibers.emplace_back(GroundSet({"a2"}), std::vector<std::pair<int, int>>{});
  auto z = lex_sum(base, fibers);
  CHECK(z.ground().labels() == std::vector<std::string>{"a1", "b1", "a2"});
  CHECK(z.less(0, 2));        // a1 < a2 across fibers
  CHECK(z.less(1, 2));        // b1 < a2
  CHECK_FALSE(z.leq(0, 1));   // a1 and b1 stay incomparable
  CHECK_FALSE(z.leq(1, 0));

  // Singleton fibers relabel the base.
  std::vector<Poset> singles;
  singles.emplace_back(GroundSet({"u"}), std::vector<std::pair<int, int>>{});
  singles.emplace_back(GroundSet({"v"}), std::vector<std::pair<int, int>>{});
  auto re = lex_sum(base, singles);
  CHECK(re.less(0, 1));
  CHECK_FALSE(re.less(1, 0));

  // Antichain base: disjoint union of the fibers.
  Poset anti_base(GroundSet({"1", "2"}), {});
  std::vector<Poset> two_chains;
  two_chains.emplace_back(GroundSet({"a", "b"}), std::vector<std::pair<int, int>>{{0, 1}});
  two_chains.emplace_back(GroundSet({"c", "d"}), std::vector<std::pair<int, int>>{{0, 1}});
  auto disjoint = lex_sum(anti_base, two_chains);
  CHECK(disjoint.less(0, 1));
  CHECK(disjoint.less(2, 3));
  CHECK_FALSE(disjoint.leq(0, 2));
  CHECK_FALSE(disjoint.leq(1, 3));
}

TEST_CASE("autonomous sets") {
  auto chain = chain3();
  CHECK(autonomous_sets(chain) ==
        std::vector<Mask>{chain.ground().mask_of({"x", "y"}),
                          chain.ground().mask_of({"y", "z"})});
  CHECK(autonomous_sets(n_poset()).empty());
  CHECK(autonomous_sets(antichain(3)).size() == 3);  // every windowed subset
}

TEST_CASE("primitive posets") {
  CHECK(is_primitive_poset(n_poset()));
  for (const auto& p : enumerate_posets(3)) CHECK_FALSE(is_primitive_poset(p));
  CHECK(is_primitive_poset(Poset(GroundSet({"a", "b"}), {{0, 1}})));  // empty window

  // Agreement with geometric primitivity through ideals.
  for (int n = 2; n <= 4; ++n)
    for (const auto& p : enumerate_posets(n))
      CHECK(is_primitive_poset(p) == is_primitive(ideals(p)));
}

TEST_CASE("shrinkable sets of ideal geometries are exactly the autonomous sets") {
  for (int n = 2; n <= 4; ++n)
    for (const auto& p : enumerate_posets(n))
      CHECK(shrinkable_sets(ideals(p)) == autonomous_sets(p));
}

TEST_CASE("poset census sizes used by the classification") {
  CHECK(enumerate_posets(1).size() == 1);
  CHECK(enumerate_posets(2).size() == 2);
  CHECK(enumerate_posets(3).size() == 5);
  CHECK(enumerate_posets(4).size() == 16);
}

TEST_CASE("non-domination matches pairwise extreme sets") {
  for (const auto& p : enumerate_posets(4)) {
    auto g = ideals(p);
    for (int z = 0; z < 4; ++z)
      for (int w = 0; w < 4; ++w) {
        if (z == w) continue;
        const bool dominated = p.less(z, w);
        CHECK(has(extreme(g, bit(z) | bit(w)), z) == !dominated);
      }
  }
}
