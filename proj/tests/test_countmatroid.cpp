#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "lcrigid/count.hpp"
#include "lcrigid/generators.hpp"
#include "lcrigid/graph.hpp"
#include "lcrigid/random_graphs.hpp"

using namespace lcrigid;

namespace {

// K4 on a,b,c,d with one loop on a; plenty of structure for f examples.
LoopedSimpleGraph k4WithLoop() { return genComplete(4, {{"a", 1}}); }

}  // namespace

TEST_CASE("fValue on the defining cases") {
  const auto g = k4WithLoop();
  CHECK(fValue(g, ElementSet::ofEdges({0})) == 1);           // one edge: 2*2-3
  CHECK(fValue(g, ElementSet::ofLoops({0})) == 2);           // one loop: 2*1
  CHECK(fValue(g, ElementSet::ofEdges({0, 1, 2, 3, 4, 5})) == 5);  // E(K4): 2*4-3
  ElementSet mixed = ElementSet::ofEdges({0, 1, 2, 3, 4, 5});
  mixed.insert(loopElement(0));
  CHECK(fValue(g, mixed) == 8);  // loop present: 2*4
  CHECK_THROWS_AS(fValue(g, ElementSet{}), std::invalid_argument);
}

TEST_CASE("graded sparsity oracle") {
  CHECK_FALSE(isGradedSparse(genComplete(4)));  // 6 > 2*4-3

  // K4 minus one edge plus three loops on distinct vertices
  auto g = genComplete(4, {{"a", 1}, {"b", 1}, {"c", 1}}).deleteElements(ElementSet::ofEdges({5}));
  CHECK(isGradedSparse(g));
  CHECK(isTight(g));  // 5 + 3 = 8 = 2*4

  CHECK_FALSE(isGradedSparse(LoopedSimpleGraph({"v"}, {}, {0, 0, 0})));  // 3 > 2*1
  CHECK_FALSE(isTight(genComplete(4, {{"a", 1}, {"b", 1}, {"c", 1}})));  // 9 > 8
  CHECK_FALSE(isTight(genComplete(2)));                                  // 1 != 4
}

TEST_CASE("rankBruteForce on the worked examples") {
  const auto loopOnly = LoopedSimpleGraph({"v"}, {}, {0});
  const auto c1 = rankBruteForce(loopOnly, loopOnly.allElements());
  CHECK(c1.rank == 1);
  CHECK(c1.discarded == ElementSet::ofLoops({0}));
  CHECK(c1.parts.empty());

  const auto k4 = genComplete(4);
  CHECK(rankBruteForce(k4, k4.allElements()).rank == 5);

  CHECK(rankBruteForce(k4, ElementSet{}).rank == 0);

  const auto twoLoops = LoopedSimpleGraph({"v"}, {}, {0, 0});
  const auto c2 = rankBruteForce(twoLoops, twoLoops.allElements());
  CHECK(c2.rank == 2);
  CHECK(c2.discarded.empty());
  REQUIRE(c2.parts.size() == 1);
  CHECK(fValue(twoLoops, c2.parts[0]) == 2);
}

TEST_CASE("certificates really partition the queried set") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 80; ++i) {
    const auto g = randomLoopedGraph(rng, 6, 9);
    const auto t = randomElementSubset(rng, g);
    const auto cert = rankBruteForce(g, t);
    ElementSet seen = cert.discarded;
    int value = cert.discarded.size();
    for (const auto& part : cert.parts) {
      REQUIRE_FALSE(part.empty());
      CHECK(seen.intersectWith(part).empty());
      seen = seen.unionWith(part);
      value += fValue(g, part);
    }
    CHECK(seen == t);
    CHECK(value == cert.rank);
  }
}

TEST_CASE("restricted search agrees with the unrestricted one") {
  const auto loopOnly = LoopedSimpleGraph({"v"}, {}, {0});
  CHECK(rankBruteForceRestricted(loopOnly, loopOnly.allElements()).rank == 1);
  const auto k4 = genComplete(4);
  CHECK(rankBruteForceRestricted(k4, k4.allElements()).rank == 5);
  const auto twoLoops = LoopedSimpleGraph({"v"}, {}, {0, 0});
  CHECK(rankBruteForceRestricted(twoLoops, twoLoops.allElements()).rank == 2);

  SECTION("equality on random subsets, restricted shape holds") {
    std::mt19937_64 rng(77);
    for (int i = 0; i < 120; ++i) {
      const auto g = randomLoopedGraph(rng, 6, 10);
      const auto t = randomElementSubset(rng, g);
      const auto a = rankBruteForce(g, t);
      const auto b = rankBruteForceRestricted(g, t);
      CHECK(a.rank == b.rank);
      int loopyParts = 0;
      for (const auto& part : b.parts) loopyParts += part.hasLoop();
      CHECK(loopyParts <= 1);
      for (Element e : b.discarded) CHECK(e.kind == ElementKind::loop);
      for (std::size_t x = 0; x < b.parts.size(); ++x)
        for (std::size_t y = x + 1; y < b.parts.size(); ++y) {
          const auto sx = vertexSupport(g, b.parts[x]);
          const auto sy = vertexSupport(g, b.parts[y]);
          std::vector<int> common;
          std::set_intersection(sx.begin(), sx.end(), sy.begin(), sy.end(),
                                std::back_inserter(common));
          CHECK(common.size() <= 1);
        }
    }
  }
}

TEST_CASE("element bound aborts instead of truncating") {
  const auto big = genComplete(7);  // 21 edges
  CHECK_THROWS_AS(rankBruteForce(big, big.allElements()), std::runtime_error);
  CHECK_THROWS_AS(rankBruteForceRestricted(big, big.allElements()), std::runtime_error);
  CHECK(rankBruteForce(big, big.allElements(), 21).rank == 11);
}

TEST_CASE("independence agrees with rank") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    const auto g = randomLoopedGraph(rng, 5, 9);
    const auto t = randomElementSubset(rng, g);
    CHECK(isIndependent(g, t) == (rankBruteForce(g, t).rank == t.size()));
  }
}

TEST_CASE("submodularity and the union bound on worked pairs") {
  // two edges sharing one vertex: empty element intersection, vacuous
  const auto path = LoopedSimpleGraph({"u", "v", "w"}, {{0, 1}, {0, 2}}, {});
  CHECK(checkSubmodular(path, ElementSet::ofEdges({0}), ElementSet::ofEdges({1})));

  // triangles abc and bcd inside K4 sharing edge bc
  const auto k4 = genComplete(4);  // edges ab,ac,ad,bc,bd,cd
  const ElementSet abc = ElementSet::ofEdges({0, 1, 3});
  const ElementSet bcd = ElementSet::ofEdges({3, 4, 5});
  CHECK(fValue(k4, abc) == 3);
  CHECK(fValue(k4, bcd) == 3);
  CHECK(fValue(k4, abc.unionWith(bcd)) == 5);
  CHECK(fValue(k4, abc.intersectWith(bcd)) == 1);
  CHECK(checkSubmodular(k4, abc, bcd));

  // loop at a + ab against loop at b + ab
  const auto duo = LoopedSimpleGraph({"a", "b"}, {{0, 1}}, {0, 1});
  ElementSet t1 = ElementSet::ofEdges({0});
  t1.insert(loopElement(0));
  ElementSet t2 = ElementSet::ofEdges({0});
  t2.insert(loopElement(1));
  CHECK(fValue(duo, t1) == 4);
  CHECK(fValue(duo, t2) == 4);
  CHECK(fValue(duo, t1.unionWith(t2)) == 4);
  CHECK(checkUnionBound(duo, t1, t2));

  CHECK_THROWS_AS(checkSubmodular(k4, ElementSet{}, abc), std::invalid_argument);
  CHECK_THROWS_AS(checkUnionBound(k4, abc, ElementSet{}), std::invalid_argument);
}

TEST_CASE("submodularity and union bound hold on random pairs") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 400; ++i) {
    const auto g = randomLoopedGraph(rng, 7, 12);
    if (g.elementCount() == 0) continue;
    const auto t1 = randomElementSubset(rng, g);
    const auto t2 = randomElementSubset(rng, g);
    if (t1.empty() || t2.empty()) continue;
    CHECK(checkSubmodular(g, t1, t2));
    CHECK(checkUnionBound(g, t1, t2));
  }
}

TEST_CASE("rank is monotone with unit increase and capped by the counts") {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 150; ++i) {
    const auto g = randomLoopedGraph(rng, 5, 9);
    const auto all = g.allElements().items();
    if (all.empty()) continue;
    auto t = randomElementSubset(rng, g);
    const Element extra = all[rng() % all.size()];
    t.erase(extra);
    const int before = rankBruteForce(g, t).rank;
    auto bigger = t;
    bigger.insert(extra);
    const int after = rankBruteForce(g, bigger).rank;
    CHECK(before <= after);
    CHECK(after <= before + 1);
    if (!t.empty()) {
      const int supportCap = 2 * static_cast<int>(vertexSupport(g, t).size());
      CHECK(before <= supportCap);
      if (!t.hasLoop()) CHECK(before <= supportCap - 3);
    }
  }
}
