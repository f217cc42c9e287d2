// Cross-oracle identities: the pebble game, the two partition oracles, the
// minimum cover, and the numeric rank must all agree — exhaustively on every
// looped simple graph with at most 5 vertices and 9 elements, and on random
// graphs beyond that.

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "lcrigid/count.hpp"
#include "lcrigid/cover.hpp"
#include "lcrigid/graph.hpp"
#include "lcrigid/pebble.hpp"
#include "lcrigid/random_graphs.hpp"
#include "lcrigid/realization.hpp"

using namespace lcrigid;

namespace {

// Every looped simple graph on exactly n labeled vertices with at most
// maxElems elements: all edge subsets crossed with all loop multisets.
template <typename Fn>
void forAllGraphs(int n, int maxElems, Fn&& fn) {
  std::vector<std::array<int, 2>> allEdges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) allEdges.push_back({i, j});
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  const int m = static_cast<int>(allEdges.size());
  for (std::uint32_t emask = 0; emask < (std::uint32_t{1} << m); ++emask) {
    const int ec = std::popcount(emask);
    if (ec > maxElems) continue;
    std::vector<std::array<int, 2>> edges;
    for (int i = 0; i < m; ++i)
      if (emask & (std::uint32_t{1} << i)) edges.push_back(allEdges[i]);
    std::vector<int> loops;
    auto rec = [&](auto&& self, int minV, int remaining) -> void {
      fn(LoopedSimpleGraph(names, edges, loops));
      if (remaining == 0) return;
      for (int v = minV; v < n; ++v) {
        loops.push_back(v);
        self(self, v, remaining - 1);
        loops.pop_back();
      }
    };
    rec(rec, 0, maxElems - ec);
  }
}

}  // namespace

TEST_CASE("exhaustive agreement on five vertices and nine elements") {
  long long graphs = 0, mismatches = 0;
  forAllGraphs(5, 9, [&](const LoopedSimpleGraph& g) {
    ++graphs;
    const int p = pebbleRank(g);
    const int b = rankBruteForce(g, g.allElements()).rank;
    const auto mc = minCover(g);
    if (p != b || p != mc.value) ++mismatches;
  });
  CHECK(graphs == 205184);
  CHECK(mismatches == 0);
}

TEST_CASE("random agreement across all five routes") {
  std::mt19937_64 rng(505);
  int trials = 0;
  for (int i = 0; i < 500; ++i) {
    const auto g = randomLoopedGraph(rng, 6, 10);
    const std::uint64_t seed = rng();
    const int p = pebbleRank(g);
    const int b = rankBruteForce(g, g.allElements()).rank;
    const int r = rankBruteForceRestricted(g, g.allElements()).rank;
    const auto mc = minCover(g);
    const int nr = numericRank(g, seed, 3);
    REQUIRE(p == b);
    REQUIRE(p == r);
    REQUIRE(p == mc.value);
    REQUIRE(p == nr);
    REQUIRE(isAdmissibleThin(g, mc.cover, 1));
    REQUIRE(coverValue(mc.cover) == mc.value);
    ++trials;
  }
  CHECK(trials == 500);
}

TEST_CASE("subset ranks agree between the game and the oracle") {
  std::mt19937_64 rng(506);
  for (int i = 0; i < 200; ++i) {
    const auto g = randomLoopedGraph(rng, 6, 12);
    const auto t = randomElementSubset(rng, g);
    if (t.size() > 12) continue;
    CHECK(rankOfSubset(g, t) == rankBruteForce(g, t).rank);
  }
}

TEST_CASE("restricted equality on every subset of every tiny graph") {
  forAllGraphs(3, 6, [&](const LoopedSimpleGraph& g) {
    const auto all = g.allElements().items();
    const int m = static_cast<int>(all.size());
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
      std::vector<Element> picked;
      for (int i = 0; i < m; ++i)
        if (mask & (std::uint32_t{1} << i)) picked.push_back(all[i]);
      const ElementSet t{std::move(picked)};
      const int unrestricted = rankBruteForce(g, t).rank;
      REQUIRE(rankBruteForceRestricted(g, t).rank == unrestricted);
      REQUIRE(rankOfSubset(g, t) == unrestricted);
    }
  });
}

TEST_CASE("degenerate graphs") {
  const LoopedSimpleGraph empty({}, {}, {});
  CHECK(pebbleRank(empty) == 0);
  CHECK(rankBruteForce(empty, empty.allElements()).rank == 0);
  CHECK(minCover(empty).value == 0);
  CHECK(numericRank(empty, 1) == 0);

  // isolated vertices contribute 2 each to the rigidity target
  const auto rigid = LoopedSimpleGraph(
      {"a", "b", "c", "d"}, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, {0, 1, 2});
  REQUIRE(isRigid(rigid));
  const auto padded = LoopedSimpleGraph(
      {"a", "b", "c", "d", "x"}, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, {0, 1, 2});
  CHECK(pebbleRank(padded) == pebbleRank(rigid));
  CHECK_FALSE(isRigid(padded));
}
