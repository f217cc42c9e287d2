#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "lcrigid/generators.hpp"
#include "lcrigid/graph.hpp"
#include "lcrigid/io.hpp"
#include "lcrigid/random_graphs.hpp"

using namespace lcrigid;

TEST_CASE("parse accepts the schema and assigns loop ids by file order") {
  const auto k2 = parseGraph(R"({"vertices":["a","b"],"edges":[["a","b"]],"loops":[]})");
  CHECK(k2.vertexCount() == 2);
  CHECK(k2.edgeCount() == 1);
  CHECK(k2.loopCount() == 0);
  CHECK(k2.edges()[0] == std::array<int, 2>{0, 1});

  const auto twoLoops = parseGraph(R"({"vertices":["v"],"edges":[],"loops":["v","v"]})");
  CHECK(twoLoops.vertexCount() == 1);
  CHECK(twoLoops.loopCount() == 2);
  CHECK(twoLoops.loopVertex(0) == 0);
  CHECK(twoLoops.loopVertex(1) == 0);
  CHECK(twoLoops.loopsAt(0) == 2);
}

TEST_CASE("parse rejects malformed documents") {
  CHECK_THROWS_AS(parseGraph(R"({"vertices":["a"],"edges":[["a","a"]],"loops":[]})"),
                  std::invalid_argument);  // self-edge
  CHECK_THROWS_AS(parseGraph(R"({"vertices":["a","a"],"edges":[],"loops":[]})"),
                  std::invalid_argument);  // duplicate vertex name
  CHECK_THROWS_AS(parseGraph(R"({"vertices":["a"],"edges":[["a","b"]],"loops":[]})"),
                  std::invalid_argument);  // endpoint not declared
  CHECK_THROWS_AS(parseGraph(R"({"vertices":["a","b"],"edges":[["a"]],"loops":[]})"),
                  std::invalid_argument);  // malformed pair
  CHECK_THROWS_AS(
      parseGraph(R"({"vertices":["a","b"],"edges":[["a","b"],["b","a"]],"loops":[]})"),
      std::invalid_argument);  // duplicate edge
  CHECK_THROWS_AS(parseGraph(R"({"vertices":["a"],"edges":[],"loops":["b"]})"),
                  std::invalid_argument);  // loop vertex not declared
  CHECK_THROWS_AS(parseGraph("not json"), std::invalid_argument);
  CHECK_THROWS_AS(parseGraph("[1,2]"), std::invalid_argument);
}

TEST_CASE("serialize then parse is the identity on canonical graphs") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const auto g = randomLoopedGraph(rng, 8, 14);
    const auto round = parseGraph(serializeGraph(g));
    CHECK(serializeGraph(round) == serializeGraph(g));
    CHECK(round.vertexNames() == g.vertexNames());
    CHECK(round.loops() == g.loops());
  }
}

TEST_CASE("induced edges and loops") {
  const auto k4 = genComplete(4);
  const auto abc = std::vector<int>{0, 1, 2};
  CHECK(k4.inducedEdges(abc).size() == 3);
  CHECK(k4.inducedLoops(abc).empty());

  const auto twoLoops = LoopedSimpleGraph({"v"}, {}, {0, 0});
  CHECK(twoLoops.inducedLoops({0}).size() == 2);

  const auto k4loop = genComplete(4, {{"a", 1}});
  const auto bcd = std::vector<int>{1, 2, 3};
  CHECK(k4loop.inducedEdges(bcd).size() == 3);
  CHECK(k4loop.inducedLoops(bcd).empty());

  CHECK_THROWS_AS(k4.inducedEdges({0, 9}), std::invalid_argument);

  SECTION("induced members always have support inside X") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 40; ++i) {
      const auto g = randomLoopedGraph(rng, 7, 12);
      std::vector<int> x;
      for (int v = 0; v < g.vertexCount(); ++v)
        if (rng() % 2) x.push_back(v);
      const auto induced = g.inducedElements(x);
      const auto support = vertexSupport(g, induced);
      for (int v : support) CHECK(std::count(x.begin(), x.end(), v) == 1);
    }
  }
}

TEST_CASE("loopsAt counts occurrences") {
  const auto g = LoopedSimpleGraph({"u", "v"}, {{0, 1}}, {0, 0});
  CHECK(g.loopsAt(0) == 2);
  CHECK(g.loopsAt(1) == 0);
  CHECK_THROWS_AS(g.loopsAt(7), std::invalid_argument);

  const auto ring = genRingOfK5();
  for (int j = 1; j <= 5; ++j) CHECK(ring.loopsAt(ring.vertexIndex("c" + std::to_string(j))) == 1);
}

TEST_CASE("deleting elements and vertices") {
  const auto k2 = parseGraph(R"({"vertices":["a","b"],"edges":[["a","b"]],"loops":[]})");
  const auto bare = k2.deleteElements(ElementSet::ofEdges({0}));
  CHECK(bare.vertexCount() == 2);
  CHECK(bare.edgeCount() == 0);
  CHECK(bare.connectedComponents().size() == 2);

  const auto k4l = genComplete(4, {{"a", 1}, {"b", 1}, {"c", 1}});
  const auto k4 = k4l.deleteElements(ElementSet::ofLoops({0, 1, 2}));
  CHECK(serializeGraph(k4) == serializeGraph(genComplete(4)));

  CHECK_THROWS_AS(k4.deleteElements(ElementSet::ofLoops({0})), std::invalid_argument);

  SECTION("ring minus its looped copy") {
    const auto ring = genRingOfK5();
    std::vector<int> loopedVerts = ring.loops();
    const auto rest = ring.deleteVertices(loopedVerts);
    CHECK(rest.vertexCount() == 35);
    CHECK(rest.edgeCount() == 85);  // 7*10 intra + 20-5 matching
    CHECK(rest.loopCount() == 0);
  }
}

TEST_CASE("connected components partition V") {
  CHECK(genFigure1Right().connectedComponents().size() == 2);
  CHECK(LoopedSimpleGraph({}, {}, {}).connectedComponents().empty());
  CHECK(genComplete(2).connectedComponents().size() == 1);

  std::mt19937_64 rng(23);
  for (int i = 0; i < 40; ++i) {
    const auto g = randomLoopedGraph(rng, 8, 10);
    const auto comps = g.connectedComponents();
    std::set<int> all;
    for (const auto& c : comps)
      for (int v : c) CHECK(all.insert(v).second);
    CHECK(static_cast<int>(all.size()) == g.vertexCount());
    // no edge crosses two components
    std::vector<int> compOf(g.vertexCount());
    for (std::size_t ci = 0; ci < comps.size(); ++ci)
      for (int v : comps[ci]) compOf[v] = static_cast<int>(ci);
    for (auto [u, v] : g.edges()) CHECK(compOf[u] == compOf[v]);
  }
}

TEST_CASE("vertex connectivity") {
  CHECK(genComplete(5).vertexConnectivity() == 4);
  CHECK(genComplete(2).vertexConnectivity() == 1);
  CHECK(genFigure1Middle().vertexConnectivity() == 2);
  CHECK(genFigure1Right().vertexConnectivity() == 0);
  CHECK(LoopedSimpleGraph({"a"}, {}, {}).vertexConnectivity() == 0);
  CHECK(genRingOfK5().vertexConnectivity() == 5);
}

TEST_CASE("generators produce the pinned example graphs") {
  const auto left = genFigure1Left();
  CHECK(left.vertexCount() == 4);
  CHECK(left.edgeCount() == 6);
  CHECK(left.loopCount() == 3);

  const auto middle = genFigure1Middle();
  CHECK(middle.vertexCount() == 4);
  CHECK(middle.edgeCount() == 4);
  CHECK(middle.loopCount() == 4);
  CHECK_FALSE(middle.hasEdge(middle.vertexIndex("u"), middle.vertexIndex("w")));
  CHECK_FALSE(middle.hasEdge(middle.vertexIndex("v"), middle.vertexIndex("z")));

  const auto right = genFigure1Right();
  CHECK(right.vertexCount() == 8);
  CHECK(right.edgeCount() == 8);
  CHECK(right.loopCount() == 8);

  CHECK(genComplete(5).edgeCount() == 10);
  CHECK(genComplete(5).loopCount() == 0);
  CHECK_THROWS_AS(genComplete(3, {{"zz", 1}}), std::invalid_argument);
  CHECK(genCompleteWithLoops(7, 6).loopCount() == 6);
}

TEST_CASE("ring of K5 matches its construction") {
  const auto ring = genRingOfK5();
  CHECK(ring.vertexCount() == 40);
  CHECK(ring.edgeCount() == 100);
  CHECK(ring.loopCount() == 5);

  // all loops on the five vertices of one copy
  std::set<int> loopVerts(ring.loops().begin(), ring.loops().end());
  CHECK(loopVerts.size() == 5);
  std::set<char> copies;
  for (int v : loopVerts) copies.insert(ring.vertexName(v)[0]);
  CHECK(copies.size() == 1);

  // the inter-copy edges form a perfect matching and every vertex has
  // underlying degree 5 (4 intra-copy + 1 matching)
  std::vector<int> matchDegree(40, 0);
  for (auto [u, v] : ring.edges())
    if (ring.vertexName(u)[0] != ring.vertexName(v)[0]) {
      ++matchDegree[u];
      ++matchDegree[v];
    }
  for (int v = 0; v < 40; ++v) {
    CHECK(matchDegree[v] == 1);
    CHECK(ring.neighbors(v).size() == 5);
  }
}

TEST_CASE("DOT export renders loops as labeled self-edges") {
  const auto g = LoopedSimpleGraph({"a", "b", "lonely"}, {{0, 1}}, {1});
  const auto dot = toDot(g);
  CHECK(dot.find("\"a\" -- \"b\";") != std::string::npos);
  CHECK(dot.find("\"b\" -- \"b\" [label=\"l0\"];") != std::string::npos);
  CHECK(dot.find("\"lonely\";") != std::string::npos);
}

TEST_CASE("element sets behave as ordered sets") {
  ElementSet s({edgeElement(3), loopElement(0), edgeElement(1), edgeElement(3)});
  CHECK(s.size() == 3);
  CHECK(s.hasLoop());
  CHECK(s.edgeCount() == 2);
  CHECK(s.loopCount() == 1);
  CHECK(s.contains(edgeElement(3)));
  s.erase(loopElement(0));
  CHECK_FALSE(s.hasLoop());

  const ElementSet a = ElementSet::ofEdges({0, 1});
  const ElementSet b = ElementSet::ofEdges({1, 2});
  CHECK(a.unionWith(b) == ElementSet::ofEdges({0, 1, 2}));
  CHECK(a.intersectWith(b) == ElementSet::ofEdges({1}));
  CHECK(a.difference(b) == ElementSet::ofEdges({0}));
}
