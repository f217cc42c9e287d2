#pragma once

// Generators for the named example graphs.

#include <map>
#include <string>

#include "lcrigid/graph.hpp"

namespace lcrigid {

// Complete graph K_n. Vertices are named a, b, c, ... for n <= 26 and
// v0, v1, ... beyond that. loopSpec maps vertex name -> loop count; loops are
// emitted in vertex order, which fixes their ids.
inline LoopedSimpleGraph genComplete(int n, const std::map<std::string, int>& loopSpec = {}) {
  if (n < 0) throw std::invalid_argument("genComplete: negative vertex count");
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 0; i < n; ++i)
    names.push_back(n <= 26 ? std::string(1, static_cast<char>('a' + i))
                            : "v" + std::to_string(i));
  std::unordered_map<std::string, int> idx;
  for (int i = 0; i < n; ++i) idx.emplace(names[i], i);
  for (const auto& [name, count] : loopSpec) {
    if (!idx.count(name))
      throw std::invalid_argument("genComplete: unknown loop vertex '" + name + "'");
    if (count < 0) throw std::invalid_argument("genComplete: negative loop count");
  }
  std::vector<std::array<int, 2>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  std::vector<int> loops;
  for (int i = 0; i < n; ++i) {
    auto it = loopSpec.find(names[i]);
    if (it != loopSpec.end())
      for (int k = 0; k < it->second; ++k) loops.push_back(i);
  }
  return LoopedSimpleGraph(std::move(names), edges, loops);
}

// K_n with a single loop on each of the first `looped` vertices.
inline LoopedSimpleGraph genCompleteWithLoops(int n, int looped) {
  if (looped < 0 || looped > n)
    throw std::invalid_argument("genCompleteWithLoops: bad loop count");
  LoopedSimpleGraph base = genComplete(n);
  std::vector<int> loops;
  for (int i = 0; i < looped; ++i) loops.push_back(i);
  return LoopedSimpleGraph(base.vertexNames(), base.edges(), loops);
}

// K4 with one loop on each of three distinct vertices.
inline LoopedSimpleGraph genFigure1Left() {
  return genComplete(4, {{"a", 1}, {"b", 1}, {"c", 1}});
}

// 4-cycle u-v-w-z with one loop on every vertex: 2-connected, 3-balanced.
inline LoopedSimpleGraph genFigure1Middle() {
  return LoopedSimpleGraph({"u", "v", "w", "z"}, {{0, 1}, {1, 2}, {0, 3}, {2, 3}},
                           {0, 1, 2, 3});
}

// Disjoint union of two middle copies: disconnected but still 3-balanced.
inline LoopedSimpleGraph genFigure1Right() {
  return LoopedSimpleGraph({"u", "v", "w", "z", "x", "y", "t", "s"},
                           {{0, 1}, {1, 2}, {0, 3}, {2, 3}, {4, 5}, {5, 6}, {4, 7}, {6, 7}},
                           {0, 1, 2, 3, 4, 5, 6, 7});
}

// Ring of eight K5 copies a..h (vertices a1..h5) tied together by a perfect
// matching, with one loop on each vertex of copy c. Matching families:
//   { (i+1)%8 . 2 , i . 3 }  for i = 0..7
//   { (i+2)%8 . 1 , i . 4 }  for i = 0..7
//   { (i+4)%8 . 5 , i . 5 }  for i = 0..3
// 40 vertices, 100 edges, 5 loops; every vertex has underlying degree 5.
inline LoopedSimpleGraph genRingOfK5() {
  std::vector<std::string> names;
  for (int c = 0; c < 8; ++c)
    for (int j = 1; j <= 5; ++j)
      names.push_back(std::string(1, static_cast<char>('a' + c)) + std::to_string(j));
  auto id = [](int c, int j) { return c * 5 + (j - 1); };
  std::vector<std::array<int, 2>> edges;
  for (int c = 0; c < 8; ++c)
    for (int a = 1; a <= 5; ++a)
      for (int b = a + 1; b <= 5; ++b) edges.push_back({id(c, a), id(c, b)});
  for (int i = 0; i < 8; ++i) edges.push_back({id((i + 1) % 8, 2), id(i, 3)});
  for (int i = 0; i < 8; ++i) edges.push_back({id((i + 2) % 8, 1), id(i, 4)});
  for (int i = 0; i < 4; ++i) edges.push_back({id((i + 4) % 8, 5), id(i, 5)});
  std::vector<int> loops;
  for (int j = 1; j <= 5; ++j) loops.push_back(id(2, j));
  return LoopedSimpleGraph(std::move(names), edges, loops);
}

}  // namespace lcrigid
