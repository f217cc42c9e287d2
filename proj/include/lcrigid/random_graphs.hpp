#pragma once

// Deterministic random looped simple graphs for the cross-oracle suites.

#include <random>

#include "lcrigid/graph.hpp"

namespace lcrigid {

// Random graph with 1..maxVertices vertices (named v0, v1, ...) and at most
// maxElements edges+loops; roughly a quarter of the elements are loops.
inline LoopedSimpleGraph randomLoopedGraph(std::mt19937_64& rng, int maxVertices,
                                           int maxElements, bool withLoops = true) {
  if (maxVertices < 1) throw std::invalid_argument("randomLoopedGraph: maxVertices < 1");
  const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(maxVertices));
  const int target = static_cast<int>(rng() % static_cast<std::uint64_t>(maxElements + 1));
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  std::vector<std::array<int, 2>> edges;
  std::vector<int> loops;
  std::vector<char> used(static_cast<std::size_t>(n) * n, 0);
  int attempts = 0;
  while (static_cast<int>(edges.size() + loops.size()) < target && attempts < 8 * target + 32) {
    ++attempts;
    if (withLoops && rng() % 4 == 0) {
      loops.push_back(static_cast<int>(rng() % n));
      continue;
    }
    const int u = static_cast<int>(rng() % n);
    const int v = static_cast<int>(rng() % n);
    if (u == v) continue;
    const int a = std::min(u, v), b = std::max(u, v);
    if (used[static_cast<std::size_t>(a) * n + b]) continue;
    used[static_cast<std::size_t>(a) * n + b] = 1;
    edges.push_back({a, b});
  }
  return LoopedSimpleGraph(std::move(names), edges, loops);
}

// Random nonempty subset of the graph's elements.
inline ElementSet randomElementSubset(std::mt19937_64& rng, const LoopedSimpleGraph& g) {
  const auto all = g.allElements().items();
  if (all.empty()) return {};
  std::vector<Element> picked;
  while (picked.empty()) {
    picked.clear();
    for (Element e : all)
      if (rng() % 2) picked.push_back(e);
  }
  return ElementSet(std::move(picked));
}

}  // namespace lcrigid
