#pragma once

// k-balancedness: every component of G - T, over all T with |T| <= k, has at
// least k - |T| distinct vertices carrying loops. 6-balanced graphs are rigid
// and stay rigid after any three element deletions.

#include <optional>

#include "lcrigid/graph.hpp"
#include "lcrigid/pebble.hpp"

namespace lcrigid {

struct BalanceWitness {
  std::vector<int> removed;    // T
  std::vector<int> component;  // offending component of G - T
  int loopedVertices = 0;      // distinct looped vertices in the component
  int required = 0;            // k - |T|
};

struct BalanceReport {
  bool balanced = true;
  std::optional<BalanceWitness> witness;
};

// Enumerates T ascending by size; |T| = k is vacuous (k - |T| = 0), so the
// scan stops at |T| = k - 1. Returns the first witness found.
inline BalanceReport isKBalanced(const LoopedSimpleGraph& g, int k) {
  if (k < 0) throw std::invalid_argument("isKBalanced: negative k");
  const int n = g.vertexCount();
  std::vector<char> looped(n, 0);
  for (int v : g.loops()) looped[v] = 1;

  std::vector<char> removed(n, 0);
  std::vector<char> seen(n, 0);
  std::vector<int> stack;
  auto scan = [&](const std::vector<int>& T, int need) -> std::optional<BalanceWitness> {
    std::fill(seen.begin(), seen.end(), 0);
    for (int s = 0; s < n; ++s) {
      if (removed[s] || seen[s]) continue;
      std::vector<int> comp;
      int loopCount = 0;
      stack.push_back(s);
      seen[s] = 1;
      while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        comp.push_back(v);
        loopCount += looped[v];
        for (int w : g.neighbors(v))
          if (!seen[w] && !removed[w]) {
            seen[w] = 1;
            stack.push_back(w);
          }
      }
      if (loopCount < need) {
        std::sort(comp.begin(), comp.end());
        return BalanceWitness{T, comp, loopCount, need};
      }
    }
    return std::nullopt;
  };

  for (int size = 0; size < k && size <= n; ++size) {
    std::vector<int> T(size);
    for (int i = 0; i < size; ++i) T[i] = i;
    for (;;) {
      for (int v : T) removed[v] = 1;
      auto witness = scan(T, k - size);
      for (int v : T) removed[v] = 0;
      if (witness) return {false, std::move(witness)};
      // next size-combination of {0..n-1}
      int i = size - 1;
      while (i >= 0 && T[i] == n - size + i) --i;
      if (i < 0) break;
      ++T[i];
      for (int j = i + 1; j < size; ++j) T[j] = T[j - 1] + 1;
    }
  }
  return {true, std::nullopt};
}

// Property harness for the rigidity guarantee: 6-balanced implies rigid.
// Always true when the guarantee holds; a false return is a counterexample.
inline bool checkSixBalancedRigid(const LoopedSimpleGraph& g) {
  return !isKBalanced(g, 6).balanced || isRigid(g);
}

// For a 6-balanced graph, checks that every deletion of three elements leaves
// a rigid graph. Throws if the input is not 6-balanced.
inline bool checkMinusThreeRobust(const LoopedSimpleGraph& g) {
  if (!isKBalanced(g, 6).balanced)
    throw std::invalid_argument("checkMinusThreeRobust: graph is not 6-balanced");
  const auto elems = g.allElements().items();
  const int m = static_cast<int>(elems.size());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int l = j + 1; l < m; ++l) {
        if (!isRigid(g.deleteElements(ElementSet({elems[i], elems[j], elems[l]}))))
          return false;
      }
  return true;
}

}  // namespace lcrigid
