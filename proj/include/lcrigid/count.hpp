#pragma once

// The count function f, graded-sparsity testing by exhaustive enumeration,
// and brute-force rank oracles: the unrestricted partition minimum and the
// restricted form (loops confined to one part, pairwise support overlap <= 1).
// These are the ground truth the pebble game is checked against.

#include <bit>
#include <cstdint>
#include <limits>

#include "lcrigid/graph.hpp"

namespace lcrigid {

// f(T) = 2|V(T)| - 3 for loop-free nonempty T, 2|V(T)| once T contains a loop.
// f(∅) is undefined and rejected.
inline int fValue(const LoopedSimpleGraph& g, const ElementSet& t) {
  if (t.empty()) throw std::invalid_argument("fValue: empty element set");
  const int twice = 2 * static_cast<int>(vertexSupport(g, t).size());
  return t.hasLoop() ? twice : twice - 3;
}

namespace detail {

// Compact per-element support bitmasks over V(T); requires |V(T)| <= 64.
struct ElementMasks {
  std::vector<std::uint64_t> mask;
  std::vector<char> isLoop;
};

inline ElementMasks compactMasks(const LoopedSimpleGraph& g, const std::vector<Element>& items) {
  std::vector<int> verts;
  for (Element e : items) {
    if (!g.hasElement(e)) throw std::invalid_argument("unknown element");
    if (e.kind == ElementKind::edge) {
      verts.push_back(g.edges()[e.index][0]);
      verts.push_back(g.edges()[e.index][1]);
    } else {
      verts.push_back(g.loops()[e.index]);
    }
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  if (verts.size() > 64) throw std::runtime_error("element support too large");
  auto bit = [&](int v) {
    return std::uint64_t{1} << (std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  };
  ElementMasks m;
  m.mask.reserve(items.size());
  m.isLoop.reserve(items.size());
  for (Element e : items) {
    if (e.kind == ElementKind::edge)
      m.mask.push_back(bit(g.edges()[e.index][0]) | bit(g.edges()[e.index][1]));
    else
      m.mask.push_back(bit(g.loops()[e.index]));
    m.isLoop.push_back(e.kind == ElementKind::loop);
  }
  return m;
}

}  // namespace detail

// Exhaustive subset oracle for (2,0,3)-graded-sparsity of T:
//   |T'| <= 2|V(T')| - 3 for every nonempty T' ⊆ T ∩ E, and
//   |T'| <= 2|V(T')|     for every nonempty T' ⊆ T.
// 2^|T| subsets; intended for |T| <= ~20 (hard abort beyond maxElements).
inline bool isIndependent(const LoopedSimpleGraph& g, const ElementSet& t,
                          int maxElements = 22) {
  if (t.size() > maxElements)
    throw std::runtime_error("isIndependent: element count exceeds enumeration bound");
  const auto& items = t.items();
  const int n = t.size();
  const auto m = detail::compactMasks(g, items);
  std::uint64_t loopBits = 0;
  for (int i = 0; i < n; ++i)
    if (m.isLoop[i]) loopBits |= std::uint64_t{1} << i;
  for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << n); ++sub) {
    std::uint64_t support = 0;
    for (std::uint64_t rest = sub; rest; rest &= rest - 1)
      support |= m.mask[std::countr_zero(rest)];
    const int cap = 2 * std::popcount(support) - ((sub & loopBits) ? 0 : 3);
    if (std::popcount(sub) > cap) return false;
  }
  return true;
}

inline bool isGradedSparse(const LoopedSimpleGraph& g, int maxElements = 22) {
  return isIndependent(g, g.allElements(), maxElements);
}

// (2,0,3)-tight: graded-sparse with |E| + |L| = 2|V|.
inline bool isTight(const LoopedSimpleGraph& g, int maxElements = 22) {
  return g.elementCount() == 2 * g.vertexCount() && isGradedSparse(g, maxElements);
}

// Minimizing certificate for the partition form of the rank:
//   rank = |discarded| + Σ_i f(parts[i]),
// where discarded ∪ parts partition the queried set.
struct RankCertificate {
  int rank = 0;
  ElementSet discarded;
  std::vector<ElementSet> parts;
};

namespace detail {

struct PartitionBest {
  int value = std::numeric_limits<int>::max();
  std::vector<int> assign;
  int blockCount = 0;
};

inline int blockF(std::uint64_t mask, bool hasLoop) {
  return 2 * std::popcount(mask) - (hasLoop ? 0 : 3);
}

// Branch-and-bound over partitions of the listed elements into nonempty
// blocks, minimizing fixedCost + Σ f(block). Partial sums only grow, so
// pruning against the best value is exact. With enforceThin, pairwise block
// support overlap stays <= 1, seedMask (the undiscarded-loop block, when
// nonzero) is pre-seeded as block 0, and the listed elements must all be
// edges.
inline void searchPartitions(const std::vector<std::uint64_t>& masks,
                             const std::vector<char>& loops, int fixedCost,
                             bool enforceThin, std::uint64_t seedMask,
                             PartitionBest& best) {
  const int n = static_cast<int>(masks.size());
  std::vector<std::uint64_t> blockMask(n + 1, 0);
  std::vector<char> blockLoop(n + 1, 0);
  std::vector<int> blockVal(n + 1, 0);
  std::vector<int> assign(n, -1);
  int blockCount = 0;
  int sum = 0;
  if (seedMask) {
    blockMask[0] = seedMask;
    blockLoop[0] = 1;
    blockVal[0] = blockF(seedMask, true);
    blockCount = 1;
    sum = blockVal[0];
  }
  auto overlapOk = [&](std::uint64_t candidate, int skip) {
    for (int b = 0; b < blockCount; ++b)
      if (b != skip && std::popcount(candidate & blockMask[b]) > 1) return false;
    return true;
  };
  auto rec = [&](auto&& self, int idx) -> void {
    if (fixedCost + sum >= best.value) return;
    if (idx == n) {
      best.value = fixedCost + sum;
      best.assign = assign;
      best.blockCount = blockCount;
      return;
    }
    const std::uint64_t em = masks[idx];
    const bool el = loops[idx] != 0;
    for (int b = 0; b < blockCount; ++b) {
      const std::uint64_t nm = blockMask[b] | em;
      if (enforceThin && !overlapOk(nm, b)) continue;
      const std::uint64_t om = blockMask[b];
      const char ol = blockLoop[b];
      const int ov = blockVal[b];
      blockMask[b] = nm;
      blockLoop[b] = static_cast<char>(ol || el);
      blockVal[b] = blockF(nm, blockLoop[b] != 0);
      sum += blockVal[b] - ov;
      assign[idx] = b;
      self(self, idx + 1);
      sum -= blockVal[b] - ov;
      blockMask[b] = om;
      blockLoop[b] = ol;
      blockVal[b] = ov;
    }
    if (!enforceThin || overlapOk(em, -1)) {
      blockMask[blockCount] = em;
      blockLoop[blockCount] = static_cast<char>(el);
      blockVal[blockCount] = blockF(em, el);
      sum += blockVal[blockCount];
      assign[idx] = blockCount;
      ++blockCount;
      self(self, idx + 1);
      --blockCount;
      sum -= blockVal[blockCount];
    }
    assign[idx] = -1;
  };
  rec(rec, 0);
}

struct BruteBest {
  int value = std::numeric_limits<int>::max();
  std::uint32_t discardMask = 0;
  std::vector<Element> kept;
  std::vector<int> assign;
  int blockCount = 0;
};

inline RankCertificate buildCertificate(const BruteBest& best,
                                        const std::vector<Element>& loopElems) {
  RankCertificate cert;
  cert.rank = best.value;
  std::vector<Element> discarded;
  for (std::size_t i = 0; i < loopElems.size(); ++i)
    if (best.discardMask & (std::uint32_t{1} << i)) discarded.push_back(loopElems[i]);
  cert.discarded = ElementSet(std::move(discarded));
  std::vector<std::vector<Element>> blocks(best.blockCount);
  for (std::size_t i = 0; i < best.kept.size(); ++i) blocks[best.assign[i]].push_back(best.kept[i]);
  for (auto& b : blocks) cert.parts.emplace_back(std::move(b));
  return cert;
}

}  // namespace detail

// Exact rank by minimizing |T'| + Σ f(T_i) over discard sets and partitions
// of the rest. Discards are drawn from T ∩ L only: a discarded edge and a
// singleton edge part cost the same, so the minimum is unchanged.
// Bell-number growth; hard abort beyond maxElements.
inline RankCertificate rankBruteForce(const LoopedSimpleGraph& g, const ElementSet& t,
                                      int maxElements = 12) {
  if (t.empty()) return {};
  if (t.size() > maxElements)
    throw std::runtime_error("rankBruteForce: element count exceeds bound");
  const auto& items = t.items();
  const auto m = detail::compactMasks(g, items);
  std::vector<Element> loopElems;
  std::vector<int> loopPos;
  for (int i = 0; i < t.size(); ++i)
    if (m.isLoop[i]) {
      loopElems.push_back(items[i]);
      loopPos.push_back(i);
    }
  detail::BruteBest best;
  const std::uint32_t dlimit = std::uint32_t{1} << loopElems.size();
  for (std::uint32_t dmask = 0; dmask < dlimit; ++dmask) {
    const int fixedCost = std::popcount(dmask);
    if (fixedCost >= best.value) continue;
    std::vector<Element> kept;
    std::vector<std::uint64_t> masks;
    std::vector<char> loops;
    for (int i = 0, li = 0; i < t.size(); ++i) {
      if (m.isLoop[i]) {
        const bool dropped = (dmask >> li) & 1;
        ++li;
        if (dropped) continue;
      }
      kept.push_back(items[i]);
      masks.push_back(m.mask[i]);
      loops.push_back(m.isLoop[i]);
    }
    detail::PartitionBest pb;
    pb.value = best.value;
    detail::searchPartitions(masks, loops, fixedCost, false, 0, pb);
    if (pb.value < best.value)
      best = {pb.value, dmask, std::move(kept), std::move(pb.assign), pb.blockCount};
  }
  return detail::buildCertificate(best, loopElems);
}

// As rankBruteForce, but the search space is the restricted one: discards are
// loops, all undiscarded loops share one part, and part supports overlap
// pairwise in at most one vertex. The minimum value is the same; the
// certificate converts directly to an admissible 1-thin cover.
inline RankCertificate rankBruteForceRestricted(const LoopedSimpleGraph& g,
                                                const ElementSet& t, int maxElements = 12) {
  if (t.empty()) return {};
  if (t.size() > maxElements)
    throw std::runtime_error("rankBruteForceRestricted: element count exceeds bound");
  const auto& items = t.items();
  const auto m = detail::compactMasks(g, items);
  std::vector<Element> loopElems, edgeElems;
  std::vector<std::uint64_t> edgeMasks;
  std::vector<std::uint64_t> loopMasks;
  for (int i = 0; i < t.size(); ++i) {
    if (m.isLoop[i]) {
      loopElems.push_back(items[i]);
      loopMasks.push_back(m.mask[i]);
    } else {
      edgeElems.push_back(items[i]);
      edgeMasks.push_back(m.mask[i]);
    }
  }
  const std::vector<char> edgeLoops(edgeElems.size(), 0);
  detail::BruteBest best;
  const std::uint32_t dlimit = std::uint32_t{1} << loopElems.size();
  for (std::uint32_t dmask = 0; dmask < dlimit; ++dmask) {
    const int fixedCost = std::popcount(dmask);
    if (fixedCost >= best.value) continue;
    std::uint64_t seed = 0;
    for (std::size_t li = 0; li < loopElems.size(); ++li)
      if (!((dmask >> li) & 1)) seed |= loopMasks[li];
    detail::PartitionBest pb;
    pb.value = best.value;
    detail::searchPartitions(edgeMasks, edgeLoops, fixedCost, true, seed, pb);
    if (pb.value < best.value)
      best = {pb.value, dmask, edgeElems, std::move(pb.assign), pb.blockCount};
  }
  // Reattach the undiscarded loops to block 0 (their seeded part).
  RankCertificate cert;
  cert.rank = best.value;
  std::vector<Element> discarded, keptLoops;
  for (std::size_t i = 0; i < loopElems.size(); ++i) {
    if (best.discardMask & (std::uint32_t{1} << i))
      discarded.push_back(loopElems[i]);
    else
      keptLoops.push_back(loopElems[i]);
  }
  cert.discarded = ElementSet(std::move(discarded));
  const bool seeded = !keptLoops.empty();
  std::vector<std::vector<Element>> blocks(seeded ? std::max(best.blockCount, 1)
                                                  : best.blockCount);
  if (seeded)
    for (Element l : keptLoops) blocks[0].push_back(l);
  for (std::size_t i = 0; i < best.kept.size(); ++i)
    blocks[best.assign[i]].push_back(best.kept[i]);
  for (auto& b : blocks)
    if (!b.empty()) cert.parts.emplace_back(std::move(b));
  return cert;
}

// Submodularity of f on a concrete pair: f(T1) + f(T2) >= f(T1∪T2) + f(T1∩T2).
// Pairs with empty intersection are vacuously true (f(∅) is undefined).
inline bool checkSubmodular(const LoopedSimpleGraph& g, const ElementSet& t1,
                            const ElementSet& t2) {
  if (t1.empty() || t2.empty())
    throw std::invalid_argument("checkSubmodular: empty element set");
  const ElementSet inter = t1.intersectWith(t2);
  if (inter.empty()) return true;
  return fValue(g, t1) + fValue(g, t2) >= fValue(g, t1.unionWith(t2)) + fValue(g, inter);
}

// Union bound f(T1∪T2) <= f(T1) + f(T2), applicable when the supports share
// at least two vertices or both sides carry loops; vacuously true otherwise.
inline bool checkUnionBound(const LoopedSimpleGraph& g, const ElementSet& t1,
                            const ElementSet& t2) {
  if (t1.empty() || t2.empty())
    throw std::invalid_argument("checkUnionBound: empty element set");
  const auto s1 = vertexSupport(g, t1);
  const auto s2 = vertexSupport(g, t2);
  std::vector<int> common;
  std::set_intersection(s1.begin(), s1.end(), s2.begin(), s2.end(),
                        std::back_inserter(common));
  const bool applies = common.size() >= 2 || (t1.hasLoop() && t2.hasLoop());
  if (!applies) return true;
  return fValue(g, t1.unionWith(t2)) <= fValue(g, t1) + fValue(g, t2);
}

}  // namespace lcrigid
