#pragma once

// Admissible t-thin covers: validation, value, exact minimization through the
// restricted partition oracle, and the loopless special case.

#include "lcrigid/count.hpp"
#include "lcrigid/graph.hpp"

namespace lcrigid {

// A family {X_0, X_1, ..., X_k} of vertex sets together with a discarded loop
// set L'. X_0 is the looped member (may be empty, exempt from the size-2
// rule); all undiscarded loops must live inside X_0 and all discarded loops
// outside it. Vertex sets are kept sorted; members are ordered canonically.
struct Cover {
  std::vector<int> discardedLoops;        // loop ids
  std::vector<int> loopedMember;          // X_0
  std::vector<std::vector<int>> members;  // X_1..X_k
};

// val(X) = |L'| + 2|X_0| + Σ (2|X_i| - 3).
inline int coverValue(const Cover& c) {
  int v = static_cast<int>(c.discardedLoops.size()) +
          2 * static_cast<int>(c.loopedMember.size());
  for (const auto& x : c.members) v += 2 * static_cast<int>(x.size()) - 3;
  return v;
}

namespace detail {

inline std::vector<int> sortedUnique(const LoopedSimpleGraph& g, std::vector<int> verts) {
  for (int v : verts)
    if (v < 0 || v >= g.vertexCount()) throw std::invalid_argument("unknown vertex index");
  std::sort(verts.begin(), verts.end());
  if (std::adjacent_find(verts.begin(), verts.end()) != verts.end())
    throw std::invalid_argument("duplicate vertex in cover member");
  return verts;
}

inline int sortedIntersectionSize(const std::vector<int>& a, const std::vector<int>& b) {
  int count = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib)
      ++ia;
    else if (*ib < *ia)
      ++ib;
    else {
      ++count;
      ++ia;
      ++ib;
    }
  }
  return count;
}

}  // namespace detail

// True iff c is an admissible t-thin cover of G - L': members (other than
// X_0) have size >= 2, every edge is induced by some member, every
// undiscarded loop sits in X_0 and every discarded loop outside X_0, and all
// pairwise member intersections have size <= t. Unknown vertex indices or
// loop ids are errors, not a false verdict.
inline bool isAdmissibleThin(const LoopedSimpleGraph& g, const Cover& c, int t) {
  std::vector<std::vector<int>> sets;
  sets.push_back(detail::sortedUnique(g, c.loopedMember));
  for (const auto& x : c.members) sets.push_back(detail::sortedUnique(g, x));
  std::vector<char> discarded(g.loopCount(), 0);
  for (int l : c.discardedLoops) {
    if (l < 0 || l >= g.loopCount()) throw std::invalid_argument("unknown loop id");
    if (discarded[l]) throw std::invalid_argument("duplicate discarded loop id");
    discarded[l] = 1;
  }
  for (std::size_t i = 1; i < sets.size(); ++i)
    if (sets[i].size() < 2) return false;
  const auto& x0 = sets[0];
  auto inX0 = [&](int v) { return std::binary_search(x0.begin(), x0.end(), v); };
  for (int l = 0; l < g.loopCount(); ++l) {
    if (discarded[l] ? inX0(g.loopVertex(l)) : !inX0(g.loopVertex(l))) return false;
  }
  for (const auto& [u, v] : g.edges()) {
    bool covered = false;
    for (const auto& x : sets)
      if (std::binary_search(x.begin(), x.end(), u) &&
          std::binary_search(x.begin(), x.end(), v)) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if (detail::sortedIntersectionSize(sets[i], sets[j]) > t) return false;
  return true;
}

// Converts a restricted-partition certificate into a cover following the two
// construction cases: if some part carries loops its support becomes X_0,
// otherwise X_0 is empty and every part contributes an ordinary member.
// Throws on certificates that violate the restricted shape.
inline Cover coverFromPartition(const LoopedSimpleGraph& g, const RankCertificate& cert) {
  for (Element e : cert.discarded) {
    if (!g.hasElement(e)) throw std::invalid_argument("malformed certificate: unknown element");
    if (e.kind != ElementKind::loop)
      throw std::invalid_argument("malformed certificate: discarded edge");
  }
  int loopyPart = -1;
  int value = cert.discarded.size();
  std::vector<std::vector<int>> supports;
  for (std::size_t i = 0; i < cert.parts.size(); ++i) {
    const ElementSet& part = cert.parts[i];
    if (part.empty()) throw std::invalid_argument("malformed certificate: empty part");
    for (Element e : part)
      if (cert.discarded.contains(e))
        throw std::invalid_argument("malformed certificate: part overlaps discard set");
    for (std::size_t j = 0; j < i; ++j)
      if (!cert.parts[j].intersectWith(part).empty())
        throw std::invalid_argument("malformed certificate: overlapping parts");
    if (part.hasLoop()) {
      if (loopyPart >= 0)
        throw std::invalid_argument("malformed certificate: two parts carry loops");
      loopyPart = static_cast<int>(i);
    }
    value += fValue(g, part);
    supports.push_back(vertexSupport(g, part));
  }
  for (std::size_t i = 0; i < supports.size(); ++i)
    for (std::size_t j = i + 1; j < supports.size(); ++j)
      if (detail::sortedIntersectionSize(supports[i], supports[j]) > 1)
        throw std::invalid_argument("malformed certificate: parts overlap in two vertices");
  if (value != cert.rank)
    throw std::invalid_argument("malformed certificate: stated rank does not match value");
  Cover c;
  for (Element e : cert.discarded) c.discardedLoops.push_back(e.index);
  if (loopyPart >= 0) {
    c.loopedMember = supports[loopyPart];
    for (int l : c.discardedLoops)
      if (std::binary_search(c.loopedMember.begin(), c.loopedMember.end(), g.loopVertex(l)))
        throw std::invalid_argument("malformed certificate: discarded loop inside X_0");
    for (std::size_t i = 0; i < supports.size(); ++i)
      if (static_cast<int>(i) != loopyPart) c.members.push_back(supports[i]);
  } else {
    c.members = supports;
  }
  std::sort(c.members.begin(), c.members.end());
  return c;
}

struct MinCoverResult {
  int value = 0;
  Cover cover;
};

// Exact minimum of val over all discard sets and admissible 1-thin covers,
// found by minimizing over restricted partitions and converting; the
// conversion attains the same value, so this is the rank of G.
inline MinCoverResult minCover(const LoopedSimpleGraph& g, int maxElements = 12) {
  const RankCertificate cert = rankBruteForceRestricted(g, g.allElements(), maxElements);
  return {cert.rank, coverFromPartition(g, cert)};
}

// Loopless special case: the looped member is forced empty and nothing is
// discarded, so the value is Σ (2|X_i| - 3) over the members.
inline MinCoverResult lyRank(const LoopedSimpleGraph& g, int maxElements = 12) {
  if (g.loopCount() > 0) throw std::invalid_argument("lyRank: graph has loops");
  return minCover(g, maxElements);
}

}  // namespace lcrigid
