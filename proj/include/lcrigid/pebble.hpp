#pragma once

// Pebble-game independence oracle for the (2,0,3)-graded-sparse matroid.
//
// Graded sparsity is the conjunction of two classic counts: the edge set
// alone must be (2,3)-sparse and the whole element set (2,0)-sparse. The
// state therefore runs two pebble structures side by side, each with two
// pebbles per vertex and the invariant pebbles(v) + outdegree(v) = 2:
//
//   edge game  (2,3): edges only; insertion needs 4 pebbles on {u,v}
//   mixed game (2,0): every element; insertion needs 1 pebble on its support
//
// An edge is accepted when both games accept, a loop when the mixed game
// does (loops never appear in edge-only subsets). Each game decides its
// count exactly, so the accepted set is graded-sparse at all times and the
// greedy run computes the matroid rank in any insertion order.

#include <optional>
#include <utility>

#include "lcrigid/graph.hpp"

namespace lcrigid {

// Which sparsity count blocked a rejected element: the edge-only
// 2|V(T)|-3 region or the loop-bearing 2|V(T)| region.
enum class PebbleRejectReason : unsigned char { edgeRegion, loopRegion };

namespace detail {

// One pebble structure: free pebbles plus an orientation of its accepted
// elements. Loops are self-arcs at their vertex; they count toward the
// outdegree but are never traversed.
class PebbleCore {
 public:
  explicit PebbleCore(int n) : pebbles_(n, 2), out_(n), loopsHeld_(n, 0) {}

  // Moves free pebbles onto {u,v} (v may be -1) until `needed` sit there or
  // nothing more is reachable; true iff the quota was met.
  bool gather(int u, int v, int needed) {
    while (freeOn(u, v) < needed)
      if (!pullPebble(u, v)) return false;
    return true;
  }

  int freeOn(int u, int v) const { return pebbles_[u] + (v >= 0 ? pebbles_[v] : 0); }

  // Consumes a pebble at u if it has one, else at v; orients the edge out of
  // the paying endpoint. Requires a pebble on {u,v}.
  void consumeEdge(int u, int v) {
    const int tail = pebbles_[u] > 0 ? u : v;
    pebbles_[tail] -= 1;
    const int arcId = static_cast<int>(arcs_.size());
    arcs_.push_back({tail, tail == u ? v : u});
    out_[tail].push_back(arcId);
  }

  void consumeLoop(int v) {
    pebbles_[v] -= 1;
    loopsHeld_[v] += 1;
  }

  int pebbles(int v) const { return pebbles_[v]; }
  int totalPebbles() const {
    int s = 0;
    for (int p : pebbles_) s += p;
    return s;
  }
  int outDegree(int v) const { return static_cast<int>(out_[v].size()) + loopsHeld_[v]; }
  int loopsHeld(int v) const { return loopsHeld_[v]; }

  bool invariantsHold(int accepted) const {
    if (totalPebbles() != 2 * static_cast<int>(pebbles_.size()) - accepted) return false;
    for (int v = 0; v < static_cast<int>(pebbles_.size()); ++v)
      if (pebbles_[v] < 0 || pebbles_[v] > 2 || pebbles_[v] + outDegree(v) != 2)
        return false;
    return true;
  }

 private:
  struct Arc {
    int tail, head;
  };

  // Depth-first search along the orientation from {u,v} for a free pebble;
  // reverses the found path to move it onto the originating endpoint. Arcs
  // are explored in ascending head order for deterministic orientations.
  bool pullPebble(int u, int v) {
    const int n = static_cast<int>(pebbles_.size());
    reached_.assign(n, 0);
    parentArc_.assign(n, -1);
    std::vector<int> stack;
    reached_[u] = 1;
    stack.push_back(u);
    if (v >= 0) {
      reached_[v] = 1;
      stack.push_back(v);
    }
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      std::vector<int> arcIds = out_[x];
      std::sort(arcIds.begin(), arcIds.end(),
                [&](int a, int b) { return arcs_[a].head < arcs_[b].head; });
      for (int arcId : arcIds) {
        const int w = arcs_[arcId].head;
        if (reached_[w]) continue;
        reached_[w] = 1;
        parentArc_[w] = arcId;
        if (pebbles_[w] > 0) {
          reversePathTo(w);
          return true;
        }
        stack.push_back(w);
      }
    }
    return false;
  }

  void reversePathTo(int w) {
    pebbles_[w] -= 1;
    int x = w;
    while (parentArc_[x] >= 0) {
      const int arcId = parentArc_[x];
      Arc& arc = arcs_[arcId];
      const int tail = arc.tail;
      auto& outList = out_[tail];
      outList.erase(std::find(outList.begin(), outList.end(), arcId));
      arc.tail = x;
      arc.head = tail;
      out_[x].push_back(arcId);
      x = tail;
    }
    pebbles_[x] += 1;
  }

  std::vector<int> pebbles_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_;
  std::vector<int> loopsHeld_;
  std::vector<char> reached_;
  std::vector<int> parentArc_;
};

}  // namespace detail

class PebbleState {
 public:
  explicit PebbleState(const LoopedSimpleGraph& g)
      : g_(&g), edgeGame_(g.vertexCount()), mixedGame_(g.vertexCount()) {}

  const LoopedSimpleGraph& graph() const { return *g_; }

  // State is unchanged on rejection.
  bool tryInsertEdge(int u, int v) {
    checkVertex(u);
    checkVertex(v);
    if (u == v) throw std::invalid_argument("tryInsertEdge: self-edge");
    const detail::PebbleCore edgeSnap = edgeGame_;
    if (!edgeGame_.gather(u, v, 4)) {
      edgeGame_ = edgeSnap;
      lastReject_ = PebbleRejectReason::edgeRegion;
      return false;
    }
    const detail::PebbleCore mixedSnap = mixedGame_;
    if (!mixedGame_.gather(u, v, 1)) {
      edgeGame_ = edgeSnap;
      mixedGame_ = mixedSnap;
      lastReject_ = PebbleRejectReason::loopRegion;
      return false;
    }
    edgeGame_.consumeEdge(u, v);
    mixedGame_.consumeEdge(u, v);
    ++accepted_;
    ++acceptedEdges_;
    return true;
  }

  bool tryInsertLoop(int v) {
    checkVertex(v);
    const detail::PebbleCore mixedSnap = mixedGame_;
    if (!mixedGame_.gather(v, -1, 1)) {
      mixedGame_ = mixedSnap;
      lastReject_ = PebbleRejectReason::loopRegion;
      return false;
    }
    mixedGame_.consumeLoop(v);
    ++accepted_;
    return true;
  }

  // The mixed game carries the externally visible state: two pebbles per vertex
  // shared by all accepted elements, loops included.
  int pebbles(int v) const {
    checkVertex(v);
    return mixedGame_.pebbles(v);
  }
  int totalPebbles() const { return mixedGame_.totalPebbles(); }
  int outDegree(int v) const {
    checkVertex(v);
    return mixedGame_.outDegree(v);
  }
  int loopsAcceptedAt(int v) const {
    checkVertex(v);
    return mixedGame_.loopsHeld(v);
  }
  int acceptedCount() const { return accepted_; }
  PebbleRejectReason lastRejectReason() const { return lastReject_; }

  bool invariantsHold() const {
    return mixedGame_.invariantsHold(accepted_) && edgeGame_.invariantsHold(acceptedEdges_);
  }

 private:
  void checkVertex(int v) const {
    if (v < 0 || v >= g_->vertexCount()) throw std::invalid_argument("unknown vertex index");
  }

  const LoopedSimpleGraph* g_;
  detail::PebbleCore edgeGame_;
  detail::PebbleCore mixedGame_;
  int accepted_ = 0;
  int acceptedEdges_ = 0;
  PebbleRejectReason lastReject_ = PebbleRejectReason::edgeRegion;
};

struct PebbleRun {
  int rank = 0;
  ElementSet basis;
  std::vector<std::pair<Element, PebbleRejectReason>> rejected;
};

inline PebbleRun runPebbleGame(const LoopedSimpleGraph& g, const std::vector<Element>& order) {
  PebbleState state(g);
  PebbleRun run;
  std::vector<Element> accepted;
  for (Element e : order) {
    if (!g.hasElement(e)) throw std::invalid_argument("unknown element");
    const bool ok = e.kind == ElementKind::edge
                        ? state.tryInsertEdge(g.edges()[e.index][0], g.edges()[e.index][1])
                        : state.tryInsertLoop(g.loops()[e.index]);
    if (ok)
      accepted.push_back(e);
    else
      run.rejected.emplace_back(e, state.lastRejectReason());
  }
  run.rank = static_cast<int>(accepted.size());
  run.basis = ElementSet(std::move(accepted));
  return run;
}

inline int pebbleRank(const LoopedSimpleGraph& g) {
  return runPebbleGame(g, g.allElements().items()).rank;
}

inline ElementSet pebbleBasis(const LoopedSimpleGraph& g) {
  return runPebbleGame(g, g.allElements().items()).basis;
}

// Rank of T in the matroid: the rank of the subgraph (V(T), T∩E, T∩L).
// Offering only T's elements is equivalent because the pebble searches never
// leave V(T).
inline int rankOfSubset(const LoopedSimpleGraph& g, const ElementSet& t) {
  return runPebbleGame(g, t.items()).rank;
}

inline bool isRigid(const LoopedSimpleGraph& g) {
  return pebbleRank(g) == 2 * g.vertexCount();
}

// A spanning (2,0,3)-tight subgraph when one exists: the basis itself, which
// then has exactly 2|V| elements.
inline std::optional<ElementSet> tightSpanningSubgraph(const LoopedSimpleGraph& g) {
  ElementSet basis = pebbleBasis(g);
  if (basis.size() != 2 * g.vertexCount()) return std::nullopt;
  return basis;
}

}  // namespace lcrigid
