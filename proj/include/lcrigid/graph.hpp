#pragma once

// Looped simple graphs G = (V, E, L): simple edges plus a multiset of loops.
// Graphs are immutable after construction; every "mutation" builds a new graph.

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace lcrigid {

// A member of E ∪ L. Loop ids are positions in the owning graph's loop list
// (file order), so two loops at the same vertex stay distinguishable.
enum class ElementKind : unsigned char { edge, loop };

struct Element {
  ElementKind kind = ElementKind::edge;
  int index = 0;

  friend constexpr auto operator<=>(const Element&, const Element&) = default;
};

constexpr Element edgeElement(int index) { return Element{ElementKind::edge, index}; }
constexpr Element loopElement(int index) { return Element{ElementKind::loop, index}; }

// Sorted, duplicate-free set of elements of one graph.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::vector<Element> elements) : items_(std::move(elements)) {
    normalize();
  }

  static ElementSet ofEdges(const std::vector<int>& edgeIds) {
    std::vector<Element> items;
    items.reserve(edgeIds.size());
    for (int e : edgeIds) items.push_back(edgeElement(e));
    return ElementSet(std::move(items));
  }
  static ElementSet ofLoops(const std::vector<int>& loopIds) {
    std::vector<Element> items;
    items.reserve(loopIds.size());
    for (int l : loopIds) items.push_back(loopElement(l));
    return ElementSet(std::move(items));
  }

  bool empty() const { return items_.empty(); }
  int size() const { return static_cast<int>(items_.size()); }
  const std::vector<Element>& items() const { return items_; }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  bool contains(Element e) const {
    return std::binary_search(items_.begin(), items_.end(), e);
  }
  void insert(Element e) {
    auto it = std::lower_bound(items_.begin(), items_.end(), e);
    if (it == items_.end() || *it != e) items_.insert(it, e);
  }
  void erase(Element e) {
    auto it = std::lower_bound(items_.begin(), items_.end(), e);
    if (it != items_.end() && *it == e) items_.erase(it);
  }

  // Edges sort before loops, so a trailing loop element decides this.
  bool hasLoop() const { return !items_.empty() && items_.back().kind == ElementKind::loop; }

  int loopCount() const {
    int c = 0;
    for (auto it = items_.rbegin(); it != items_.rend() && it->kind == ElementKind::loop; ++it) ++c;
    return c;
  }
  int edgeCount() const { return size() - loopCount(); }

  ElementSet unionWith(const ElementSet& other) const {
    std::vector<Element> out;
    out.reserve(items_.size() + other.items_.size());
    std::set_union(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                   std::back_inserter(out));
    return fromSorted(std::move(out));
  }
  ElementSet intersectWith(const ElementSet& other) const {
    std::vector<Element> out;
    std::set_intersection(items_.begin(), items_.end(), other.items_.begin(),
                          other.items_.end(), std::back_inserter(out));
    return fromSorted(std::move(out));
  }
  ElementSet difference(const ElementSet& other) const {
    std::vector<Element> out;
    std::set_difference(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                        std::back_inserter(out));
    return fromSorted(std::move(out));
  }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  static ElementSet fromSorted(std::vector<Element> items) {
    ElementSet s;
    s.items_ = std::move(items);
    return s;
  }
  void normalize() {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
  }

  std::vector<Element> items_;
};

class LoopedSimpleGraph {
 public:
  LoopedSimpleGraph() = default;

  // Endpoints and loop vertices are indices into vertexNames. Validates all
  // looped-simple-graph invariants (distinct nonempty names, no self-edges,
  // no duplicate edges).
  LoopedSimpleGraph(std::vector<std::string> vertexNames,
                    const std::vector<std::array<int, 2>>& edges,
                    const std::vector<int>& loops)
      : names_(std::move(vertexNames)) {
    const int n = static_cast<int>(names_.size());
    index_.reserve(names_.size());
    for (int v = 0; v < n; ++v) {
      if (names_[v].empty()) throw std::invalid_argument("empty vertex name");
      if (!index_.emplace(names_[v], v).second)
        throw std::invalid_argument("duplicate vertex name '" + names_[v] + "'");
    }
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
      checkVertex(u);
      checkVertex(v);
      if (u == v)
        throw std::invalid_argument("self-edge at '" + names_[u] + "'");
      edges_.push_back({std::min(u, v), std::max(u, v)});
    }
    auto sorted = edges_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("duplicate edge");
    loops_.reserve(loops.size());
    for (int v : loops) {
      checkVertex(v);
      loops_.push_back(v);
    }
    adj_.assign(n, {});
    for (auto [u, v] : edges_) {
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  }

  static LoopedSimpleGraph fromNames(std::vector<std::string> vertexNames,
                                     const std::vector<std::array<std::string, 2>>& edges,
                                     const std::vector<std::string>& loops) {
    std::unordered_map<std::string, int> idx;
    for (int v = 0; v < static_cast<int>(vertexNames.size()); ++v) {
      if (vertexNames[v].empty()) throw std::invalid_argument("empty vertex name");
      if (!idx.emplace(vertexNames[v], v).second)
        throw std::invalid_argument("duplicate vertex name '" + vertexNames[v] + "'");
    }
    auto resolve = [&](const std::string& name) {
      auto it = idx.find(name);
      if (it == idx.end())
        throw std::invalid_argument("vertex '" + name + "' not declared");
      return it->second;
    };
    std::vector<std::array<int, 2>> e;
    e.reserve(edges.size());
    for (const auto& [a, b] : edges) e.push_back({resolve(a), resolve(b)});
    std::vector<int> l;
    l.reserve(loops.size());
    for (const auto& a : loops) l.push_back(resolve(a));
    return LoopedSimpleGraph(std::move(vertexNames), e, l);
  }

  int vertexCount() const { return static_cast<int>(names_.size()); }
  int edgeCount() const { return static_cast<int>(edges_.size()); }
  int loopCount() const { return static_cast<int>(loops_.size()); }
  int elementCount() const { return edgeCount() + loopCount(); }

  const std::vector<std::string>& vertexNames() const { return names_; }
  const std::string& vertexName(int v) const {
    checkVertex(v);
    return names_[v];
  }
  int vertexIndex(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end())
      throw std::invalid_argument("unknown vertex '" + name + "'");
    return it->second;
  }
  std::optional<int> findVertex(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  // Edge endpoints are normalized to u < v; edge order is construction order.
  const std::vector<std::array<int, 2>>& edges() const { return edges_; }
  std::array<int, 2> edge(int e) const {
    checkEdge(e);
    return edges_[e];
  }
  // loops()[l] is the vertex carrying loop id l.
  const std::vector<int>& loops() const { return loops_; }
  int loopVertex(int l) const {
    checkLoop(l);
    return loops_[l];
  }

  const std::vector<int>& neighbors(int v) const {
    checkVertex(v);
    return adj_[v];
  }
  bool hasEdge(int u, int v) const {
    checkVertex(u);
    checkVertex(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  int loopsAt(int v) const {
    checkVertex(v);
    int c = 0;
    for (int lv : loops_)
      if (lv == v) ++c;
    return c;
  }

  ElementSet allElements() const {
    std::vector<Element> items;
    items.reserve(elementCount());
    for (int e = 0; e < edgeCount(); ++e) items.push_back(edgeElement(e));
    for (int l = 0; l < loopCount(); ++l) items.push_back(loopElement(l));
    return ElementSet(std::move(items));
  }

  bool hasElement(Element e) const {
    return e.index >= 0 && (e.kind == ElementKind::edge ? e.index < edgeCount()
                                                        : e.index < loopCount());
  }

  // E_G(X): edges with both endpoints in X.
  ElementSet inducedEdges(const std::vector<int>& X) const {
    const auto mark = vertexMask(X);
    std::vector<Element> items;
    for (int e = 0; e < edgeCount(); ++e)
      if (mark[edges_[e][0]] && mark[edges_[e][1]]) items.push_back(edgeElement(e));
    return ElementSet(std::move(items));
  }

  // L_G(X): loops whose vertex lies in X.
  ElementSet inducedLoops(const std::vector<int>& X) const {
    const auto mark = vertexMask(X);
    std::vector<Element> items;
    for (int l = 0; l < loopCount(); ++l)
      if (mark[loops_[l]]) items.push_back(loopElement(l));
    return ElementSet(std::move(items));
  }

  ElementSet inducedElements(const std::vector<int>& X) const {
    return inducedEdges(X).unionWith(inducedLoops(X));
  }

  // New graph without the given edges/loops; vertices are untouched and the
  // surviving edges/loops are renumbered in their original relative order.
  LoopedSimpleGraph deleteElements(const ElementSet& s) const {
    for (Element e : s)
      if (!hasElement(e)) throw std::invalid_argument("unknown element");
    std::vector<std::array<int, 2>> e;
    for (int i = 0; i < edgeCount(); ++i)
      if (!s.contains(edgeElement(i))) e.push_back(edges_[i]);
    std::vector<int> l;
    for (int i = 0; i < loopCount(); ++i)
      if (!s.contains(loopElement(i))) l.push_back(loops_[i]);
    return LoopedSimpleGraph(names_, e, l);
  }

  // New graph without the given vertices and everything incident to them.
  LoopedSimpleGraph deleteVertices(const std::vector<int>& T) const {
    const auto drop = vertexMask(T);
    std::vector<std::string> names;
    std::vector<int> remap(vertexCount(), -1);
    for (int v = 0; v < vertexCount(); ++v)
      if (!drop[v]) {
        remap[v] = static_cast<int>(names.size());
        names.push_back(names_[v]);
      }
    std::vector<std::array<int, 2>> e;
    for (auto [u, v] : edges_)
      if (!drop[u] && !drop[v]) e.push_back({remap[u], remap[v]});
    std::vector<int> l;
    for (int v : loops_)
      if (!drop[v]) l.push_back(remap[v]);
    return LoopedSimpleGraph(std::move(names), e, l);
  }

  // Partition of V into maximal connected vertex sets; loops are irrelevant.
  // Components are listed by smallest member, each sorted.
  std::vector<std::vector<int>> connectedComponents() const {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(vertexCount(), 0);
    std::vector<int> stack;
    for (int s = 0; s < vertexCount(); ++s) {
      if (seen[s]) continue;
      std::vector<int> comp;
      stack.push_back(s);
      seen[s] = 1;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        comp.push_back(v);
        for (int w : adj_[v])
          if (!seen[w]) {
            seen[w] = 1;
            stack.push_back(w);
          }
      }
      std::sort(comp.begin(), comp.end());
      comps.push_back(std::move(comp));
    }
    return comps;
  }

  // Vertex connectivity of the underlying simple graph (max-flow based).
  int vertexConnectivity() const;

 private:
  void checkVertex(int v) const {
    if (v < 0 || v >= vertexCount()) throw std::invalid_argument("unknown vertex index");
  }
  void checkEdge(int e) const {
    if (e < 0 || e >= edgeCount()) throw std::invalid_argument("unknown edge index");
  }
  void checkLoop(int l) const {
    if (l < 0 || l >= loopCount()) throw std::invalid_argument("unknown loop id");
  }
  std::vector<char> vertexMask(const std::vector<int>& X) const {
    std::vector<char> mark(vertexCount(), 0);
    for (int v : X) {
      checkVertex(v);
      mark[v] = 1;
    }
    return mark;
  }

  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::array<int, 2>> edges_;
  std::vector<int> loops_;
  std::vector<std::vector<int>> adj_;
};

// V(T): the set of vertices incident with the edges and loops of T, sorted.
inline std::vector<int> vertexSupport(const LoopedSimpleGraph& g, const ElementSet& t) {
  std::vector<int> vs;
  vs.reserve(2 * t.size());
  for (Element e : t) {
    if (!g.hasElement(e)) throw std::invalid_argument("unknown element");
    if (e.kind == ElementKind::edge) {
      vs.push_back(g.edges()[e.index][0]);
      vs.push_back(g.edges()[e.index][1]);
    } else {
      vs.push_back(g.loops()[e.index]);
    }
  }
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

namespace detail {

// Number of internally vertex-disjoint s-t paths (s,t non-adjacent): unit
// vertex capacities via node splitting, BFS augmentation.
inline int vertexDisjointPaths(const std::vector<std::vector<int>>& adj, int s, int t) {
  const int n = static_cast<int>(adj.size());
  struct Arc {
    int to, cap, rev;
  };
  std::vector<std::vector<Arc>> g(2 * n);
  auto addArc = [&](int a, int b, int cap) {
    g[a].push_back({b, cap, static_cast<int>(g[b].size())});
    g[b].push_back({a, 0, static_cast<int>(g[a].size()) - 1});
  };
  const int inf = std::numeric_limits<int>::max() / 2;
  for (int v = 0; v < n; ++v) addArc(2 * v, 2 * v + 1, 1);  // in -> out
  for (int v = 0; v < n; ++v)
    for (int w : adj[v]) addArc(2 * v + 1, 2 * w, inf);
  const int source = 2 * s + 1, sink = 2 * t;
  int flow = 0;
  while (true) {
    std::vector<int> prevNode(2 * n, -1), prevArc(2 * n, -1);
    std::vector<int> queue{source};
    prevNode[source] = source;
    for (std::size_t qi = 0; qi < queue.size() && prevNode[sink] < 0; ++qi) {
      int v = queue[qi];
      for (int ai = 0; ai < static_cast<int>(g[v].size()); ++ai) {
        const Arc& a = g[v][ai];
        if (a.cap > 0 && prevNode[a.to] < 0) {
          prevNode[a.to] = v;
          prevArc[a.to] = ai;
          queue.push_back(a.to);
        }
      }
    }
    if (prevNode[sink] < 0) break;
    for (int v = sink; v != source; v = prevNode[v]) {
      Arc& a = g[prevNode[v]][prevArc[v]];
      a.cap -= 1;
      g[v][a.rev].cap += 1;
    }
    ++flow;
  }
  return flow;
}

}  // namespace detail

inline int LoopedSimpleGraph::vertexConnectivity() const {
  const int n = vertexCount();
  if (n <= 1) return 0;
  bool complete = true;
  for (int v = 0; v < n && complete; ++v)
    if (static_cast<int>(adj_[v].size()) != n - 1) complete = false;
  if (complete) return n - 1;
  int best = std::numeric_limits<int>::max();
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t)
      if (!hasEdge(s, t)) best = std::min(best, detail::vertexDisjointPaths(adj_, s, t));
  return best;
}

}  // namespace lcrigid
