#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lindef/errors.hpp"

namespace lindef {

/// Vertex subset as a bitmask; graphs have at most 64 vertices.
using VertexSet = std::uint64_t;

/// Undirected edge, normalized so that first < second.
using Edge = std::pair<int, int>;

inline constexpr VertexSet vertex_bit(int v) { return VertexSet{1} << v; }
inline int vertex_count(VertexSet s) { return std::popcount(s); }
inline constexpr VertexSet all_vertices(int n) {
  return n >= 64 ? ~VertexSet{0} : (vertex_bit(n) - 1);
}

template <class Fn>
void for_each_vertex(VertexSet s, Fn&& fn) {
  while (s) {
    int v = std::countr_zero(s);
    s &= s - 1;
    fn(v);
  }
}

inline std::vector<int> to_vertex_list(VertexSet s) {
  std::vector<int> out;
  for_each_vertex(s, [&](int v) { out.push_back(v); });
  return out;
}

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

/// Finite simple graph on vertices 0..n-1 with bitset adjacency.
class Graph {
 public:
  static constexpr int max_order = 64;

  Graph() = default;
  explicit Graph(int n) : n_(n) {
    if (n < 0 || n > max_order)
      throw InputError("graph order must be in [0, 64], got " + std::to_string(n));
    adj_.assign(static_cast<std::size_t>(n), 0);
  }
  Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return n_; }
  VertexSet vertices() const { return all_vertices(n_); }
  VertexSet neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
  }
  VertexSet closed_neighbors(int v) const { return neighbors(v) | vertex_bit(v); }
  bool adjacent(int u, int v) const { return (neighbors(u) >> v) & 1u; }
  int degree(int v) const { return vertex_count(neighbors(v)); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (auto a : adj_) twice += static_cast<std::size_t>(vertex_count(a));
    return twice / 2;
  }

  /// Edges sorted lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
      for_each_vertex(adj_[static_cast<std::size_t>(u)] & ~all_vertices(u + 1),
                      [&](int v) { out.emplace_back(u, v); });
    return out;
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InputError("loop at vertex " + std::to_string(u) + " is not allowed");
    adj_[static_cast<std::size_t>(u)] |= vertex_bit(v);
    adj_[static_cast<std::size_t>(v)] |= vertex_bit(u);
  }
  void remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[static_cast<std::size_t>(u)] &= ~vertex_bit(v);
    adj_[static_cast<std::size_t>(v)] &= ~vertex_bit(u);
  }

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw InputError("vertex " + std::to_string(v) + " out of range for graph of order " +
                       std::to_string(n_));
  }

  int n_ = 0;
  std::vector<VertexSet> adj_;
};

inline Graph complement(const Graph& g) {
  Graph c(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) c.add_edge(u, v);
  return c;
}

/// Induced subgraph together with the map new index -> old vertex.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> vertices;
};

inline InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> vs) {
  VertexSet seen = 0;
  for (int v : vs) {
    if (v < 0 || v >= g.order())
      throw InputError("vertex " + std::to_string(v) + " out of range for induced subgraph");
    if (seen & vertex_bit(v)) throw InputError("duplicate vertex " + std::to_string(v));
    seen |= vertex_bit(v);
  }
  InducedSubgraph out{Graph(static_cast<int>(vs.size())), {vs.begin(), vs.end()}};
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (g.adjacent(vs[i], vs[j])) out.graph.add_edge(static_cast<int>(i), static_cast<int>(j));
  return out;
}

inline InducedSubgraph induced_subgraph(const Graph& g, VertexSet vs) {
  if (vs & ~g.vertices()) throw InputError("vertex set exceeds graph order");
  auto list = to_vertex_list(vs);
  return induced_subgraph(g, std::span<const int>(list));
}

/// G minus an edge; the vertex set is unchanged.
inline Graph delete_edge(const Graph& g, Edge e) {
  if (!g.adjacent(e.first, e.second))
    throw InputError("{" + std::to_string(e.first) + "," + std::to_string(e.second) +
                     "} is not an edge");
  Graph h = g;
  h.remove_edge(e.first, e.second);
  return h;
}

inline InducedSubgraph delete_vertex(const Graph& g, int v) {
  return induced_subgraph(g, g.vertices() & ~vertex_bit(v));
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(u + a.order(), v + a.order());
  return g;
}

// Standard families. Vertices are numbered along the cycle/path.

inline Graph cycle_graph(int n) {
  if (n < 3) throw InputError("cycles need at least 3 vertices");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

/// gK2: edges {2i, 2i+1}.
inline Graph matching_graph(int g) {
  Graph m(2 * g);
  for (int i = 0; i < g; ++i) m.add_edge(2 * i, 2 * i + 1);
  return m;
}

inline Graph anticycle_graph(int n) { return complement(cycle_graph(n)); }

/// K_{a,b} with parts {0..a-1} and {a..a+b-1}.
inline Graph complete_bipartite_graph(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

}  // namespace lindef
