#pragma once

#include <algorithm>
#include <functional>
#include <unordered_map>
#include <vector>

#include "lindef/graph.hpp"

namespace lindef {

inline bool is_clique(const Graph& g, VertexSet s) {
  bool ok = true;
  for_each_vertex(s, [&](int v) {
    if ((g.neighbors(v) & s) != (s & ~vertex_bit(v))) ok = false;
  });
  return ok;
}

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  VertexSet seen = vertex_bit(0), frontier = seen;
  while (frontier) {
    VertexSet next = 0;
    for_each_vertex(frontier, [&](int v) { next |= g.neighbors(v); });
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == g.vertices();
}

/// Vertices reachable from `from` inside the vertex set `within`.
inline VertexSet reachable(const Graph& g, int from, VertexSet within) {
  VertexSet seen = vertex_bit(from), frontier = seen;
  while (frontier) {
    VertexSet next = 0;
    for_each_vertex(frontier, [&](int v) { next |= g.neighbors(v); });
    next &= within;
    frontier = next & ~seen;
    seen |= next;
  }
  return seen;
}

inline int component_count(const Graph& g) {
  VertexSet left = g.vertices();
  int count = 0;
  while (left) {
    left &= ~reachable(g, std::countr_zero(left), g.vertices());
    ++count;
  }
  return count;
}

inline bool is_forest(const Graph& g) {
  return g.edge_count() + static_cast<std::size_t>(component_count(g)) ==
         static_cast<std::size_t>(g.order());
}

inline bool is_bipartite(const Graph& g) {
  std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
  for (int s = 0; s < g.order(); ++s) {
    if (color[static_cast<std::size_t>(s)] >= 0) continue;
    color[static_cast<std::size_t>(s)] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      bool clash = false;
      for_each_vertex(g.neighbors(v), [&](int w) {
        auto& cw = color[static_cast<std::size_t>(w)];
        if (cw < 0) {
          cw = 1 - color[static_cast<std::size_t>(v)];
          stack.push_back(w);
        } else if (cw == color[static_cast<std::size_t>(v)]) {
          clash = true;
        }
      });
      if (clash) return false;
    }
  }
  return true;
}

/// Chordality by simplicial-vertex peeling (perfect elimination ordering).
inline bool is_chordal(const Graph& g) {
  VertexSet remaining = g.vertices();
  while (remaining) {
    bool peeled = false;
    for_each_vertex(remaining, [&](int v) {
      if (peeled) return;
      if (is_clique(g, g.neighbors(v) & remaining)) {
        remaining &= ~vertex_bit(v);
        peeled = true;
      }
    });
    if (!peeled) return false;
  }
  return true;
}

/// True iff g has an induced cycle with at least min_length vertices.
/// Enumerates induced paths whose first vertex is the smallest on the cycle.
inline bool has_induced_cycle_at_least(const Graph& g, int min_length) {
  const int n = g.order();
  // path[0] = start; `blocked` holds neighbors of path[1..len-2].
  std::vector<int> path;
  std::function<bool(VertexSet, VertexSet)> extend = [&](VertexSet in_path,
                                                         VertexSet blocked) -> bool {
    const int start = path.front();
    const int last = path.back();
    VertexSet higher = g.vertices() & ~all_vertices(start + 1);
    VertexSet candidates = g.neighbors(last) & higher & ~in_path & ~blocked;
    bool found = false;
    for_each_vertex(candidates, [&](int w) {
      if (found) return;
      if (g.adjacent(w, start)) {
        if (static_cast<int>(path.size()) + 1 >= min_length) found = true;
        return;
      }
      VertexSet nb = path.size() >= 2 ? g.neighbors(last) : 0;
      path.push_back(w);
      if (extend(in_path | vertex_bit(w), blocked | nb)) found = true;
      path.pop_back();
    });
    return found;
  };
  for (int s = 0; s < n; ++s) {
    bool found = false;
    for_each_vertex(g.neighbors(s) & ~all_vertices(s + 1), [&](int v1) {
      if (found) return;
      path = {s, v1};
      if (extend(vertex_bit(s) | vertex_bit(v1), 0)) found = true;
    });
    if (found) return true;
  }
  return false;
}

/// Reference chordality test: no induced cycle of length >= 4.
inline bool is_chordal_bruteforce(const Graph& g) { return !has_induced_cycle_at_least(g, 4); }

inline bool is_weakly_chordal(const Graph& g) {
  return !has_induced_cycle_at_least(g, 5) && !has_induced_cycle_at_least(complement(g), 5);
}

inline bool is_co_chordal(const Graph& g) { return is_chordal(complement(g)); }

// ---------------------------------------------------------------------------
// Induced matchings

inline bool is_induced_matching(const Graph& g, std::span<const Edge> m) {
  VertexSet used = 0;
  for (auto [u, v] : m) {
    if (!g.adjacent(u, v)) return false;
    if (used & (vertex_bit(u) | vertex_bit(v))) return false;
    used |= vertex_bit(u) | vertex_bit(v);
  }
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      VertexSet ej = vertex_bit(m[j].first) | vertex_bit(m[j].second);
      for (int x : {m[i].first, m[i].second})
        if (g.neighbors(x) & ej) return false;
    }
  return true;
}

namespace detail {

// Largest induced matching inside the vertex set w, memoized on w.
class InducedMatchingSearch {
 public:
  explicit InducedMatchingSearch(const Graph& g) : g_(g) {}

  int solve(VertexSet w) {
    int v = -1;
    for_each_vertex(w, [&](int x) {
      if (v < 0 && (g_.neighbors(x) & w)) v = x;
    });
    if (v < 0) return 0;
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;
    int best = solve(w & ~vertex_bit(v));
    for_each_vertex(g_.neighbors(v) & w, [&](int u) {
      best = std::max(best, 1 + solve(w & ~(g_.closed_neighbors(v) | g_.closed_neighbors(u))));
    });
    memo_.emplace(w, best);
    return best;
  }

  void witness(VertexSet w, std::vector<Edge>& out) {
    int target = solve(w);
    if (target == 0) return;
    int v = -1;
    for_each_vertex(w, [&](int x) {
      if (v < 0 && (g_.neighbors(x) & w)) v = x;
    });
    if (solve(w & ~vertex_bit(v)) == target) return witness(w & ~vertex_bit(v), out);
    bool done = false;
    for_each_vertex(g_.neighbors(v) & w, [&](int u) {
      if (done) return;
      VertexSet rest = w & ~(g_.closed_neighbors(v) | g_.closed_neighbors(u));
      if (1 + solve(rest) == target) {
        out.push_back(make_edge(u, v));
        witness(rest, out);
        done = true;
      }
    });
  }

 private:
  const Graph& g_;
  std::unordered_map<VertexSet, int> memo_;
};

}  // namespace detail

/// inmat(G): the largest g such that gK2 is an induced subgraph.
inline int induced_matching_number(const Graph& g) {
  return detail::InducedMatchingSearch(g).solve(g.vertices());
}

inline std::vector<Edge> maximum_induced_matching(const Graph& g) {
  detail::InducedMatchingSearch search(g);
  std::vector<Edge> out;
  search.witness(g.vertices(), out);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Two-pairs

enum class TwoPairMethod {
  InducedPaths,     // enumerate induced x-y paths (authoritative)
  NeighborhoodCut,  // x, y disconnected once common neighbors are removed
};

namespace detail {

// Does an induced x-y path with at least 3 edges exist?
inline bool long_induced_path_exists(const Graph& g, int x, int y) {
  std::function<bool(int, int, VertexSet, VertexSet)> dfs =
      [&](int last, int length, VertexSet in_path, VertexSet blocked) -> bool {
    if (blocked & vertex_bit(y)) return false;
    VertexSet candidates = g.neighbors(last) & ~in_path & ~blocked;
    bool found = false;
    for_each_vertex(candidates, [&](int w) {
      if (found) return;
      if (w == y) {
        if (length + 1 >= 3) found = true;
        return;
      }
      if (dfs(w, length + 1, in_path | vertex_bit(w), blocked | g.neighbors(last))) found = true;
    });
    return found;
  };
  return dfs(x, 0, vertex_bit(x), 0);
}

}  // namespace detail

/// x, y nonadjacent and every induced x-y path has exactly two edges.
inline bool is_two_pair(const Graph& g, int x, int y,
                        TwoPairMethod method = TwoPairMethod::InducedPaths) {
  if (x == y || g.adjacent(x, y)) return false;
  if (method == TwoPairMethod::InducedPaths) return !detail::long_induced_path_exists(g, x, y);
  VertexSet common = g.neighbors(x) & g.neighbors(y);
  return !(reachable(g, x, g.vertices() & ~common) & vertex_bit(y));
}

inline std::vector<Edge> find_two_pairs(const Graph& g,
                                        TwoPairMethod method = TwoPairMethod::InducedPaths) {
  std::vector<Edge> out;
  for (int x = 0; x < g.order(); ++x)
    for (int y = x + 1; y < g.order(); ++y)
      if (is_two_pair(g, x, y, method)) out.emplace_back(x, y);
  return out;
}

/// Two-pairs of the complement; each one is an edge of g.
inline std::vector<Edge> co_two_pairs(const Graph& g,
                                      TwoPairMethod method = TwoPairMethod::InducedPaths) {
  return find_two_pairs(complement(g), method);
}

inline bool is_co_two_pair(const Graph& g, Edge e,
                           TwoPairMethod method = TwoPairMethod::InducedPaths) {
  return g.adjacent(e.first, e.second) && is_two_pair(complement(g), e.first, e.second, method);
}

// ---------------------------------------------------------------------------
// Strongly disjoint families of complete bipartite subgraphs

struct BipartiteBlock {
  VertexSet left = 0;
  VertexSet right = 0;
  VertexSet vertices() const { return left | right; }
  bool operator==(const BipartiteBlock&) const = default;
};

struct StronglyDisjointFamily {
  std::vector<BipartiteBlock> blocks;
  std::vector<Edge> witness_matching;  // witness_matching[i] spans blocks[i]

  /// sum |V(B_i)| - g
  int value() const {
    int total = 0;
    for (const auto& b : blocks) total += vertex_count(b.vertices());
    return total - static_cast<int>(blocks.size());
  }
};

inline bool is_complete_bipartite_in(const Graph& g, const BipartiteBlock& b) {
  if (!b.left || !b.right || (b.left & b.right)) return false;
  bool ok = true;
  for_each_vertex(b.left, [&](int v) {
    if ((g.neighbors(v) & b.right) != b.right) ok = false;
  });
  return ok;
}

inline bool is_strongly_disjoint_family(const Graph& g, const StronglyDisjointFamily& f) {
  if (f.blocks.size() != f.witness_matching.size()) return false;
  VertexSet used = 0;
  for (std::size_t i = 0; i < f.blocks.size(); ++i) {
    const auto& b = f.blocks[i];
    if (!is_complete_bipartite_in(g, b)) return false;
    if (used & b.vertices()) return false;
    used |= b.vertices();
    auto [u, v] = f.witness_matching[i];
    bool spans = ((b.left >> u & 1) && (b.right >> v & 1)) || ((b.left >> v & 1) && (b.right >> u & 1));
    if (!spans) return false;
  }
  return is_induced_matching(g, f.witness_matching);
}

namespace detail {

// Grows each matched edge into a complete bipartite block over disjoint
// vertex pools; exhaustive assignment with a remaining-vertices bound.
class BlockGrowth {
 public:
  BlockGrowth(const Graph& g, std::span<const Edge> matching, int floor)
      : g_(g), best_added_(floor) {
    VertexSet matched = 0;
    for (auto [u, v] : matching) {
      blocks_.push_back({vertex_bit(u), vertex_bit(v)});
      matched |= vertex_bit(u) | vertex_bit(v);
    }
    VertexSet touch = 0;
    for_each_vertex(matched, [&](int v) { touch |= g.neighbors(v); });
    pool_ = to_vertex_list(touch & ~matched);
  }

  std::size_t pool_size() const { return pool_.size(); }

  // Returns true if a family adding more than `floor` vertices was found.
  bool run() {
    dfs(0, 0);
    return found_;
  }
  int best_added() const { return best_added_; }
  const std::vector<BipartiteBlock>& best_blocks() const { return best_; }

 private:
  void dfs(std::size_t idx, int added) {
    if (added + static_cast<int>(pool_.size() - idx) <= best_added_) return;
    if (idx == pool_.size()) {
      best_added_ = added;
      best_ = blocks_;
      found_ = true;
      return;
    }
    int z = pool_[idx];
    VertexSet nz = g_.neighbors(z);
    for (auto& b : blocks_) {
      if ((nz & b.right) == b.right) {
        b.left |= vertex_bit(z);
        dfs(idx + 1, added + 1);
        b.left &= ~vertex_bit(z);
      }
      if ((nz & b.left) == b.left) {
        b.right |= vertex_bit(z);
        dfs(idx + 1, added + 1);
        b.right &= ~vertex_bit(z);
      }
    }
    dfs(idx + 1, added);
  }

  const Graph& g_;
  std::vector<BipartiteBlock> blocks_;
  std::vector<int> pool_;
  int best_added_;
  bool found_ = false;
  std::vector<BipartiteBlock> best_;
};

template <class Fn>
void for_each_induced_matching(const Graph& g, Fn&& fn) {
  auto edges = g.edges();
  std::vector<Edge> current;
  std::function<void(std::size_t, VertexSet)> rec = [&](std::size_t from, VertexSet forbidden) {
    for (std::size_t i = from; i < edges.size(); ++i) {
      auto [u, v] = edges[i];
      if (forbidden & (vertex_bit(u) | vertex_bit(v))) continue;
      current.push_back(edges[i]);
      fn(std::span<const Edge>(current));
      rec(i + 1, forbidden | g.closed_neighbors(u) | g.closed_neighbors(v));
      current.pop_back();
    }
  };
  rec(0, 0);
}

}  // namespace detail

struct DInvariant {
  int value = 0;
  StronglyDisjointFamily family;
};

/// d(G) = max over strongly disjoint families of sum |V(B_i)| - g, with a
/// maximizing family. Requires at least one edge.
inline DInvariant d_invariant(const Graph& g) {
  if (g.edge_count() == 0) throw DomainError("d(G) is undefined for an edgeless graph");
  DInvariant best;
  best.value = -1;
  detail::for_each_induced_matching(g, [&](std::span<const Edge> m) {
    int blocks = static_cast<int>(m.size());
    detail::BlockGrowth growth(g, m, best.value - blocks);
    if (blocks + static_cast<int>(growth.pool_size()) <= best.value) return;
    if (growth.run()) {
      best.value = blocks + growth.best_added();
      best.family.blocks = growth.best_blocks();
      best.family.witness_matching.assign(m.begin(), m.end());
    }
  });
  return best;
}

// ---------------------------------------------------------------------------
// Complete bipartite span of a co-two-pair

struct Bipartition {
  VertexSet first = 0;
  VertexSet second = 0;
  bool operator==(const Bipartition&) const = default;
};

/// For a co-two-pair {x1, x2}, a bipartition of N(x1) u N(x2) whose parts
/// span a complete bipartite subgraph. The two sides are grown from {x1}
/// and {x2} by adding every vertex that misses some member of the side,
/// until stable; remaining vertices join the second side. The result is
/// ordered smaller part first (ties: part holding the smaller vertex).
inline Bipartition bipartite_span_of_co_two_pair(const Graph& g, Edge e) {
  auto [x1, x2] = e;
  if (!is_co_two_pair(g, e))
    throw PreconditionError("{" + std::to_string(x1) + "," + std::to_string(x2) +
                            "} is not a co-two-pair");
  const VertexSet span = g.neighbors(x1) | g.neighbors(x2);
  auto grow = [&](VertexSet side) {
    VertexSet next = side;
    for_each_vertex(span, [&](int z) {
      if (side & ~g.neighbors(z)) next |= vertex_bit(z);
    });
    return next;
  };
  VertexSet v1 = vertex_bit(x1), v2 = vertex_bit(x2);
  for (;;) {
    VertexSet n1 = grow(v1), n2 = grow(v2);
    if (n1 == v1 && n2 == v2) break;
    v1 = n1;
    v2 = n2;
  }
  v2 |= span & ~(v1 | v2);
  if ((v1 & v2) || !is_complete_bipartite_in(g, {v1, v2}))
    throw InternalError("co-two-pair span is not complete bipartite");
  int c1 = vertex_count(v1), c2 = vertex_count(v2);
  bool swap = c2 < c1 || (c1 == c2 && std::countr_zero(v2) < std::countr_zero(v1));
  return swap ? Bipartition{v2, v1} : Bipartition{v1, v2};
}

}  // namespace lindef
