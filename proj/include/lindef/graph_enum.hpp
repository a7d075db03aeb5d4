#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "lindef/graph.hpp"
#include "lindef/graph_algorithms.hpp"

namespace lindef {

/// Largest order for which adjacency codes fit in 64 bits.
inline constexpr int max_code_order = 11;

/// Pairs are listed column by column, (0,1),(0,2),(1,2),(0,3),...; the first
/// pair is the most significant bit, so integer order is lexicographic order.
inline int code_length(int n) { return n * (n - 1) / 2; }

inline std::uint64_t adjacency_code(const Graph& g) {
  const int n = g.order();
  if (n > max_code_order) throw InputError("adjacency codes support at most 11 vertices");
  std::uint64_t code = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) code = (code << 1) | (g.adjacent(i, j) ? 1u : 0u);
  return code;
}

inline Graph graph_from_code(int n, std::uint64_t code) {
  if (n < 0 || n > max_code_order) throw InputError("adjacency codes support at most 11 vertices");
  Graph g(n);
  int bit = code_length(n);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if ((code >> --bit) & 1u) g.add_edge(i, j);
  return g;
}

namespace detail {

// Lexicographically minimal adjacency code over all vertex orders. Vertices
// are placed one position at a time; placing position j fixes the j bits of
// column j, so only candidates minimizing that column can stay optimal.
class CodeMinimizer {
 public:
  explicit CodeMinimizer(const Graph& g) : g_(g), n_(g.order()), total_(code_length(n_)) {
    order_.reserve(static_cast<std::size_t>(n_));
  }

  std::uint64_t run(std::vector<int>* best_order) {
    if (n_ <= 1) {
      if (best_order) *best_order = n_ == 1 ? std::vector<int>{0} : std::vector<int>{};
      return 0;
    }
    search(0, 0, 0);
    if (best_order) *best_order = best_order_;
    return best_;
  }

 private:
  void search(int depth, std::uint64_t prefix, int bits) {
    if (depth == n_) {
      if (!have_best_ || prefix < best_) {
        best_ = prefix;
        best_order_ = order_;
        have_best_ = true;
      }
      return;
    }
    VertexSet unused = g_.vertices() & ~placed_;
    std::uint64_t min_col = ~std::uint64_t{0};
    std::uint64_t cols[64];
    for_each_vertex(unused, [&](int v) {
      std::uint64_t c = 0;
      for (int i = 0; i < depth; ++i) c = (c << 1) | (g_.adjacent(order_[static_cast<std::size_t>(i)], v) ? 1u : 0u);
      cols[v] = c;
      min_col = std::min(min_col, c);
    });
    std::uint64_t next = (prefix << depth) | min_col;
    int next_bits = bits + depth;
    if (have_best_) {
      std::uint64_t best_prefix = best_ >> (total_ - next_bits);
      if (next > best_prefix) return;
      if (next < best_prefix) have_best_ = false;  // any completion beats it
    }
    for_each_vertex(unused, [&](int v) {
      if (cols[v] != min_col) return;
      placed_ |= vertex_bit(v);
      order_.push_back(v);
      search(depth + 1, next, next_bits);
      order_.pop_back();
      placed_ &= ~vertex_bit(v);
    });
  }

  const Graph& g_;
  int n_;
  int total_;
  VertexSet placed_ = 0;
  std::vector<int> order_;
  bool have_best_ = false;
  std::uint64_t best_ = 0;
  std::vector<int> best_order_;
};

}  // namespace detail

/// Minimal adjacency code over all n! relabelings.
inline std::uint64_t canonical_code(const Graph& g) {
  if (g.order() > max_code_order) throw InputError("canonical codes support at most 11 vertices");
  return detail::CodeMinimizer(g).run(nullptr);
}

/// The representative graph whose adjacency code is canonical_code(g).
inline Graph canonical_form(const Graph& g) { return graph_from_code(g.order(), canonical_code(g)); }

inline bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.edge_count() == b.edge_count() &&
         canonical_code(a) == canonical_code(b);
}

/// Applies a relabeling: vertex v of g becomes perm[v].
inline Graph relabel(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw InputError("permutation size mismatch");
  Graph h(g.order());
  for (auto [u, v] : g.edges())
    h.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  return h;
}

inline constexpr int max_enumeration_order = 8;

/// Canonical codes of all graphs on exactly n vertices, ascending.
inline std::vector<std::uint64_t> enumerate_graph_codes(int n) {
  if (n < 1 || n > max_enumeration_order)
    throw InputError("enumeration supports 1 <= n <= 8, got " + std::to_string(n));
  std::vector<std::uint64_t> level{0};
  for (int m = 2; m <= n; ++m) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t code : level) {
      Graph base = graph_from_code(m - 1, code);
      for (VertexSet nb = 0; nb < vertex_bit(m - 1); ++nb) {
        Graph g(m);
        for (auto [u, v] : base.edges()) g.add_edge(u, v);
        for_each_vertex(nb, [&](int u) { g.add_edge(u, m - 1); });
        next.push_back(canonical_code(g));
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    level = std::move(next);
  }
  return level;
}

/// One representative per isomorphism class on exactly n vertices, in
/// ascending canonical-code order.
inline std::vector<Graph> enumerate_graphs(int n, bool connected_only = false) {
  std::vector<Graph> out;
  for (std::uint64_t code : enumerate_graph_codes(n)) {
    Graph g = graph_from_code(n, code);
    if (!connected_only || is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace lindef
