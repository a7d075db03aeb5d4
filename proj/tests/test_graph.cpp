#include <gtest/gtest.h>

#include <random>

#include "common.hpp"

using namespace lindef;

TEST(Graph, BasicQueries) {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 1);
  g.add_edge(1, 0);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_TRUE(g.adjacent(1, 2));
  EXPECT_FALSE(g.adjacent(0, 2));
  EXPECT_EQ(g.degree(1), 2);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
  EXPECT_THROW(g.add_edge(3, 3), InputError);
  EXPECT_THROW(g.add_edge(0, 4), InputError);
}

TEST(Graph, Families) {
  EXPECT_EQ(cycle_graph(5).edge_count(), 5u);
  EXPECT_EQ(path_graph(5).edge_count(), 4u);
  EXPECT_EQ(complete_graph(6).edge_count(), 15u);
  EXPECT_EQ(matching_graph(3).edges(), (std::vector<Edge>{{0, 1}, {2, 3}, {4, 5}}));
  EXPECT_EQ(anticycle_graph(6).edge_count(), 9u);
  EXPECT_EQ(complete_bipartite_graph(2, 3).edge_count(), 6u);
  EXPECT_EQ(complement(complement(cycle_graph(7))), cycle_graph(7));
}

TEST(Graph, InducedSubgraphAndDeletion) {
  auto g = cycle_graph(6);
  std::vector<int> keep{0, 1, 2, 4};
  auto sub = induced_subgraph(g, keep);
  EXPECT_EQ(sub.graph.order(), 4);
  EXPECT_EQ(sub.graph.edge_count(), 2u);
  EXPECT_EQ(sub.vertices, keep);
  EXPECT_EQ(delete_edge(g, {0, 1}).edge_count(), 5u);
  EXPECT_EQ(delete_vertex(g, 0).graph, path_graph(5));
  EXPECT_EQ(disjoint_union(path_graph(2), path_graph(2)), matching_graph(2));
}

TEST(Graph, Chordality) {
  EXPECT_TRUE(is_chordal(complete_graph(5)));
  EXPECT_TRUE(is_chordal(path_graph(6)));
  EXPECT_FALSE(is_chordal(cycle_graph(4)));
  EXPECT_TRUE(is_weakly_chordal(cycle_graph(4)));
  EXPECT_FALSE(is_weakly_chordal(cycle_graph(5)));
  EXPECT_FALSE(is_weakly_chordal(anticycle_graph(6)));
  EXPECT_TRUE(is_co_chordal(complete_bipartite_graph(3, 3)));
  EXPECT_FALSE(is_co_chordal(matching_graph(2)));
}

TEST(Graph, ChordalityAgreesWithInducedCycleSearch) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = random_graph(7, 0.2 + 0.6 * (trial % 5) / 4.0, rng);
    EXPECT_EQ(is_chordal(g), !has_long_induced_cycle_bruteforce(g, 4));
    EXPECT_EQ(is_weakly_chordal(g), !has_long_induced_cycle_bruteforce(g, 5) &&
                                        !has_long_induced_cycle_bruteforce(complement(g), 5));
  }
}

namespace {
int induced_matching_bruteforce(const Graph& g) {
  auto edges = g.edges();
  int best = 0;
  for (std::uint32_t mask = 1; mask < (1u << edges.size()); ++mask) {
    std::vector<Edge> m;
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (mask >> i & 1) m.push_back(edges[i]);
    bool ok = true;
    for (std::size_t a = 0; a < m.size() && ok; ++a)
      for (std::size_t b = a + 1; b < m.size() && ok; ++b) {
        auto [u, v] = m[a];
        auto [x, y] = m[b];
        if (u == x || u == y || v == x || v == y || g.adjacent(u, x) || g.adjacent(u, y) || g.adjacent(v, x) ||
            g.adjacent(v, y))
          ok = false;
      }
    if (ok) best = std::max(best, static_cast<int>(m.size()));
  }
  return best;
}
}  // namespace

TEST(Graph, InducedMatchingNumber) {
  EXPECT_EQ(induced_matching_number(cycle_graph(6)), 2);
  EXPECT_EQ(induced_matching_number(path_graph(8)), 3);
  EXPECT_EQ(induced_matching_number(matching_graph(4)), 4);
  EXPECT_EQ(induced_matching_number(complete_graph(5)), 1);
  EXPECT_EQ(induced_matching_number(Graph(3)), 0);
  std::mt19937 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    auto g = random_graph(7, 0.3, rng);
    if (g.edge_count() > 14) continue;
    int expected = induced_matching_bruteforce(g);
    EXPECT_EQ(induced_matching_number(g), expected);
    auto m = maximum_induced_matching(g);
    EXPECT_EQ(static_cast<int>(m.size()), expected);
    EXPECT_TRUE(is_induced_matching(g, m));
  }
}

namespace {
// Some vertex set S containing x, y induces a path from x to y with >= 3 edges.
bool long_induced_path_bruteforce(const Graph& g, int x, int y) {
  VertexSet ends = vertex_bit(x) | vertex_bit(y);
  for (VertexSet s = 0; s <= all_vertices(g.order()); ++s) {
    if ((s & ends) != ends || vertex_count(s) < 4) continue;
    auto sub = induced_subgraph(g, s);
    const auto& h = sub.graph;
    if (h.edge_count() != static_cast<std::size_t>(h.order() - 1) || !is_connected(h)) continue;
    bool path = true;
    for (int v = 0; v < h.order(); ++v) {
      int orig = sub.vertices[static_cast<std::size_t>(v)];
      int want = (orig == x || orig == y) ? 1 : 2;
      if (h.degree(v) != want) path = false;
    }
    if (path) return true;
  }
  return false;
}
}  // namespace

TEST(Graph, TwoPairsAgreeWithPathEnumeration) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 120; ++trial) {
    int n = 4 + trial % 4;
    auto g = random_graph(n, 0.45, rng);
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y) {
        bool expected = !g.adjacent(x, y) && !long_induced_path_bruteforce(g, x, y);
        EXPECT_EQ(is_two_pair(g, x, y, TwoPairMethod::InducedPaths), expected);
        EXPECT_EQ(is_two_pair(g, x, y, TwoPairMethod::NeighborhoodCut), expected);
      }
  }
}

TEST(Graph, CoTwoPairsOfSmallGraphs) {
  EXPECT_EQ(co_two_pairs(cycle_graph(4)).size(), 4u);
  EXPECT_EQ(co_two_pairs(path_graph(4)), (std::vector<Edge>{{0, 1}, {2, 3}}));
  auto g = matching_graph(3);
  EXPECT_EQ(co_two_pairs(g), g.edges());
  // nonadjacent pairs in different components: vacuously two-pairs
  EXPECT_TRUE(is_two_pair(matching_graph(2), 0, 2));
}

TEST(Graph, DInvariant) {
  EXPECT_EQ(d_invariant(complete_bipartite_graph(2, 3)).value, 4);
  EXPECT_EQ(d_invariant(matching_graph(3)).value, 3);
  EXPECT_EQ(d_invariant(cycle_graph(4)).value, 3);
  EXPECT_EQ(d_invariant(path_graph(4)).value, 2);
  EXPECT_THROW(d_invariant(Graph(3)), DomainError);
  std::mt19937 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = random_graph(7, 0.4, rng);
    if (g.edge_count() == 0) continue;
    auto d = d_invariant(g);
    EXPECT_TRUE(is_strongly_disjoint_family(g, d.family));
    EXPECT_EQ(d.family.value(), d.value);
  }
}

TEST(Graph, BipartiteSpanOfCoTwoPair) {
  std::mt19937 rng(9);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    auto g = random_graph(7, 0.5, rng);
    if (!is_weakly_chordal(g)) continue;
    for (auto e : co_two_pairs(g)) {
      auto b = bipartite_span_of_co_two_pair(g, e);
      EXPECT_EQ(b.first | b.second, g.neighbors(e.first) | g.neighbors(e.second));
      EXPECT_EQ(b.first & b.second, 0u);
      EXPECT_TRUE(is_complete_bipartite_in(g, {b.first, b.second}));
      ++checked;
    }
  }
  EXPECT_GT(checked, 50);
  EXPECT_THROW(bipartite_span_of_co_two_pair(cycle_graph(6), {0, 1}), PreconditionError);
}
