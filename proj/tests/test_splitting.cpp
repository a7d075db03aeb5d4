#include <gtest/gtest.h>

#include "common.hpp"

using namespace lindef;

namespace {
MonomialIdeal edges_ideal(int n, std::initializer_list<Edge> es) { return edge_ideal(Graph(n, es)); }
}  // namespace

TEST(Splitting, FourCycleEdgeSplits) {
  auto g = cycle_graph(4);
  for (auto e : g.edges()) {
    MonomialIdeal single(4, {squarefree_monomial(4, vertex_bit(e.first) | vertex_bit(e.second))});
    auto rep = is_betti_splitting(edge_ideal(g), single, edge_ideal(delete_edge(g, e)), FieldSpec(0));
    EXPECT_TRUE(rep.is_splitting);
  }
}

TEST(Splitting, SixCycleUV) {
  auto i = edge_ideal(cycle_graph(6));
  auto u = edges_ideal(6, {{0, 5}, {0, 1}, {1, 2}});
  auto v = edges_ideal(6, {{2, 3}, {3, 4}, {4, 5}});
  for (auto f : both_fields()) {
    auto rep = is_betti_splitting(i, u, v, f);
    EXPECT_TRUE(rep.is_splitting);
    for (const auto& row : rep.ledger) EXPECT_EQ(row.residual(), 0);
    auto s = check_splitting_inequalities(i, u, v, rep);
    EXPECT_EQ(s.lind_i, 2);
    EXPECT_EQ(s.lind_j, 0);
    EXPECT_EQ(s.lind_k, 0);
    EXPECT_GE(s.lind_jk, 1);
    EXPECT_TRUE(s.theorem_holds());
  }
  auto cubic = degree_part(intersect(u, v), 3);
  EXPECT_EQ(format_ideal(cubic), "(x0*x4*x5, x1*x2*x3)");
}

TEST(Splitting, FiveCycleEdgeDoesNotSplit) {
  auto g = cycle_graph(5);
  MonomialIdeal single(5, {squarefree_monomial(5, 0b11)});
  auto rep = is_betti_splitting(edge_ideal(g), single, edge_ideal(delete_edge(g, {0, 1})), FieldSpec(0));
  EXPECT_FALSE(rep.is_splitting);
  long long beta1_i = 0, beta1_j = 0, beta1_k = 0, beta0_jk = 0, residual = 0;
  for (const auto& row : rep.ledger)
    if (row.i == 1) {
      beta1_i += row.ideal, beta1_j += row.first, beta1_k += row.second, beta0_jk += row.intersection_prev;
      residual += row.residual();
    }
  EXPECT_EQ(beta1_i, 5);
  EXPECT_EQ(beta1_j, 0);
  EXPECT_EQ(beta1_k, 4);
  EXPECT_EQ(beta0_jk, 2);
  EXPECT_EQ(residual, 1);
  EXPECT_THROW(check_splitting_inequalities(edge_ideal(g), single, edge_ideal(delete_edge(g, {0, 1})), rep),
               PreconditionError);
}

TEST(Splitting, GeneratorPartitionIsChecked) {
  auto i = edge_ideal(cycle_graph(4));
  auto j = edges_ideal(4, {{0, 1}, {1, 2}});
  EXPECT_THROW(is_betti_splitting(i, j, edges_ideal(4, {{1, 2}, {2, 3}, {0, 3}}), FieldSpec(0)), InputError);
  EXPECT_THROW(is_betti_splitting(i, j, edges_ideal(4, {{2, 3}}), FieldSpec(0)), InputError);
  EXPECT_THROW(is_betti_splitting(i, j, edge_ideal(path_graph(3)), FieldSpec(0)), InputError);
}

TEST(Splitting, CoTwoPairSplittings) {
  auto m = co_two_pair_splittings(matching_graph(3), FieldSpec(2));
  EXPECT_EQ(m.size(), 3u);
  for (const auto& [e, rep] : m) EXPECT_TRUE(rep.is_splitting);
  EXPECT_EQ(co_two_pair_splittings(cycle_graph(4), FieldSpec(0)).size(), 4u);
  auto p = co_two_pair_splittings(path_graph(4), FieldSpec(0));
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p[0].first, (Edge{0, 1}));
  EXPECT_EQ(p[1].first, (Edge{2, 3}));
  EXPECT_THROW(co_two_pair_splittings(cycle_graph(5), FieldSpec(0)), DomainError);
  EXPECT_THROW(co_two_pair_splittings(Graph(3), FieldSpec(0)), DomainError);
}

TEST(Splitting, YPartition) {
  for (int n = 4; n <= 8; ++n) {
    auto rep = y_partition_splitting(edge_ideal(cycle_graph(n)), n - 1, FieldSpec(0));
    EXPECT_TRUE(rep.is_splitting) << "n=" << n;
  }
  auto i = edge_ideal(Graph(4, {{0, 1}, {1, 2}}));
  EXPECT_TRUE(y_partition_splitting(i, 3, FieldSpec(0)).is_splitting);
  auto c4 = y_partition_splitting(edge_ideal(cycle_graph(4)), 3, FieldSpec(0));
  EXPECT_TRUE(c4.is_splitting);
  EXPECT_EQ(c4.first.total(0) + c4.second.total(0), 4);
  // L = (x1*x2, x3*x4) is not Koszul
  MonomialIdeal not_koszul(5, {{1, 1, 0, 0, 1}, {0, 0, 1, 1, 1}});
  EXPECT_THROW(y_partition_splitting(not_koszul, 4, FieldSpec(0)), DomainError);
}

TEST(Splitting, MatchingSplitAtOneEdge) {
  for (int g = 2; g <= 4; ++g) {
    auto whole = edge_ideal(matching_graph(g));
    MonomialIdeal j(2 * g, {squarefree_monomial(2 * g, 0b11)});
    auto k = edge_ideal(delete_edge(matching_graph(g), {0, 1}));
    auto s = check_splitting_inequalities(whole, j, k, FieldSpec(0));
    EXPECT_EQ(s.lind_i, g - 1);
    EXPECT_EQ(s.lind_j, 0);
    EXPECT_EQ(s.lind_k, g - 2);
    EXPECT_EQ(s.lind_jk, g - 2);
    EXPECT_TRUE(s.theorem_holds());
    EXPECT_TRUE(s.conjecture);
  }
}

TEST(Splitting, ReportSerialization) {
  auto i = edge_ideal(matching_graph(2));
  auto rep = is_betti_splitting(i, edges_ideal(4, {{0, 1}}), edges_ideal(4, {{2, 3}}), FieldSpec(0));
  EXPECT_TRUE(rep.is_splitting);
  auto j = rep.to_json();
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j.dump(), rep.to_json().dump());
  EXPECT_NE(rep.to_text().find("betti splitting: yes"), std::string::npos);
}
