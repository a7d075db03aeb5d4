#include <gtest/gtest.h>

#include <random>

#include "common.hpp"

using namespace lindef;

namespace {
MonomialIdeal worked_example() { return read_ideal_file(data_path("worked_example.ideal")).ideal; }

std::vector<int> degrees(const std::vector<Multidegree>& shifts) {
  std::vector<int> out;
  for (const auto& s : shifts) out.push_back(total_degree(s));
  std::sort(out.begin(), out.end());
  return out;
}

// sum_i (-1)^i beta_{i,a} is the same for every resolution in multidegree a
template <class K>
std::map<Multidegree, long long> euler(const GradedFreeComplex<K>& c) {
  std::map<Multidegree, long long> out;
  for (int i = 0; i < c.length(); ++i)
    for (const auto& s : c.shifts(i)) out[s] += (i % 2 == 0) ? 1 : -1;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}
}  // namespace

TEST(Resolution, WorkedExampleTaylor) {
  auto t = taylor_complex(worked_example(), RationalField{});
  EXPECT_EQ(t.ranks(), (std::vector<std::size_t>{3, 3, 1}));
  EXPECT_TRUE(t.is_complex());
  EXPECT_TRUE(t.has_unit_entries());
  auto m = minimalize_complex(t);
  EXPECT_EQ(m.ranks(), (std::vector<std::size_t>{3, 2}));
  EXPECT_FALSE(m.has_unit_entries());
  EXPECT_TRUE(m.is_complex());
  EXPECT_EQ(degrees(m.shifts(1)), (std::vector<int>{4, 5}));
}

TEST(Resolution, WorkedExampleLattice) {
  RationalField q;
  auto r = minimal_resolution(worked_example(), q);
  EXPECT_TRUE(r.minimal());
  EXPECT_TRUE(r.is_complex());
  EXPECT_EQ(degrees(r.shifts(0)), (std::vector<int>{2, 3, 4}));
  EXPECT_EQ(degrees(r.shifts(1)), (std::vector<int>{4, 5}));
  // d_1 = [[-y^2, 0], [x, -y^2], [0, x]]
  EXPECT_EQ(r.entry_monomial(1, 0, 0), (Multidegree{0, 2}));
  EXPECT_EQ(r.entry_monomial(1, 1, 0), (Multidegree{1, 0}));
  EXPECT_EQ(r.entry_monomial(1, 1, 1), (Multidegree{0, 2}));
  EXPECT_EQ(r.entry_monomial(1, 2, 1), (Multidegree{1, 0}));
  EXPECT_TRUE(q.is_zero(r.differential(1).get(2, 0)));
  EXPECT_TRUE(q.is_zero(r.differential(1).get(0, 1)));
  EXPECT_EQ(r.differential(1).get(0, 0), -r.differential(1).get(1, 0));
}

TEST(Resolution, TaylorCapIsAResourceError) {
  auto i = edge_ideal(complete_graph(7));
  EXPECT_THROW(taylor_complex(i, PrimeField(2)), ResourceError);
  try {
    taylor_complex(i, PrimeField(2));
  } catch (const ResourceError& e) {
    EXPECT_NE(std::string(e.what()).find("--long-running"), std::string::npos);
  }
  EXPECT_THROW(lcm_lattice(i, 100), ResourceError);
}

TEST(Resolution, HochsterKnownTables) {
  // I(C5): 5 quadrics, 5 cubic syzygies in degree 3, 1 in degree 5
  auto t = hochster_betti(cycle_graph(5), FieldSpec(0));
  EXPECT_EQ(t.get(0, 2), 5);
  EXPECT_EQ(t.get(1, 3), 5);
  EXPECT_EQ(t.get(2, 5), 1);
  EXPECT_EQ(t.total(1), 5);
  EXPECT_EQ(*t.regularity(), 3);
  EXPECT_EQ(*t.projective_dimension(), 2);
  auto z = hochster_betti(Graph(3), FieldSpec(0));
  EXPECT_TRUE(z.empty());
  EXPECT_FALSE(z.regularity().has_value());
}

TEST(Resolution, AllRoutesAgreeOnRandomGraphs) {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = random_graph(6, 0.4, rng);
    if (g.edge_count() == 0 || g.edge_count() > 10) continue;
    auto i = edge_ideal(g);
    for (auto f : both_fields()) {
      auto h = hochster_betti(i, f);
      EXPECT_TRUE(h.same_numbers(compute_betti(i, f, {BettiMethod::Lattice})));
      EXPECT_TRUE(h.same_numbers(compute_betti(i, f, {BettiMethod::Taylor})));
    }
  }
}

TEST(Resolution, NonSquarefreeRoutesAgree) {
  std::mt19937 rng(59);
  std::uniform_int_distribution<int> e(0, 3);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Multidegree> gens;
    for (int g = 0; g < 6; ++g) gens.push_back({e(rng), e(rng), e(rng)});
    MonomialIdeal i(3, gens);
    if (i.is_zero() || i.is_unit() || i.size() > 12) continue;
    for (auto f : both_fields()) {
      auto lattice = compute_betti(i, f, {BettiMethod::Lattice});
      EXPECT_TRUE(lattice.same_numbers(compute_betti(i, f, {BettiMethod::Taylor})));
    }
  }
}

TEST(Resolution, CancellationOrderDoesNotMatter) {
  std::mt19937 rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = random_graph(6, 0.4, rng);
    if (g.edge_count() == 0 || g.edge_count() > 10) continue;
    auto t = taylor_complex(edge_ideal(g), PrimeField(3));
    auto lo = minimalize_complex(t, CancellationOrder::LowestFirst);
    auto hi = minimalize_complex(t, CancellationOrder::HighestFirst);
    EXPECT_TRUE(lo.is_complex());
    EXPECT_TRUE(hi.is_complex());
    EXPECT_TRUE(betti_table(lo).same_numbers(betti_table(hi)));
    EXPECT_EQ(euler(t), euler(lo));
  }
}

TEST(Resolution, GradedPiecesOfC7) {
  auto i = edge_ideal(cycle_graph(7));
  auto r = minimal_resolution(i, RationalField{});
  auto d = graded_piece_dims(i, r, 3);
  EXPECT_EQ(d.free_module, 49);
  EXPECT_EQ(d.ideal, 42);
  EXPECT_EQ(d.syzygy, 7);
}

TEST(Resolution, BettiTableFormats) {
  auto t = hochster_betti(cycle_graph(5), FieldSpec(2));
  EXPECT_EQ(t.to_text(), "field ZZ/2\ni\\j-i  2  3\n0      5  .\n1      5  .\n2      .  1\n");
  auto j = t.to_json();
  EXPECT_EQ(j.dump(), R"({"entries":[[0,2,5],[1,3,5],[2,5,1]],"field":2,"schema":1})");
  EXPECT_TRUE(BettiTable::from_json(j).same_graded(t));
}
