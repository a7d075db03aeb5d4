#include <gtest/gtest.h>

#include "common.hpp"

using namespace lindef;

namespace {
int lind(const Graph& g, FieldSpec f = FieldSpec(0)) { return linearity_defect(edge_ideal(g), f); }
}  // namespace

TEST(Hilbert, QuotientNumerators) {
  EXPECT_EQ(quotient_hilbert_numerator(MonomialIdeal::zero(2)), (TPoly{1}));
  EXPECT_EQ(quotient_hilbert_numerator(MonomialIdeal(2, {{1, 0}})), (TPoly{1, -1}));
  EXPECT_EQ(quotient_hilbert_numerator(MonomialIdeal(2, {{1, 0}, {0, 1}})), (TPoly{1, -2, 1}));
  // (x^2, xy): 1 - 2t^2 + t^3
  EXPECT_EQ(quotient_hilbert_numerator(MonomialIdeal(2, {{2, 0}, {1, 1}})), (TPoly{1, 0, -2, 1}));
}

TEST(Hilbert, SubmoduleNumerators) {
  EXPECT_EQ(free_module_numerator({{1, 1, 0}}), (TPoly{0, 0, 1}));
  LeadingModule x{{{0, 0}}, {MonomialIdeal(2, {{1, 0}})}};
  EXPECT_EQ(hilbert_numerator(x, 2), (TPoly{0, 1}));
  LeadingModule xy{{{0, 0}}, {MonomialIdeal(2, {{1, 0}, {0, 1}})}};
  EXPECT_EQ(hilbert_numerator(xy, 2), (TPoly{0, 2, -1}));
}

TEST(Groebner, BasisOfASyzygyModuleIsCertified) {
  RationalField q;
  auto r = minimal_resolution(edge_ideal(cycle_graph(6)), q);
  for (int i = 1; i < r.length(); ++i) {
    auto gb = module_groebner(differential_columns(r, i), r.shifts(i - 1), q);
    EXPECT_TRUE(gb.certified);
    EXPECT_TRUE(verify_groebner(gb, q));
  }
}

TEST(Lind, WorkedExample) {
  RationalField q;
  auto i = read_ideal_file(data_path("worked_example.ideal")).ideal;
  auto r = minimal_resolution(i, q);
  auto lc = linear_part(r);
  const auto& d = lc.complex().differential(1);
  EXPECT_EQ(d.nonzeros(), 2u);
  EXPECT_TRUE(q.is_zero(d.get(0, 0)));
  EXPECT_FALSE(q.is_zero(d.get(1, 0)));
  EXPECT_FALSE(q.is_zero(d.get(2, 1)));
  EXPECT_TRUE(linear_homology_vanishes(lc, 1));
  EXPECT_EQ(windowed_homology_dimension(lc, 1), 0);
  EXPECT_EQ(linearity_defect(i, FieldSpec(0), {.cross_check = true}), 0);
}

TEST(Lind, LinearPartNeedsMinimalComplex) {
  auto t = taylor_complex(edge_ideal(path_graph(3)), PrimeField(2));
  EXPECT_THROW(linear_part(t), PreconditionError);
}

TEST(Lind, FivecycleHasNonvanishingH2) {
  RationalField q;
  auto lc = linear_part(minimal_resolution(edge_ideal(cycle_graph(5)), q));
  EXPECT_FALSE(linear_homology_vanishes(lc, 2));
  EXPECT_GT(windowed_homology_dimension(lc, 2), 0);
  // lind counts the top index only; H_1 may survive too
  EXPECT_EQ(linear_homology_vanishes(lc, 1), windowed_homology_dimension(lc, 1) == 0);
  EXPECT_TRUE(linear_homology_vanishes(lc, 7));
}

TEST(Lind, CycleFormula) {
  for (int n = 3; n <= 9; ++n)
    for (auto f : both_fields()) EXPECT_EQ(lind(cycle_graph(n), f), 2 * ((n - 2) / 3)) << "n=" << n;
}

TEST(Lind, AnticycleFormula) {
  for (int n = 4; n <= 7; ++n) EXPECT_EQ(lind(anticycle_graph(n)), n - 3) << "n=" << n;
}

TEST(Lind, PathFormula) {
  for (int n = 2; n <= 10; ++n) EXPECT_EQ(lind(path_graph(n)), (n - 2) / 3) << "n=" << n;
}

TEST(Lind, Matchings) {
  for (int g = 1; g <= 4; ++g) EXPECT_EQ(lind(matching_graph(g)), g - 1);
}

TEST(Lind, EqualBettiTablesDifferentLind) {
  auto i1 = read_ideal_file(data_path("i1.ideal")).ideal;
  auto i2 = read_ideal_file(data_path("i2.ideal")).ideal;
  LindOptions opt;
  opt.cross_check = true;
  auto r1 = linearity_defect_report(i1, FieldSpec(0), opt);
  auto r2 = linearity_defect_report(i2, FieldSpec(0), opt);
  EXPECT_TRUE(r1.betti.same_graded(r2.betti));
  EXPECT_EQ(r1.lind, 0);
  EXPECT_EQ(r2.lind, 1);
  EXPECT_EQ(r2.nonvanishing, (std::vector<int>{1}));
}

TEST(Lind, TaylorRouteAgrees) {
  LindOptions taylor;
  taylor.resolution = BettiMethod::Taylor;
  for (int n = 3; n <= 8; ++n) {
    auto i = edge_ideal(cycle_graph(n));
    EXPECT_EQ(linearity_defect(i, FieldSpec(2), taylor), linearity_defect(i, FieldSpec(2)));
  }
}

TEST(Lind, CrossCheckOnSmallGraphs) {
  LindOptions opt;
  opt.cross_check = true;
  for (const auto& g : enumerate_graphs(5))
    for (auto f : both_fields()) EXPECT_EQ(linearity_defect(edge_ideal(g), f, opt), lind(g, f));
}

TEST(Lind, EdgeCases) {
  EXPECT_EQ(linearity_defect(MonomialIdeal::zero(3), FieldSpec(0)), 0);
  EXPECT_EQ(linearity_defect(MonomialIdeal(2, {{1, 0}, {0, 1}}), FieldSpec(0)), 0);
  EXPECT_EQ(lind(complete_graph(7)), 0);
  LindOptions tiny;
  tiny.lattice_cap = 10;
  EXPECT_THROW(linearity_defect(edge_ideal(cycle_graph(8)), FieldSpec(0), tiny), ResourceError);
}
