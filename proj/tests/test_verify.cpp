#include <gtest/gtest.h>

#include "common.hpp"

using namespace lindef;

TEST(Verify, CycleFormula) {
  auto check = verify("cycle-lind", 10, FieldSpec(0));
  EXPECT_TRUE(check.passed());
  std::vector<std::pair<int, int>> values;
  for (const auto& v : check.verdicts) values.emplace_back(v.values["n"], v.values["lind"]);
  EXPECT_EQ(values, (std::vector<std::pair<int, int>>{{3, 0}, {4, 0}, {5, 2}, {6, 2}, {7, 2}, {8, 4}, {9, 4}, {10, 4}}));
}

TEST(Verify, FrobergOverF2) {
  auto check = verify("froberg", 6, FieldSpec(2));
  EXPECT_TRUE(check.passed());
  EXPECT_EQ(check.classes, 156u);
  EXPECT_TRUE(check.counterexamples().empty());
}

TEST(Verify, BoundsOnFiveVertices) {
  auto check = verify("bounds", 5, FieldSpec(0));
  EXPECT_TRUE(check.passed());
  EXPECT_EQ(check.classes, 34u);
}

TEST(Verify, SmallRunsOfEveryStatement) {
  for (const auto& id : theorem_ids())
    for (auto f : both_fields()) {
      auto check = verify(id, 5, f);
      EXPECT_TRUE(check.passed()) << id << " over " << f.name();
      EXPECT_TRUE(check.counterexamples().empty()) << id << " over " << f.name() << "\n" << check.to_text();
    }
}

TEST(Verify, UnknownTheorem) {
  EXPECT_THROW(verify("riemann", 5, FieldSpec(0)), InputError);
  EXPECT_THROW(verify("cycle-lind", 2, FieldSpec(0)), InputError);
  EXPECT_THROW(verify("froberg", 9, FieldSpec(0)), InputError);
}

TEST(Verify, DeterministicAcrossWorkerCounts) {
  VerifyOptions one, many;
  one.workers = 1;
  many.workers = 4;
  for (const char* id : {"ld1", "copair-splitting"}) {
    auto a = verify(id, 6, FieldSpec(2), one).to_json().dump();
    auto b = verify(id, 6, FieldSpec(2), many).to_json().dump();
    EXPECT_EQ(a, b) << id;
  }
}

TEST(Verify, ConnectedOnly) {
  VerifyOptions opt;
  opt.connected_only = true;
  auto check = verify("froberg", 6, FieldSpec(0), opt);
  EXPECT_EQ(check.classes, 112u);
  EXPECT_TRUE(check.to_json()["connected_only"].get<bool>());
}

TEST(Verify, ReportsCounterexamples) {
  TheoremCheck c;
  c.theorem = "demo";
  c.verdicts.push_back({cycle_graph(5), true, false, {{"lind", 2}}});
  EXPECT_FALSE(c.passed());
  EXPECT_NE(c.to_text().find("counterexample n=5 edges 0-1 0-4 1-2 2-3 3-4"), std::string::npos);
  c.experimental = true;
  EXPECT_TRUE(c.passed());
}

TEST(Verify, ParallelForRethrowsLowestIndex) {
  try {
    parallel_for(20, 3, [](std::size_t i) {
      if (i == 7 || i == 13) throw InputError(std::to_string(i));
    });
    FAIL();
  } catch (const InputError& e) {
    EXPECT_STREQ(e.what(), "7");
  }
}

TEST(Analyze, FiveCycle) {
  auto rep = analyze_graph(read_graph_file(data_path("cycle5.txt")), FieldSpec(0));
  ASSERT_TRUE(rep.graph.has_value());
  EXPECT_FALSE(rep.graph->weakly_chordal);
  EXPECT_EQ(rep.graph->inmat, 1);
  EXPECT_EQ(*rep.betti.regularity(), 3);
  EXPECT_EQ(*rep.betti.projective_dimension(), 2);
  EXPECT_EQ(rep.lind, 2);
  auto j = rep.to_json();
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["lind"], 2);
  EXPECT_NE(rep.to_text().find("lind=2"), std::string::npos);
}

TEST(Analyze, TwoDisjointEdges) {
  auto rep = analyze_graph(read_graph_file(data_path("matching2.txt")), FieldSpec(2));
  EXPECT_EQ(rep.lind, 1);
  EXPECT_EQ(*rep.betti.regularity(), 3);
  EXPECT_EQ(*rep.betti.projective_dimension(), 1);
  EXPECT_EQ(rep.graph->d, 2);
}

TEST(Analyze, IdealPair) {
  auto i1 = read_ideal_file(data_path("i1.ideal"));
  auto i2 = read_ideal_file(data_path("i2.ideal"));
  auto a = analyze_ideal(i1.ideal, i1.vars, FieldSpec(0));
  auto b = analyze_ideal(i2.ideal, i2.vars, FieldSpec(0));
  EXPECT_TRUE(a.betti.same_graded(b.betti));
  EXPECT_EQ(a.to_json()["betti"], b.to_json()["betti"]);
  EXPECT_EQ(a.lind, 0);
  EXPECT_EQ(b.lind, 1);
  EXPECT_FALSE(a.graph.has_value());
}

TEST(Analyze, ResourceLimitIsReported) {
  LindOptions tiny;
  tiny.lattice_cap = 50;
  auto rep = analyze_graph(cycle_graph(9), FieldSpec(0), tiny);
  EXPECT_FALSE(rep.lind.has_value());
  EXPECT_NE(rep.lind_skipped.find("lattice"), std::string::npos);
  EXPECT_TRUE(rep.to_json()["lind"].is_null());
  EXPECT_NE(rep.to_text().find("lind=skipped: "), std::string::npos);
}
