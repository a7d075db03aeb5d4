#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "common.hpp"

using namespace lindef;

namespace {
std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool isomorphic_bruteforce(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  for (const auto& p : all_permutations(a.order()))
    if (relabel(a, p) == b) return true;
  return false;
}
}  // namespace

TEST(Enumeration, ClassCounts) {
  const std::vector<std::size_t> expected{1, 2, 4, 11, 34, 156, 1044};
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(enumerate_graph_codes(n).size(), expected[static_cast<std::size_t>(n - 1)]);
  EXPECT_EQ(enumerate_graphs(5, true).size(), 21u);
  EXPECT_EQ(enumerate_graphs(6, true).size(), 112u);
  EXPECT_THROW(enumerate_graph_codes(9), InputError);
  EXPECT_THROW(enumerate_graph_codes(0), InputError);
}

TEST(Enumeration, OrbitCountsSumToAllLabelledGraphs) {
  for (int n = 1; n <= 6; ++n) {
    auto perms = all_permutations(n);
    long long total = 0;
    for (const auto& g : enumerate_graphs(n)) {
      long long aut = std::count_if(perms.begin(), perms.end(), [&](const auto& p) { return relabel(g, p) == g; });
      total += static_cast<long long>(perms.size()) / aut;
    }
    EXPECT_EQ(total, 1LL << (n * (n - 1) / 2)) << "n=" << n;
  }
}

TEST(Enumeration, CanonicalFormIsAnIsomorphismInvariant) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 3 + trial % 6;
    auto g = random_graph(n, 0.5, rng);
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    auto h = relabel(g, p);
    EXPECT_EQ(canonical_code(g), canonical_code(h));
    EXPECT_TRUE(isomorphic(canonical_form(g), g));
  }
}

TEST(Enumeration, IsomorphismMatchesBruteForce) {
  EXPECT_TRUE(isomorphic(cycle_graph(5), complement(cycle_graph(5))));
  EXPECT_TRUE(isomorphic_bruteforce(cycle_graph(5), complement(cycle_graph(5))));
  std::mt19937 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_graph(6, 0.5, rng), b = random_graph(6, 0.5, rng);
    EXPECT_EQ(isomorphic(a, b), isomorphic_bruteforce(a, b));
  }
}

TEST(GraphIO, TextFormatRoundTrip) {
  auto g = parse_graph_text("# a comment\nn=6\n0 1\n1 2  # trailing\n\n4 3\n");
  EXPECT_EQ(g.order(), 6);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 2}, {3, 4}}));
  EXPECT_EQ(parse_graph_text(format_graph_text(g)), g);
  EXPECT_EQ(parse_graph_text("0 1\n1 2\n").order(), 3);
}

TEST(GraphIO, TextErrorsCarryLineNumbers) {
  auto message = [](const std::string& text) {
    try {
      parse_graph_text(text);
    } catch (const InputError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(message("0 1\n1 x\n").find("line 2"), std::string::npos);
  EXPECT_NE(message("0 1\n2 2\n").find("line 2"), std::string::npos);
  EXPECT_NE(message("n=3\n0 1\n1 5\n").find("line 1"), std::string::npos);
  EXPECT_NE(message("0 1 2\n").find("line 1"), std::string::npos);
  EXPECT_NE(message("0 1\nn=4\n").find("line 2"), std::string::npos);
}

TEST(GraphIO, JsonRoundTrip) {
  auto g = cycle_graph(5);
  auto j = graph_to_json(g);
  EXPECT_EQ(j.dump(), R"({"edges":[[0,1],[0,4],[1,2],[2,3],[3,4]],"n":5})");
  EXPECT_EQ(graph_from_json(j), g);
  EXPECT_THROW(graph_from_json(nlohmann::json::parse(R"({"n":3})")), InputError);
  EXPECT_THROW(graph_from_json(nlohmann::json::parse(R"({"n":3,"edges":[[0,3]]})")), InputError);
}

TEST(GraphIO, ShippedFiles) {
  EXPECT_EQ(read_graph_file(data_path("cycle6.txt")), cycle_graph(6));
  EXPECT_EQ(read_graph_file(data_path("anticycle7.txt")), anticycle_graph(7));
  EXPECT_EQ(read_graph_file(data_path("path12.txt")), path_graph(12));
  EXPECT_EQ(read_graph_file(data_path("matching4.txt")), matching_graph(4));
  auto k = read_graph_file(data_path("katzman.txt"));
  EXPECT_EQ(k.order(), 11);
  EXPECT_EQ(k.edge_count(), 23u);
  auto dk = read_graph_file(data_path("dalili_kummini.txt"));
  EXPECT_EQ(dk.order(), 16);
  EXPECT_EQ(dk.edge_count(), 30u);
  EXPECT_TRUE(is_bipartite(dk));
  EXPECT_THROW(read_graph_file(data_path("missing.txt")), InputError);
}
