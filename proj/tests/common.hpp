#pragma once

#include <random>
#include <string>
#include <vector>

#include "lindef/lindef.hpp"

inline std::string data_path(const std::string& name) { return std::string(LINDEF_TEST_DATA) + "/" + name; }

inline const std::vector<lindef::FieldSpec>& both_fields() {
  static const std::vector<lindef::FieldSpec> f{lindef::FieldSpec(0), lindef::FieldSpec(2)};
  return f;
}

inline lindef::Graph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  lindef::Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

// G[S] is connected with |S| vertices and |S| edges, all of degree two.
inline bool induces_cycle(const lindef::Graph& g, lindef::VertexSet s) {
  auto h = lindef::induced_subgraph(g, s).graph;
  for (int v = 0; v < h.order(); ++v)
    if (h.degree(v) != 2) return false;
  return lindef::is_connected(h);
}

inline bool has_long_induced_cycle_bruteforce(const lindef::Graph& g, int min_length) {
  for (lindef::VertexSet s = 0; s < lindef::all_vertices(g.order()) + 1; ++s)
    if (lindef::vertex_count(s) >= min_length && induces_cycle(g, s)) return true;
  return false;
}
