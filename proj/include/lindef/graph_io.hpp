#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "lindef/graph.hpp"

namespace lindef {

namespace detail {

inline std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

inline int parse_vertex_token(const std::string& tok, int line, int limit = Graph::max_order - 1) {
  std::size_t used = 0;
  long v = -1;
  try {
    v = std::stol(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != tok.size() || v < 0 || v > limit)
    throw InputError("line " + std::to_string(line) + ": bad vertex '" + tok + "'");
  return static_cast<int>(v);
}

}  // namespace detail

/// Edge-list text: optional "n=<count>" header, one "u v" pair per line,
/// '#' starts a comment. Without a header n is one past the largest vertex.
inline Graph parse_graph_text(std::istream& in) {
  std::string raw;
  int line = 0, n = -1, max_vertex = -1, header_line = 0;
  std::vector<std::pair<Edge, int>> edges;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = detail::trim(std::string_view(raw).substr(0, raw.find('#')));
    if (s.empty()) continue;
    if (s.rfind("n=", 0) == 0 || s.rfind("n =", 0) == 0) {
      if (n >= 0) throw InputError("line " + std::to_string(line) + ": duplicate n= header");
      if (!edges.empty())
        throw InputError("line " + std::to_string(line) + ": n= header must precede edges");
      n = detail::parse_vertex_token(detail::trim(s.substr(s.find('=') + 1)), line,
                                     Graph::max_order);
      header_line = line;
      continue;
    }
    std::istringstream fields(s);
    std::string a, b, extra;
    if (!(fields >> a >> b) || (fields >> extra))
      throw InputError("line " + std::to_string(line) + ": expected 'u v', got '" + s + "'");
    int u = detail::parse_vertex_token(a, line), v = detail::parse_vertex_token(b, line);
    if (u == v) throw InputError("line " + std::to_string(line) + ": loop at vertex " + a);
    max_vertex = std::max({max_vertex, u, v});
    edges.push_back({make_edge(u, v), line});
  }
  if (n < 0) n = max_vertex + 1;
  if (max_vertex >= n)
    throw InputError("line " + std::to_string(header_line) + ": n=" + std::to_string(n) +
                     " but vertex " + std::to_string(max_vertex) + " is used");
  Graph g(n);
  for (auto& [e, l] : edges) g.add_edge(e.first, e.second);
  return g;
}

inline Graph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  return parse_graph_text(in);
}

inline std::string format_graph_text(const Graph& g) {
  std::string out = "n=" + std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

inline Graph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw InputError("graph JSON needs fields \"n\" and \"edges\"");
  if (!j["n"].is_number_integer()) throw InputError("graph JSON: \"n\" must be an integer");
  Graph g(j["n"].get<int>());
  if (!j["edges"].is_array()) throw InputError("graph JSON: \"edges\" must be an array");
  for (std::size_t k = 0; k < j["edges"].size(); ++k) {
    const auto& e = j["edges"][k];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw InputError("graph JSON: edge " + std::to_string(k) + " must be [u, v]");
    g.add_edge(e[0].get<int>(), e[1].get<int>());
  }
  return g;
}

inline nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.order()}, {"edges", edges}};
}

/// Reads a graph file; a leading '{' selects the JSON format.
inline Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError(path + ": " + e.what());
    }
    return graph_from_json(j);
  }
  try {
    return parse_graph_text(text);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace lindef
