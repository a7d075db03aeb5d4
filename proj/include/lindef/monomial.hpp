#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "lindef/errors.hpp"
#include "lindef/graph.hpp"

namespace lindef {

/// Exponent vector of a monomial; its length is the number of variables.
using Multidegree = std::vector<int>;

inline int total_degree(const Multidegree& a) {
  int d = 0;
  for (int e : a) d += e;
  return d;
}

inline bool divides(const Multidegree& a, const Multidegree& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

inline Multidegree lcm(const Multidegree& a, const Multidegree& b) {
  Multidegree out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = std::max(a[k], b[k]);
  return out;
}

inline Multidegree gcd(const Multidegree& a, const Multidegree& b) {
  Multidegree out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = std::min(a[k], b[k]);
  return out;
}

/// a - b; b must divide a.
inline Multidegree quotient(const Multidegree& a, const Multidegree& b) {
  Multidegree out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    out[k] = a[k] - b[k];
    if (out[k] < 0) throw PreconditionError("quotient of non-dividing monomials");
  }
  return out;
}

inline Multidegree product(const Multidegree& a, const Multidegree& b) {
  Multidegree out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] + b[k];
  return out;
}

inline bool is_squarefree(const Multidegree& a) {
  return std::all_of(a.begin(), a.end(), [](int e) { return e <= 1; });
}

/// Variables with positive exponent, as a bitmask (first 64 variables).
inline VertexSet support(const Multidegree& a) {
  VertexSet s = 0;
  for (std::size_t k = 0; k < a.size() && k < 64; ++k)
    if (a[k] > 0) s |= vertex_bit(static_cast<int>(k));
  return s;
}

inline Multidegree squarefree_monomial(int nvars, VertexSet s) {
  Multidegree a(static_cast<std::size_t>(nvars), 0);
  for_each_vertex(s, [&](int v) {
    if (v >= nvars) throw InputError("variable index out of range");
    a[static_cast<std::size_t>(v)] = 1;
  });
  return a;
}

inline Multidegree variable_monomial(int nvars, int v) {
  if (v < 0 || v >= nvars) throw InputError("variable index " + std::to_string(v) + " out of range");
  Multidegree a(static_cast<std::size_t>(nvars), 0);
  a[static_cast<std::size_t>(v)] = 1;
  return a;
}

/// Monomial ideal stored by its minimal generators, sorted descending
/// lexicographically (x0 > x1 > ...). The unit ideal has the generator 1.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  MonomialIdeal(int nvars, std::vector<Multidegree> gens) : nvars_(nvars) {
    if (nvars < 0) throw InputError("negative variable count");
    for (const auto& g : gens) {
      if (static_cast<int>(g.size()) != nvars)
        throw InputError("generator length " + std::to_string(g.size()) + " != " +
                         std::to_string(nvars) + " variables");
      for (int e : g)
        if (e < 0) throw InputError("negative exponent");
    }
    gens_ = minimal_set(std::move(gens));
  }

  static MonomialIdeal zero(int nvars) { return MonomialIdeal(nvars, {}); }
  static MonomialIdeal unit(int nvars) {
    return MonomialIdeal(nvars, {Multidegree(static_cast<std::size_t>(nvars), 0)});
  }

  int nvars() const { return nvars_; }
  const std::vector<Multidegree>& gens() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && total_degree(gens_[0]) == 0; }
  bool is_squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const auto& g) { return lindef::is_squarefree(g); });
  }

  bool contains(const Multidegree& m) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](const auto& g) { return divides(g, m); });
  }

  Multidegree lcm_of_generators() const {
    Multidegree out(static_cast<std::size_t>(nvars_), 0);
    for (const auto& g : gens_) out = lcm(out, g);
    return out;
  }

  bool operator==(const MonomialIdeal&) const = default;

 private:
  static std::vector<Multidegree> minimal_set(std::vector<Multidegree> gens) {
    std::sort(gens.begin(), gens.end(), [](const auto& a, const auto& b) {
      int da = total_degree(a), db = total_degree(b);
      return da != db ? da < db : a > b;
    });
    std::vector<Multidegree> kept;
    for (auto& g : gens)
      if (std::none_of(kept.begin(), kept.end(), [&](const auto& k) { return divides(k, g); }))
        kept.push_back(std::move(g));
    std::sort(kept.begin(), kept.end(), std::greater<>());
    return kept;
  }

  int nvars_ = 0;
  std::vector<Multidegree> gens_;
};

inline MonomialIdeal minimalize(std::vector<Multidegree> gens, int nvars) {
  return MonomialIdeal(nvars, std::move(gens));
}

/// I(G) in one variable per vertex.
inline MonomialIdeal edge_ideal(const Graph& g) {
  std::vector<Multidegree> gens;
  for (auto [u, v] : g.edges())
    gens.push_back(squarefree_monomial(g.order(), vertex_bit(u) | vertex_bit(v)));
  return MonomialIdeal(g.order(), std::move(gens));
}

namespace detail {
inline void check_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.nvars() != b.nvars())
    throw InputError("ideals live in rings with " + std::to_string(a.nvars()) + " and " +
                     std::to_string(b.nvars()) + " variables");
}
inline void check_same_ring(const MonomialIdeal& a, const Multidegree& m) {
  if (static_cast<int>(m.size()) != a.nvars())
    throw InputError("monomial has " + std::to_string(m.size()) + " exponents, ring has " +
                     std::to_string(a.nvars()) + " variables");
}
}  // namespace detail

inline MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  detail::check_same_ring(a, b);
  auto gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return MonomialIdeal(a.nvars(), std::move(gens));
}

inline MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  detail::check_same_ring(a, b);
  std::vector<Multidegree> gens;
  for (const auto& g : a.gens())
    for (const auto& h : b.gens()) gens.push_back(lcm(g, h));
  return MonomialIdeal(a.nvars(), std::move(gens));
}

inline MonomialIdeal product_by_monomial(const MonomialIdeal& a, const Multidegree& m) {
  detail::check_same_ring(a, m);
  std::vector<Multidegree> gens;
  for (const auto& g : a.gens()) gens.push_back(product(g, m));
  return MonomialIdeal(a.nvars(), std::move(gens));
}

/// (a : m), generated by g / gcd(g, m).
inline MonomialIdeal colon(const MonomialIdeal& a, const Multidegree& m) {
  detail::check_same_ring(a, m);
  std::vector<Multidegree> gens;
  for (const auto& g : a.gens()) gens.push_back(quotient(g, gcd(g, m)));
  return MonomialIdeal(a.nvars(), std::move(gens));
}

struct VariablePartition {
  MonomialIdeal j;  // generators not divisible by the variable
  MonomialIdeal l;  // the divisible ones, divided by it
};

/// a = J + x_v L.
inline VariablePartition variable_partition(const MonomialIdeal& a, int v) {
  if (v < 0 || v >= a.nvars()) throw InputError("variable index " + std::to_string(v) + " out of range");
  std::vector<Multidegree> j, l;
  for (const auto& g : a.gens()) {
    if (g[static_cast<std::size_t>(v)] > 0) {
      auto q = g;
      --q[static_cast<std::size_t>(v)];
      l.push_back(std::move(q));
    } else {
      j.push_back(g);
    }
  }
  return {MonomialIdeal(a.nvars(), std::move(j)), MonomialIdeal(a.nvars(), std::move(l))};
}

/// Sub-ideal generated by the generators dividing m.
inline MonomialIdeal restrict_to(const MonomialIdeal& a, const Multidegree& m) {
  detail::check_same_ring(a, m);
  std::vector<Multidegree> gens;
  for (const auto& g : a.gens())
    if (divides(g, m)) gens.push_back(g);
  return MonomialIdeal(a.nvars(), std::move(gens));
}

/// Calls fn on every monomial of total degree d, descending lex.
template <class Fn>
void for_each_monomial_of_degree(int nvars, int d, Fn&& fn) {
  if (d < 0) return;
  if (nvars == 0) {
    if (d == 0) fn(Multidegree{});
    return;
  }
  Multidegree a(static_cast<std::size_t>(nvars), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t k, int left) {
    if (k + 1 == a.size()) {
      a[k] = left;
      fn(static_cast<const Multidegree&>(a));
      a[k] = 0;
      return;
    }
    for (int e = left; e >= 0; --e) {
      a[k] = e;
      rec(k + 1, left - e);
    }
    a[k] = 0;
  };
  rec(0, d);
}

/// Ideal generated by the degree-d monomials of a.
inline MonomialIdeal degree_part(const MonomialIdeal& a, int d) {
  if (d < 0) throw InputError("degree must be nonnegative");
  std::vector<Multidegree> gens;
  for (const auto& g : a.gens()) {
    int dg = total_degree(g);
    if (dg > d) continue;
    for_each_monomial_of_degree(a.nvars(), d - dg, [&](const Multidegree& m) { gens.push_back(product(g, m)); });
  }
  return MonomialIdeal(a.nvars(), std::move(gens));
}

// ---------------------------------------------------------------------------
// Text format: "x1*x2^3, x4" over a declared variable list.

inline std::vector<std::string> default_variable_names(int nvars) {
  std::vector<std::string> names;
  for (int k = 0; k < nvars; ++k) names.push_back("x" + std::to_string(k));
  return names;
}

inline std::string format_monomial(const Multidegree& a, const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars.at(k);
    if (a[k] > 1) out += "^" + std::to_string(a[k]);
  }
  return out.empty() ? "1" : out;
}

inline std::string format_ideal(const MonomialIdeal& ideal, const std::vector<std::string>& vars) {
  if (static_cast<int>(vars.size()) != ideal.nvars()) throw InputError("variable list length mismatch");
  if (ideal.is_zero()) return "0";
  std::string out;
  for (const auto& g : ideal.gens()) {
    if (!out.empty()) out += ", ";
    out += format_monomial(g, vars);
  }
  return "(" + out + ")";
}

inline std::string format_ideal(const MonomialIdeal& ideal) {
  return format_ideal(ideal, default_variable_names(ideal.nvars()));
}

namespace detail {

inline std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(strip(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(strip(cur));
  return parts;
}

inline Multidegree parse_monomial(const std::string& text, const std::vector<std::string>& vars) {
  Multidegree a(vars.size(), 0);
  if (text == "1") return a;
  if (text.empty()) throw InputError("empty monomial");
  for (const auto& factor : split(text, '*')) {
    if (factor.empty()) throw InputError("empty factor in '" + text + "'");
    if (std::isdigit(static_cast<unsigned char>(factor[0])) || factor[0] == '-' || factor[0] == '+')
      throw InputError("coefficients are not allowed: '" + factor + "' in '" + text + "'");
    auto caret = factor.find('^');
    std::string name = strip(factor.substr(0, caret));
    int exponent = 1;
    if (caret != std::string::npos) {
      std::string e = strip(factor.substr(caret + 1));
      std::size_t used = 0;
      try {
        exponent = std::stoi(e, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != e.size() || exponent < 0)
        throw InputError("bad exponent '" + e + "' in '" + text + "'");
    }
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) throw InputError("unknown variable '" + name + "' in '" + text + "'");
    a[static_cast<std::size_t>(it - vars.begin())] += exponent;
  }
  return a;
}

}  // namespace detail

/// Parses "x1*x2, x1^4" over vars. "0" or an empty string is the zero ideal.
inline MonomialIdeal parse_ideal(const std::string& text, const std::vector<std::string>& vars) {
  std::string body = detail::strip(text);
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')')
    body = detail::strip(body.substr(1, body.size() - 2));
  int nvars = static_cast<int>(vars.size());
  if (body.empty() || body == "0") return MonomialIdeal::zero(nvars);
  std::vector<Multidegree> gens;
  for (const auto& term : detail::split(body, ','))
    gens.push_back(detail::parse_monomial(term, vars));
  return MonomialIdeal(nvars, std::move(gens));
}

inline std::vector<std::string> parse_variable_list(const std::string& text) {
  std::vector<std::string> vars;
  for (auto& name : detail::split(text, ',')) {
    if (name.empty()) throw InputError("empty variable name");
    if (!std::isalpha(static_cast<unsigned char>(name[0])))
      throw InputError("variable names must start with a letter: '" + name + "'");
    for (char c : name)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
        throw InputError("bad character in variable name '" + name + "'");
    if (std::find(vars.begin(), vars.end(), name) != vars.end())
      throw InputError("duplicate variable '" + name + "'");
    vars.push_back(name);
  }
  return vars;
}

struct IdealWithNames {
  MonomialIdeal ideal;
  std::vector<std::string> vars;
};

/// Ideal file: a "vars: x1, x2, ..." line, then the generators
/// comma-separated over one or more lines. '#' starts a comment.
inline IdealWithNames parse_ideal_file_text(const std::string& text) {
  std::istringstream in(text);
  std::string raw, body;
  std::vector<std::string> vars;
  bool have_vars = false;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = detail::strip(raw.substr(0, raw.find('#')));
    if (s.empty()) continue;
    try {
      if (s.rfind("vars:", 0) == 0) {
        if (have_vars) throw InputError("duplicate vars: line");
        vars = parse_variable_list(s.substr(5));
        have_vars = true;
        continue;
      }
      if (!have_vars) throw InputError("a 'vars:' line must come first");
      for (const auto& term : detail::split(s, ','))
        if (!term.empty()) detail::parse_monomial(term, vars);
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(line) + ": " + e.what());
    }
    if (!body.empty()) body += ",";
    body += s;
  }
  if (!have_vars) throw InputError("ideal file has no 'vars:' line");
  std::vector<Multidegree> gens;
  for (const auto& term : detail::split(body, ','))
    if (!term.empty()) gens.push_back(detail::parse_monomial(term, vars));
  return {MonomialIdeal(static_cast<int>(vars.size()), std::move(gens)), vars};
}

inline IdealWithNames read_ideal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open ideal file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_ideal_file_text(buf.str());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace lindef
