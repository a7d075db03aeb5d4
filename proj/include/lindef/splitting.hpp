#pragma once

#include <algorithm>
#include <cstdio>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "lindef/graph_algorithms.hpp"
#include "lindef/lind.hpp"
#include "lindef/monomial.hpp"
#include "lindef/resolution.hpp"

namespace lindef {

/// One (i, j) line of the splitting equation
/// beta_{i,j}(I) = beta_{i,j}(J) + beta_{i,j}(K) + beta_{i-1,j}(J cap K).
struct SplittingLedgerRow {
  int i = 0;
  int j = 0;
  long long ideal = 0;
  long long first = 0;
  long long second = 0;
  long long intersection_prev = 0;
  /// Right side minus left side of the equation.
  long long residual() const { return first + second + intersection_prev - ideal; }
};

struct SplittingReport {
  bool is_splitting = false;
  FieldSpec field;
  std::vector<SplittingLedgerRow> ledger;
  BettiTable ideal, first, second, intersection;

  nlohmann::json to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : ledger)
      rows.push_back({{"i", r.i}, {"j", r.j}, {"I", r.ideal}, {"J", r.first}, {"K", r.second},
                      {"JcapK_prev", r.intersection_prev}, {"residual", r.residual()}});
    return {{"schema", 1}, {"field", field.characteristic()}, {"is_splitting", is_splitting}, {"ledger", rows}};
  }

  std::string to_text() const {
    std::ostringstream out;
    out << "betti splitting: " << (is_splitting ? "yes" : "no") << " over " << field.name() << "\n";
    out << "  i  j   I   J   K  JcapK[i-1]  residual\n";
    for (const auto& r : ledger) {
      char line[96];
      std::snprintf(line, sizeof line, "%3d%3d%4lld%4lld%4lld%12lld%10lld\n", r.i, r.j, r.ideal, r.first,
                    r.second, r.intersection_prev, r.residual());
      out << line;
    }
    return out.str();
  }
};

namespace detail {

inline void check_generator_partition(const MonomialIdeal& i, const MonomialIdeal& j, const MonomialIdeal& k) {
  if (i.nvars() != j.nvars() || i.nvars() != k.nvars()) throw InputError("ideals live in different rings");
  std::multiset<Multidegree> parts(j.gens().begin(), j.gens().end());
  for (const auto& g : k.gens()) {
    if (parts.count(g)) throw InputError("G(J) and G(K) share the generator " + format_monomial(g, default_variable_names(i.nvars())));
    parts.insert(g);
  }
  std::multiset<Multidegree> whole(i.gens().begin(), i.gens().end());
  if (parts != whole) throw InputError("G(J) and G(K) do not partition G(I)");
}

}  // namespace detail

/// Evaluates the splitting equation for every (i, j). G(J) and G(K) must
/// partition G(I).
inline SplittingReport is_betti_splitting(const MonomialIdeal& i, const MonomialIdeal& j, const MonomialIdeal& k,
                                          FieldSpec f, const BettiOptions& opt = {}) {
  detail::check_generator_partition(i, j, k);
  SplittingReport rep;
  rep.field = f;
  rep.ideal = compute_betti(i, f, opt);
  rep.first = compute_betti(j, f, opt);
  rep.second = compute_betti(k, f, opt);
  rep.intersection = compute_betti(intersect(j, k), f, opt);
  std::set<std::pair<int, int>> keys;
  for (const auto* t : {&rep.ideal, &rep.first, &rep.second})
    for (const auto& [key, b] : t->graded()) keys.insert(key);
  for (const auto& [key, b] : rep.intersection.graded()) keys.insert({key.first + 1, key.second});
  rep.is_splitting = true;
  for (auto [ii, jj] : keys) {
    SplittingLedgerRow row{ii, jj, rep.ideal.get(ii, jj), rep.first.get(ii, jj), rep.second.get(ii, jj),
                           rep.intersection.get(ii - 1, jj)};
    if (row.residual() != 0) rep.is_splitting = false;
    rep.ledger.push_back(row);
  }
  if (rep.is_splitting && rep.ideal.total(0) != rep.first.total(0) + rep.second.total(0))
    throw InternalError("beta_0 is not additive on a splitting");
  return rep;
}

/// I(G) = (e) + I(G minus e) for every co-two-pair e of a weakly chordal G.
inline std::vector<std::pair<Edge, SplittingReport>> co_two_pair_splittings(const Graph& g, FieldSpec f,
                                                                           const BettiOptions& opt = {}) {
  if (g.edge_count() == 0) throw DomainError("co-two-pair splittings need at least one edge");
  if (!is_weakly_chordal(g)) throw DomainError("co-two-pair splittings are only claimed for weakly chordal graphs");
  std::vector<std::pair<Edge, SplittingReport>> out;
  auto whole = edge_ideal(g);
  for (auto e : co_two_pairs(g)) {
    MonomialIdeal single(g.order(), {squarefree_monomial(g.order(), vertex_bit(e.first) | vertex_bit(e.second))});
    out.emplace_back(e, is_betti_splitting(whole, single, edge_ideal(delete_edge(g, e)), f, opt));
  }
  return out;
}

/// I = J + x_v L, requiring lind L = 0.
inline SplittingReport y_partition_splitting(const MonomialIdeal& ideal, int v, FieldSpec f,
                                             const BettiOptions& opt = {}) {
  auto [j, l] = variable_partition(ideal, v);
  if (linearity_defect(l, f) != 0) throw DomainError("L in the variable partition is not Koszul (lind L > 0)");
  return is_betti_splitting(ideal, j, product_by_monomial(l, variable_monomial(ideal.nvars(), v)), f, opt);
}

/// Values of the four ideals and the checked inequalities for a splitting.
struct SplittingInequalities {
  int lind_i = 0, lind_j = 0, lind_k = 0, lind_jk = 0;
  bool upper_bound = false;        // lind I <= max{lind J, lind K, lind(J cap K) + 1}
  bool parts_bound = false;        // max{lind J, lind K} <= max{lind(J cap K), lind I}
  bool intersection_bound = false;  // lind(J cap K) <= max{lind J, lind K, lind I - 1}
  bool pd_formula = false;         // pd I = max{pd J, pd K, pd(J cap K) + 1}
  bool reg_formula = false;        // reg I = max{reg J, reg K, reg(J cap K) - 1}
  bool conjecture = false;         // max{lind J, lind K} <= lind I (logged only)

  bool theorem_holds() const { return upper_bound && parts_bound && intersection_bound && pd_formula && reg_formula; }

  nlohmann::json to_json() const {
    return {{"lind", {{"I", lind_i}, {"J", lind_j}, {"K", lind_k}, {"JcapK", lind_jk}}},
            {"upper_bound", upper_bound}, {"parts_bound", parts_bound},
            {"intersection_bound", intersection_bound}, {"pd_formula", pd_formula},
            {"reg_formula", reg_formula}, {"conjecture", conjecture}};
  }
};

namespace detail {

inline std::optional<int> max_defined(std::initializer_list<std::optional<int>> xs) {
  std::optional<int> out;
  for (const auto& x : xs)
    if (x) out = std::max(out.value_or(*x), *x);
  return out;
}

inline std::optional<int> shifted(std::optional<int> x, int by) {
  return x ? std::optional<int>(*x + by) : std::nullopt;
}

}  // namespace detail

/// Evaluates the inequalities from known lind values of I, J, K, J cap K.
inline SplittingInequalities splitting_inequalities(const SplittingReport& rep, int lind_i, int lind_j, int lind_k,
                                                    int lind_jk) {
  if (!rep.is_splitting) throw PreconditionError("the decomposition is not a Betti splitting");
  SplittingInequalities s;
  s.lind_i = lind_i;
  s.lind_j = lind_j;
  s.lind_k = lind_k;
  s.lind_jk = lind_jk;
  s.upper_bound = lind_i <= std::max({lind_j, lind_k, lind_jk + 1});
  s.parts_bound = std::max(lind_j, lind_k) <= std::max(lind_jk, lind_i);
  s.intersection_bound = lind_jk <= std::max({lind_j, lind_k, lind_i - 1});
  s.conjecture = std::max(lind_j, lind_k) <= lind_i;
  s.pd_formula = rep.ideal.projective_dimension() ==
                 detail::max_defined({rep.first.projective_dimension(), rep.second.projective_dimension(),
                                      detail::shifted(rep.intersection.projective_dimension(), 1)});
  s.reg_formula = rep.ideal.regularity() ==
                  detail::max_defined({rep.first.regularity(), rep.second.regularity(),
                                       detail::shifted(rep.intersection.regularity(), -1)});
  return s;
}

/// Requires a passing report for the same decomposition.
inline SplittingInequalities check_splitting_inequalities(const MonomialIdeal& i, const MonomialIdeal& j,
                                                          const MonomialIdeal& k, const SplittingReport& rep,
                                                          const LindOptions& opt = {}) {
  if (!rep.is_splitting) throw PreconditionError("the decomposition is not a Betti splitting");
  FieldSpec f = rep.field;
  return splitting_inequalities(rep, linearity_defect(i, f, opt), linearity_defect(j, f, opt),
                                linearity_defect(k, f, opt), linearity_defect(intersect(j, k), f, opt));
}

inline SplittingInequalities check_splitting_inequalities(const MonomialIdeal& i, const MonomialIdeal& j,
                                                          const MonomialIdeal& k, FieldSpec f,
                                                          const LindOptions& opt = {}) {
  return check_splitting_inequalities(i, j, k, is_betti_splitting(i, j, k, f), opt);
}

}  // namespace lindef
