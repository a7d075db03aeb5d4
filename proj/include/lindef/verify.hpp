#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "lindef/graph_algorithms.hpp"
#include "lindef/graph_enum.hpp"
#include "lindef/graph_io.hpp"
#include "lindef/lind.hpp"
#include "lindef/resolution.hpp"
#include "lindef/splitting.hpp"

namespace lindef {

/// Runs fn(0..count-1) on a pool of threads. The exception thrown at the
/// lowest index is rethrown after all workers stop.
template <class Fn>
void parallel_for(std::size_t count, unsigned workers, Fn&& fn) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(count, 1)));
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::size_t failed_at = count;
  std::exception_ptr failure;
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(mu);
        if (i < failed_at) {
          failed_at = i;
          failure = std::current_exception();
        }
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
}

struct GraphVerdict {
  Graph graph;
  bool in_scope = false;
  bool pass = true;
  nlohmann::json values = nlohmann::json::object();
};

struct TheoremCheck {
  std::string theorem;
  int max_vertices = 0;
  FieldSpec field;
  bool connected_only = false;
  bool experimental = false;  // findings are logged, never a failure
  std::size_t classes = 0;
  std::vector<GraphVerdict> verdicts;  // in-scope graphs only, enumeration order

  std::vector<const GraphVerdict*> counterexamples() const {
    std::vector<const GraphVerdict*> out;
    for (const auto& v : verdicts)
      if (!v.pass) out.push_back(&v);
    return out;
  }
  bool passed() const { return experimental || counterexamples().empty(); }

  nlohmann::json to_json() const {
    auto entry = [](const GraphVerdict& v) {
      return nlohmann::json{{"graph", graph_to_json(v.graph)}, {"pass", v.pass}, {"values", v.values}};
    };
    nlohmann::json all = nlohmann::json::array(), bad = nlohmann::json::array();
    for (const auto& v : verdicts) {
      all.push_back(entry(v));
      if (!v.pass) bad.push_back(entry(v));
    }
    return {{"schema", 1},
            {"theorem", theorem},
            {"field", field.characteristic()},
            {"max_vertices", max_vertices},
            {"connected_only", connected_only},
            {"experimental", experimental},
            {"classes", classes},
            {"in_scope", verdicts.size()},
            {"verdict", passed() ? "pass" : "fail"},
            {"counterexamples", bad},
            {"verdicts", all}};
  }

  std::string to_text() const {
    std::ostringstream out;
    auto bad = counterexamples();
    out << theorem << " over " << field.name() << ", " << max_vertices << " vertices"
        << (connected_only ? " (connected)" : "") << ": " << classes << " classes, " << verdicts.size()
        << " in scope, " << bad.size() << (experimental ? " findings" : " counterexamples") << ": "
        << (passed() ? "pass" : "FAIL") << "\n";
    for (const auto* v : bad) {
      out << "  " << (experimental ? "finding" : "counterexample") << " n=" << v->graph.order() << " edges";
      for (auto [a, b] : v->graph.edges()) out << " " << a << "-" << b;
      out << " " << v->values.dump() << "\n";
    }
    return out.str();
  }
};

struct VerifyOptions {
  bool connected_only = false;
  unsigned workers = 0;  // 0: one per hardware thread
  LindOptions lind;
  std::function<void(std::size_t done, std::size_t total)> progress;  // called under a lock
};

namespace detail {

class ProgressCounter {
 public:
  ProgressCounter(const VerifyOptions& opt, std::size_t total) : opt_(opt), total_(total) {}
  void tick() {
    if (!opt_.progress) return;
    std::lock_guard lock(mu_);
    opt_.progress(++done_, total_);
  }

 private:
  const VerifyOptions& opt_;
  std::size_t total_;
  std::size_t done_ = 0;
  std::mutex mu_;
};

}  // namespace detail

namespace detail {

using GraphRule = std::function<GraphVerdict(const Graph&, FieldSpec, const LindOptions&)>;

inline int lind_of(const Graph& g, FieldSpec f, const LindOptions& opt) {
  return linearity_defect(edge_ideal(g), f, opt);
}

inline GraphVerdict scoped(const Graph& g) {
  GraphVerdict v;
  v.graph = g;
  v.in_scope = true;
  return v;
}

inline GraphVerdict out_of_scope(const Graph& g) {
  GraphVerdict v;
  v.graph = g;
  return v;
}

inline GraphVerdict rule_froberg(const Graph& g, FieldSpec f, const LindOptions& opt) {
  auto v = scoped(g);
  int lind = lind_of(g, f, opt);
  bool co_chordal = is_co_chordal(g);
  v.values = {{"lind", lind}, {"co_chordal", co_chordal}};
  v.pass = (lind == 0) == co_chordal;
  return v;
}

inline GraphVerdict rule_ld1(const Graph& g, FieldSpec f, const LindOptions& opt) {
  auto v = scoped(g);
  int lind = lind_of(g, f, opt);
  bool wc = is_weakly_chordal(g);
  int inmat = induced_matching_number(g);
  v.values = {{"lind", lind}, {"weakly_chordal", wc}, {"inmat", inmat}};
  v.pass = (lind == 1) == (wc && inmat == 2);
  return v;
}

inline bool weakly_chordal_scope(const Graph& g) { return g.edge_count() > 0 && is_weakly_chordal(g); }

inline GraphVerdict rule_wc_lind(const Graph& g, FieldSpec f, const LindOptions& opt) {
  if (!weakly_chordal_scope(g)) return out_of_scope(g);
  auto v = scoped(g);
  int lind = lind_of(g, f, opt), inmat = induced_matching_number(g);
  v.values = {{"lind", lind}, {"inmat", inmat}};
  v.pass = lind == inmat - 1;
  return v;
}

inline GraphVerdict rule_wc_reg(const Graph& g, FieldSpec f, const LindOptions&) {
  if (!weakly_chordal_scope(g)) return out_of_scope(g);
  auto v = scoped(g);
  int reg = *hochster_betti(g, f).regularity(), inmat = induced_matching_number(g);
  v.values = {{"reg", reg}, {"inmat", inmat}};
  v.pass = reg == inmat + 1;
  return v;
}

inline GraphVerdict rule_wc_pd(const Graph& g, FieldSpec f, const LindOptions&) {
  if (!weakly_chordal_scope(g)) return out_of_scope(g);
  auto v = scoped(g);
  int pd = *hochster_betti(g, f).projective_dimension(), d = d_invariant(g).value;
  v.values = {{"pd", pd}, {"d", d}};
  v.pass = pd == d - 1;
  return v;
}

inline GraphVerdict rule_forest_lind(const Graph& g, FieldSpec f, const LindOptions& opt) {
  if (g.edge_count() == 0 || !is_forest(g)) return out_of_scope(g);
  auto v = scoped(g);
  int lind = lind_of(g, f, opt), inmat = induced_matching_number(g);
  v.values = {{"lind", lind}, {"inmat", inmat}};
  v.pass = lind == inmat - 1;
  return v;
}

inline GraphVerdict rule_bounds(const Graph& g, FieldSpec f, const LindOptions& opt) {
  if (g.edge_count() == 0) return out_of_scope(g);
  auto v = scoped(g);
  auto rep = linearity_defect_report(edge_ideal(g), f, opt);
  int reg = *rep.betti.regularity(), inmat = induced_matching_number(g);
  int edges = static_cast<int>(g.edge_count());
  v.values = {{"lind", rep.lind}, {"reg", reg}, {"inmat", inmat}, {"edges", edges}};
  v.pass = rep.lind >= inmat - 1 && reg >= inmat + 1 && rep.lind <= edges - 1;
  return v;
}

inline GraphVerdict rule_copair(const Graph& g, FieldSpec f, const LindOptions&) {
  if (!weakly_chordal_scope(g)) return out_of_scope(g);
  auto v = scoped(g);
  nlohmann::json failing = nlohmann::json::array();
  auto reports = co_two_pair_splittings(g, f);
  for (const auto& [e, rep] : reports)
    if (!rep.is_splitting) failing.push_back({e.first, e.second});
  v.values = {{"co_two_pairs", reports.size()}, {"failing", failing}};
  v.pass = !reports.empty() && failing.empty();
  return v;
}

struct SplitCase {
  std::string kind;  // "co-two-pair" or "y-partition"
  int at = 0;        // edge index in g.edges() or the variable
  MonomialIdeal i, j, k;
  SplittingReport report;
};

inline std::vector<SplitCase> splittings_of(const Graph& g, FieldSpec f, bool with_co_two_pairs) {
  std::vector<SplitCase> out;
  auto whole = edge_ideal(g);
  if (with_co_two_pairs) {
    auto edges = g.edges();
    for (auto e : co_two_pairs(g)) {
      MonomialIdeal single(g.order(), {squarefree_monomial(g.order(), vertex_bit(e.first) | vertex_bit(e.second))});
      auto rest = edge_ideal(delete_edge(g, e));
      int at = static_cast<int>(std::find(edges.begin(), edges.end(), e) - edges.begin());
      out.push_back({"co-two-pair", at, whole, single, rest, is_betti_splitting(whole, single, rest, f)});
    }
  }
  for (int x = 0; x < g.order(); ++x) {
    if (g.degree(x) == 0) continue;
    auto [j, l] = variable_partition(whole, x);
    auto k = product_by_monomial(l, variable_monomial(g.order(), x));
    out.push_back({"y-partition", x, whole, j, k, is_betti_splitting(whole, j, k, f)});
  }
  return out;
}

class LindCache {
 public:
  LindCache(FieldSpec f, const LindOptions& opt) : f_(f), opt_(opt) {}
  int operator()(const MonomialIdeal& ideal) {
    auto it = seen_.find(ideal.gens());
    if (it != seen_.end()) return it->second;
    int v = linearity_defect(ideal, f_, opt_);
    seen_.emplace(ideal.gens(), v);
    return v;
  }

 private:
  FieldSpec f_;
  const LindOptions& opt_;
  std::map<std::vector<Multidegree>, int> seen_;
};

inline SplittingInequalities cached_inequalities(const SplitCase& c, LindCache& lind) {
  return splitting_inequalities(c.report, lind(c.i), lind(c.j), lind(c.k), lind(intersect(c.j, c.k)));
}

inline GraphVerdict rule_split_inequalities(const Graph& g, FieldSpec f, const LindOptions& opt) {
  if (!weakly_chordal_scope(g)) return out_of_scope(g);
  auto v = scoped(g);
  nlohmann::json failing = nlohmann::json::array();
  std::size_t checked = 0;
  LindCache lind(f, opt);
  for (const auto& c : splittings_of(g, f, true)) {
    if (!c.report.is_splitting) {
      failing.push_back({{"kind", c.kind}, {"at", c.at}, {"splitting", false}});
      continue;
    }
    auto s = cached_inequalities(c, lind);
    ++checked;
    if (!s.theorem_holds()) failing.push_back({{"kind", c.kind}, {"at", c.at}, {"checks", s.to_json()}});
  }
  v.values = {{"splittings", checked}, {"failing", failing}};
  v.pass = failing.empty();
  return v;
}

inline GraphVerdict rule_lind_conjecture(const Graph& g, FieldSpec f, const LindOptions& opt) {
  if (g.edge_count() == 0) return out_of_scope(g);
  auto v = scoped(g);
  nlohmann::json findings = nlohmann::json::array();
  std::size_t checked = 0;
  LindCache lind(f, opt);
  for (const auto& c : splittings_of(g, f, is_weakly_chordal(g))) {
    if (!c.report.is_splitting) continue;
    auto s = cached_inequalities(c, lind);
    ++checked;
    if (!s.conjecture) findings.push_back({{"kind", c.kind}, {"at", c.at}, {"lind", s.to_json()["lind"]}});
  }
  v.values = {{"splittings", checked}, {"findings", findings}};
  v.pass = findings.empty();
  return v;
}

inline GraphVerdict rule_char_independence(const Graph& g, FieldSpec, const LindOptions& opt) {
  if (g.edge_count() == 0 || !is_bipartite(g)) return out_of_scope(g);
  auto v = scoped(g);
  int zero = lind_of(g, FieldSpec(0), opt), two = lind_of(g, FieldSpec(2), opt);
  v.values = {{"lind_char0", zero}, {"lind_char2", two}};
  v.pass = zero == two;
  return v;
}

struct RuleEntry {
  const char* id;
  GraphRule rule;
  bool experimental;
};

inline const std::vector<RuleEntry>& graph_rules() {
  static const std::vector<RuleEntry> rules = {
      {"froberg", rule_froberg, false},
      {"ld1", rule_ld1, false},
      {"weakly-chordal-lind", rule_wc_lind, false},
      {"weakly-chordal-reg", rule_wc_reg, false},
      {"weakly-chordal-pd", rule_wc_pd, false},
      {"bounds", rule_bounds, false},
      {"copair-splitting", rule_copair, false},
      {"forest-lind", rule_forest_lind, false},
      {"splitting-inequalities", rule_split_inequalities, false},
      {"lind-conjecture", rule_lind_conjecture, true},
      {"ld-char-independence", rule_char_independence, true},
  };
  return rules;
}

inline TheoremCheck verify_cycles(int max_n, FieldSpec f, const VerifyOptions& opt) {
  TheoremCheck check;
  check.theorem = "cycle-lind";
  check.max_vertices = max_n;
  check.field = f;
  check.connected_only = opt.connected_only;
  std::vector<GraphVerdict> out(static_cast<std::size_t>(std::max(0, max_n - 2)));
  ProgressCounter progress(opt, out.size());
  parallel_for(out.size(), opt.workers, [&](std::size_t idx) {
    int n = static_cast<int>(idx) + 3;
    auto v = scoped(cycle_graph(n));
    int lind = lind_of(v.graph, f, opt.lind), expected = 2 * ((n - 2) / 3);
    v.values = {{"n", n}, {"lind", lind}, {"expected", expected}};
    v.pass = lind == expected;
    out[idx] = std::move(v);
    progress.tick();
  });
  check.classes = out.size();
  check.verdicts = std::move(out);
  return check;
}

}  // namespace detail

inline std::vector<std::string> theorem_ids() {
  std::vector<std::string> ids{"cycle-lind"};
  for (const auto& r : detail::graph_rules()) ids.push_back(r.id);
  return ids;
}

/// Checks one statement on every isomorphism class of graphs with exactly
/// max_n vertices (smaller graphs appear with isolated vertices added,
/// which changes none of the invariants involved). cycle-lind instead runs
/// over C_3..C_max_n.
inline TheoremCheck verify(const std::string& theorem, int max_n, FieldSpec f, const VerifyOptions& opt = {}) {
  if (theorem == "cycle-lind") {
    if (max_n < 3) throw InputError("cycle-lind needs --max-vertices >= 3");
    return detail::verify_cycles(max_n, f, opt);
  }
  auto rules = detail::graph_rules();
  auto it = std::find_if(rules.begin(), rules.end(), [&](const auto& r) { return theorem == r.id; });
  if (it == rules.end()) {
    std::string known;
    for (const auto& id : theorem_ids()) known += (known.empty() ? "" : ", ") + id;
    throw InputError("unknown theorem id '" + theorem + "' (known: " + known + ")");
  }
  TheoremCheck check;
  check.theorem = theorem;
  check.max_vertices = max_n;
  check.field = f;
  check.connected_only = opt.connected_only;
  check.experimental = it->experimental;
  auto graphs = enumerate_graphs(max_n, opt.connected_only);
  check.classes = graphs.size();
  std::vector<GraphVerdict> out(graphs.size());
  detail::ProgressCounter progress(opt, graphs.size());
  parallel_for(graphs.size(), opt.workers, [&](std::size_t i) {
    out[i] = it->rule(graphs[i], f, opt.lind);
    progress.tick();
  });
  for (auto& v : out)
    if (v.in_scope) check.verdicts.push_back(std::move(v));
  return check;
}

}  // namespace lindef
