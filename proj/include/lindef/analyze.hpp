#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "lindef/graph_algorithms.hpp"
#include "lindef/graph_io.hpp"
#include "lindef/lind.hpp"
#include "lindef/monomial.hpp"
#include "lindef/resolution.hpp"

namespace lindef {

struct GraphFacts {
  int n = 0;
  std::size_t edges = 0;
  bool chordal = false;
  bool weakly_chordal = false;
  bool co_chordal = false;
  int inmat = 0;
  std::optional<int> d;  // undefined without edges
};

inline GraphFacts graph_facts(const Graph& g) {
  GraphFacts f;
  f.n = g.order();
  f.edges = g.edge_count();
  f.chordal = is_chordal(g);
  f.weakly_chordal = is_weakly_chordal(g);
  f.co_chordal = is_co_chordal(g);
  f.inmat = induced_matching_number(g);
  if (f.edges > 0) f.d = d_invariant(g).value;
  return f;
}

struct AnalysisReport {
  FieldSpec field;
  std::optional<GraphFacts> graph;
  std::string ideal;  // generators in the input's variable names
  std::size_t generators = 0;
  BettiTable betti;
  std::optional<int> lind;
  std::string lind_skipped;  // reason when lind is absent

  nlohmann::json to_json() const {
    auto opt = [](const std::optional<int>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
    nlohmann::json j{{"schema", 1},
                     {"field", field.characteristic()},
                     {"ideal", ideal},
                     {"generators", generators},
                     {"betti", betti.to_json()["entries"]},
                     {"reg", opt(betti.regularity())},
                     {"pd", opt(betti.projective_dimension())},
                     {"lind", opt(lind)}};
    if (!lind) j["lind_skipped"] = lind_skipped;
    if (graph) {
      j["n"] = graph->n;
      j["edges"] = graph->edges;
      j["chordal"] = graph->chordal;
      j["weakly_chordal"] = graph->weakly_chordal;
      j["co_chordal"] = graph->co_chordal;
      j["inmat"] = graph->inmat;
      j["d"] = opt(graph->d);
    }
    return j;
  }

  std::string to_text() const {
    auto show = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("undefined"); };
    auto yes = [](bool b) { return b ? "true" : "false"; };
    std::ostringstream out;
    if (graph) {
      out << "n=" << graph->n << " edges=" << graph->edges << "\n";
      out << "chordal=" << yes(graph->chordal) << " weakly_chordal=" << yes(graph->weakly_chordal)
          << " co_chordal=" << yes(graph->co_chordal) << "\n";
      out << "inmat=" << graph->inmat << " d=" << show(graph->d) << "\n";
    }
    out << "ideal " << ideal << "\n";
    out << betti.to_text();
    out << "reg=" << show(betti.regularity()) << " pd=" << show(betti.projective_dimension()) << "\n";
    out << "lind=" << (lind ? std::to_string(*lind) : "skipped: " + lind_skipped) << "\n";
    return out.str();
  }
};

/// Betti numbers by the default route (Hochster when squarefree); lind by
/// the resolution in opt. A resource limit hit while computing lind is
/// reported in lind_skipped, never hidden.
inline AnalysisReport analyze_ideal(const MonomialIdeal& ideal, const std::vector<std::string>& vars, FieldSpec f,
                                    const LindOptions& opt = {}) {
  AnalysisReport rep;
  rep.field = f;
  rep.ideal = format_ideal(ideal, vars);
  rep.generators = ideal.size();
  rep.betti = compute_betti(ideal, f, {BettiMethod::Auto, opt.taylor_cap, opt.lattice_cap});
  try {
    auto l = linearity_defect_report(ideal, f, opt);
    if (!l.betti.same_numbers(rep.betti)) throw InternalError("Betti tables from the two routes disagree");
    rep.lind = l.lind;
  } catch (const ResourceError& e) {
    rep.lind_skipped = e.what();
  }
  return rep;
}

inline AnalysisReport analyze_graph(const Graph& g, FieldSpec f, const LindOptions& opt = {}) {
  auto rep = analyze_ideal(edge_ideal(g), default_variable_names(g.order()), f, opt);
  rep.graph = graph_facts(g);
  return rep;
}

}  // namespace lindef
