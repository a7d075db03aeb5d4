#include <chrono>
#include <cstdio>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "lindef/lindef.hpp"

using namespace lindef;

namespace {

enum Exit { kPass = 0, kCounterexample = 1, kInputError = 2, kResourceError = 3, kInternalError = 4 };

struct Common {
  std::string graph_path;
  std::string ideal_path;
  std::vector<std::uint32_t> chars;
  std::string format = "text";
  std::size_t taylor_cap = default_taylor_cap;
  std::size_t lattice_cap = default_lattice_cap;
  std::string resolution = "lattice";
  bool long_running = false;
};

struct Input {
  std::optional<Graph> graph;
  MonomialIdeal ideal;
  std::vector<std::string> vars;
};

void note(const Common& c, const std::string& msg) {
  if (c.long_running) std::cerr << "[lindef] " << msg << std::endl;
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string elapsed(const Stopwatch& w) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", w.seconds());
  return buf;
}

Input load(const Common& c, bool graph_only = false) {
  if (c.graph_path.empty() == c.ideal_path.empty())
    throw InputError(graph_only ? "give --graph FILE" : "give exactly one of --graph FILE or --ideal FILE");
  Input in;
  if (!c.graph_path.empty()) {
    in.graph = read_graph_file(c.graph_path);
    in.ideal = edge_ideal(*in.graph);
    in.vars = default_variable_names(in.graph->order());
  } else {
    if (graph_only) throw InputError("this command needs --graph FILE");
    auto parsed = read_ideal_file(c.ideal_path);
    in.ideal = parsed.ideal;
    in.vars = parsed.vars;
  }
  return in;
}

FieldSpec single_field(const Common& c) {
  if (c.chars.size() > 1) throw InputError("this command takes a single --char");
  return FieldSpec(c.chars.empty() ? 0u : c.chars.front());
}

std::vector<FieldSpec> fields(const Common& c, std::vector<std::uint32_t> fallback) {
  std::vector<FieldSpec> out;
  for (auto p : c.chars.empty() ? fallback : c.chars) out.emplace_back(p);
  return out;
}

LindOptions lind_options(const Common& c) {
  LindOptions o;
  if (c.resolution == "taylor") {
    o.resolution = BettiMethod::Taylor;
  } else if (c.resolution != "lattice") {
    throw InputError("--resolution must be lattice or taylor");
  }
  o.taylor_cap = c.taylor_cap;
  o.lattice_cap = c.lattice_cap;
  if (c.long_running) {
    o.taylor_cap = 30;
    o.lattice_cap = std::numeric_limits<std::size_t>::max();
  }
  return o;
}

BettiMethod parse_method(const std::string& s) {
  if (s == "auto") return BettiMethod::Auto;
  if (s == "hochster") return BettiMethod::Hochster;
  if (s == "lattice") return BettiMethod::Lattice;
  if (s == "taylor") return BettiMethod::Taylor;
  throw InputError("--method must be auto, hochster, lattice or taylor");
}

void emit(const Common& c, const std::string& text, const nlohmann::json& json) {
  if (c.format == "json") {
    std::cout << json.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

void add_input_options(CLI::App* cmd, Common& c, bool ideals = true) {
  cmd->add_option("--graph", c.graph_path, "graph file (edge list or JSON)");
  if (ideals) cmd->add_option("--ideal", c.ideal_path, "ideal file ('vars:' line, then generators)");
}

void add_field_options(CLI::App* cmd, Common& c) {
  cmd->add_option("--char", c.chars, "field characteristic: 0 or a prime");
  cmd->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
}

void add_resolution_options(CLI::App* cmd, Common& c) {
  cmd->add_option("--taylor-cap", c.taylor_cap, "largest generator count for the Taylor complex");
  cmd->add_option("--lattice-cap", c.lattice_cap, "largest lcm lattice for the minimal resolution");
  cmd->add_option("--resolution", c.resolution, "minimal resolution route for lind: lattice or taylor");
  cmd->add_flag("--long-running", c.long_running, "lift the size caps and report progress on stderr");
}

int run_analyze(const Common& c) {
  auto in = load(c);
  auto f = single_field(c);
  note(c, "analyzing over " + f.name());
  Stopwatch w;
  auto rep = in.graph ? analyze_graph(*in.graph, f, lind_options(c)) : analyze_ideal(in.ideal, in.vars, f, lind_options(c));
  note(c, "done in " + elapsed(w));
  emit(c, rep.to_text(), rep.to_json());
  return kPass;
}

int run_betti(const Common& c, const std::string& method) {
  auto in = load(c);
  auto f = single_field(c);
  auto lo = lind_options(c);
  note(c, "computing Betti numbers over " + f.name());
  Stopwatch w;
  auto t = compute_betti(in.ideal, f, {parse_method(method), lo.taylor_cap, lo.lattice_cap});
  note(c, "done in " + elapsed(w));
  emit(c, t.to_text(), t.to_json());
  return kPass;
}

int run_lind(const Common& c, bool cross_check) {
  auto in = load(c);
  auto f = single_field(c);
  auto opt = lind_options(c);
  opt.cross_check = cross_check;
  note(c, "computing lind over " + f.name());
  Stopwatch w;
  auto rep = linearity_defect_report(in.ideal, f, opt);
  note(c, "done in " + elapsed(w));
  nlohmann::json j{{"schema", 1}, {"field", f.characteristic()}, {"lind", rep.lind},
                   {"nonvanishing", rep.nonvanishing}, {"betti", rep.betti.to_json()["entries"]}};
  emit(c, "lind=" + std::to_string(rep.lind) + "\n", j);
  return kPass;
}

int run_invariants(const Common& c) {
  auto in = load(c, true);
  auto f = single_field(c);
  auto facts = graph_facts(*in.graph);
  auto t = hochster_betti(*in.graph, f);
  auto show = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("undefined"); };
  auto opt = [](const std::optional<int>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
  std::string text = "n=" + std::to_string(facts.n) + " edges=" + std::to_string(facts.edges) + "\n" +
                     "chordal=" + (facts.chordal ? "true" : "false") +
                     " weakly_chordal=" + (facts.weakly_chordal ? "true" : "false") +
                     " co_chordal=" + (facts.co_chordal ? "true" : "false") + "\n" +
                     "inmat=" + std::to_string(facts.inmat) + " d=" + show(facts.d) + "\n" +
                     "reg=" + show(t.regularity()) + " pd=" + show(t.projective_dimension()) + " over " +
                     f.name() + "\n";
  nlohmann::json j{{"schema", 1},
                   {"field", f.characteristic()},
                   {"n", facts.n},
                   {"edges", facts.edges},
                   {"chordal", facts.chordal},
                   {"weakly_chordal", facts.weakly_chordal},
                   {"co_chordal", facts.co_chordal},
                   {"inmat", facts.inmat},
                   {"d", opt(facts.d)},
                   {"reg", opt(t.regularity())},
                   {"pd", opt(t.projective_dimension())}};
  emit(c, text, j);
  return kPass;
}

int run_verify(const Common& c, const std::string& theorem, int max_n, bool connected, unsigned workers) {
  VerifyOptions opt;
  opt.connected_only = connected;
  opt.workers = workers;
  opt.lind = lind_options(c);
  if (c.long_running) {
    opt.progress = [](std::size_t done, std::size_t total) {
      if (done == total || done % 50 == 0) std::cerr << "[lindef] " << done << "/" << total << " graphs" << std::endl;
    };
  }
  nlohmann::json checks = nlohmann::json::array();
  std::string text;
  bool all_pass = true;
  for (auto f : fields(c, {0, 2})) {
    note(c, "verifying " + theorem + " over " + f.name());
    auto check = verify(theorem, max_n, f, opt);
    all_pass = all_pass && check.passed();
    text += check.to_text();
    checks.push_back(check.to_json());
  }
  emit(c, text, nlohmann::json{{"schema", 1}, {"checks", checks}});
  return all_pass ? kPass : kCounterexample;
}

int split_vertex(const std::string& tok, int n) {
  try {
    std::size_t used = 0;
    int v = std::stoi(detail::strip(tok), &used);
    if (used == detail::strip(tok).size() && v >= 0 && v < n) return v;
  } catch (const std::exception&) {
  }
  throw InputError("--split: bad vertex '" + tok + "'");
}

// "U:0-5,0-1,1-2" for graphs, "J:x1*x6,x1*x2" for ideals; the name is optional.
MonomialIdeal parse_split_part(const Input& in, const std::string& spec) {
  std::string body = spec.substr(spec.find(':') == std::string::npos ? 0 : spec.find(':') + 1);
  std::vector<Multidegree> gens;
  const int n = in.ideal.nvars();
  for (auto item : detail::split(body, ',')) {
    if (item.empty()) continue;
    if (in.graph) {
      auto dash = item.find('-');
      if (dash == std::string::npos) throw InputError("--split: expected an edge 'u-v', got '" + item + "'");
      int u = split_vertex(item.substr(0, dash), n), v = split_vertex(item.substr(dash + 1), n);
      if (!in.graph->adjacent(u, v)) throw InputError("--split: " + item + " is not an edge of the graph");
      gens.push_back(squarefree_monomial(n, vertex_bit(u) | vertex_bit(v)));
    } else {
      gens.push_back(detail::parse_monomial(item, in.vars));
    }
  }
  if (gens.empty()) throw InputError("--split names no generators");
  return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal complement_part(const MonomialIdeal& whole, const MonomialIdeal& part) {
  std::vector<Multidegree> rest;
  for (const auto& g : whole.gens())
    if (std::find(part.gens().begin(), part.gens().end(), g) == part.gens().end()) rest.push_back(g);
  for (const auto& g : part.gens())
    if (std::find(whole.gens().begin(), whole.gens().end(), g) == whole.gens().end())
      throw InputError("--split: " + format_monomial(g, default_variable_names(whole.nvars())) +
                       " is not a minimal generator of the ideal");
  return MonomialIdeal(whole.nvars(), std::move(rest));
}

int run_split_check(const Common& c, const std::string& split, const std::string& y_var, bool co_two_pairs,
                    bool inequalities) {
  auto in = load(c);
  auto f = single_field(c);
  int modes = !split.empty() + !y_var.empty() + co_two_pairs;
  if (modes != 1) throw InputError("give exactly one of --split, --y-partition, --co-two-pairs");

  struct Case {
    std::string label;
    MonomialIdeal j, k;
    SplittingReport report;
  };
  std::vector<Case> cases;
  if (!split.empty()) {
    auto j = parse_split_part(in, split);
    auto k = complement_part(in.ideal, j);
    cases.push_back({split, j, k, is_betti_splitting(in.ideal, j, k, f)});
  } else if (!y_var.empty()) {
    auto pos = std::find(in.vars.begin(), in.vars.end(), y_var);
    if (pos == in.vars.end()) throw InputError("--y-partition: unknown variable '" + y_var + "'");
    int v = static_cast<int>(pos - in.vars.begin());
    auto [j, l] = variable_partition(in.ideal, v);
    auto k = product_by_monomial(l, variable_monomial(in.ideal.nvars(), v));
    cases.push_back({"y-partition at " + y_var, j, k, y_partition_splitting(in.ideal, v, f)});
  } else {
    if (!in.graph) throw InputError("--co-two-pairs needs --graph");
    for (auto& [e, rep] : co_two_pair_splittings(*in.graph, f)) {
      MonomialIdeal single(in.ideal.nvars(), {squarefree_monomial(in.ideal.nvars(), vertex_bit(e.first) | vertex_bit(e.second))});
      cases.push_back({"co-two-pair " + std::to_string(e.first) + "-" + std::to_string(e.second), single,
                       edge_ideal(delete_edge(*in.graph, e)), rep});
    }
  }

  bool all_split = true, all_hold = true;
  std::string text;
  nlohmann::json reports = nlohmann::json::array();
  for (const auto& cs : cases) {
    auto j = cs.report.to_json();
    j["decomposition"] = cs.label;
    j["J"] = format_ideal(cs.j, in.vars);
    j["K"] = format_ideal(cs.k, in.vars);
    text += cs.label + "\nJ = " + format_ideal(cs.j, in.vars) + "\nK = " + format_ideal(cs.k, in.vars) + "\n" +
            cs.report.to_text();
    all_split = all_split && cs.report.is_splitting;
    if (inequalities && cs.report.is_splitting) {
      auto s = check_splitting_inequalities(in.ideal, cs.j, cs.k, cs.report, lind_options(c));
      j["inequalities"] = s.to_json();
      text += "lind I=" + std::to_string(s.lind_i) + " J=" + std::to_string(s.lind_j) +
              " K=" + std::to_string(s.lind_k) + " JcapK=" + std::to_string(s.lind_jk) + "; inequalities " +
              (s.theorem_holds() ? "hold" : "FAIL") + (s.conjecture ? "" : "; conjectured bound fails") + "\n";
      all_hold = all_hold && s.theorem_holds();
    }
    reports.push_back(j);
  }
  nlohmann::json out = cases.size() == 1 && !co_two_pairs ? reports[0]
                                                          : nlohmann::json{{"schema", 1}, {"reports", reports}};
  emit(c, text, out);
  return all_split && all_hold ? kPass : kCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lindef: Betti numbers and linearity defect of monomial and edge ideals"};
  app.require_subcommand(1);
  Common c;

  auto* analyze = app.add_subcommand("analyze", "graph invariants, Betti table, reg, pd and lind");
  add_input_options(analyze, c);
  add_field_options(analyze, c);
  add_resolution_options(analyze, c);

  std::string method = "auto";
  auto* betti = app.add_subcommand("betti", "graded Betti table");
  add_input_options(betti, c);
  add_field_options(betti, c);
  add_resolution_options(betti, c);
  betti->add_option("--method", method, "auto, hochster, lattice or taylor");

  bool cross_check = false;
  auto* lind = app.add_subcommand("lind", "linearity defect");
  add_input_options(lind, c);
  add_field_options(lind, c);
  add_resolution_options(lind, c);
  lind->add_flag("--cross-check", cross_check, "confirm every homology verdict by a windowed linear-algebra scan");

  auto* invariants = app.add_subcommand("invariants", "combinatorial invariants of a graph, reg and pd");
  add_input_options(invariants, c, false);
  add_field_options(invariants, c);

  std::string theorem;
  int max_n = 6;
  bool connected = false;
  unsigned workers = 0;
  auto* verify_cmd = app.add_subcommand("verify", "check a statement on every graph with the given vertex count");
  add_field_options(verify_cmd, c);
  add_resolution_options(verify_cmd, c);
  verify_cmd->add_option("--theorem", theorem, "statement id")->required();
  verify_cmd->add_option("--max-vertices", max_n, "vertex count (cycle-lind: largest cycle)");
  verify_cmd->add_flag("--connected", connected, "connected graphs only");
  verify_cmd->add_option("--workers", workers, "worker threads (0: one per hardware thread)");

  std::string split, y_var;
  bool co_pairs = false, inequalities = false;
  auto* split_check = app.add_subcommand("split-check", "test a decomposition I = J + K for the Betti splitting property");
  add_input_options(split_check, c);
  add_field_options(split_check, c);
  add_resolution_options(split_check, c);
  split_check->add_option("--split", split, "generators of J, e.g. U:0-5,0-1,1-2 or J:x1*x2,x3");
  split_check->add_option("--y-partition", y_var, "split by divisibility by this variable");
  split_check->add_flag("--co-two-pairs", co_pairs, "every co-two-pair splitting of a weakly chordal graph");
  split_check->add_flag("--inequalities", inequalities, "also check the lind, pd and reg relations");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (*analyze) return run_analyze(c);
    if (*betti) return run_betti(c, method);
    if (*lind) return run_lind(c, cross_check);
    if (*invariants) return run_invariants(c);
    if (*verify_cmd) return run_verify(c, theorem, max_n, connected, workers);
    if (*split_check) return run_split_check(c, split, y_var, co_pairs, inequalities);
  } catch (const InputError& e) {
    std::cerr << "lindef: input error: " << e.what() << "\n";
    return kInputError;
  } catch (const DomainError& e) {
    std::cerr << "lindef: outside the statement's scope: " << e.what() << "\n";
    return kInputError;
  } catch (const ResourceError& e) {
    std::cerr << "lindef: resource limit: " << e.what() << "\n";
    return kResourceError;
  } catch (const std::exception& e) {
    std::cerr << "lindef: internal error: " << e.what() << "\n";
    return kInternalError;
  }
  return kPass;
}
