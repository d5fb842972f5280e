#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "subrecon/feasibility.hpp"
#include "subrecon/io.hpp"
#include "subrecon/moves.hpp"
#include "subrecon/oracle.hpp"
#include "subrecon/reductions.hpp"
#include "subrecon/solvers.hpp"
#include "subrecon/source_problems.hpp"

namespace {

using namespace subrecon;
namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitBudget = 2;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitCheckFailed = 70;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot write file: " + path);
  out << content;
}

OracleBudget effective_budget(long long flag_value) {
  OracleBudget b = budget_from_env();
  if (flag_value > 0) b.max_candidates = static_cast<std::size_t>(flag_value);
  return b;
}

SolveResult run_named_solver(const std::string& name, const Instance& inst,
                             const DispatchOptions& opts) {
  if (name == "auto") return dispatch(inst, opts);
  if (name == "oracle") return solve_bfs(inst, opts.budget);
  try {
    if (name == "edge-cycle") return solve_edge_cycle(inst);
    if (name == "edge-clique") return solve_edge_clique(inst);
    if (name == "edge-biclique") return solve_edge_biclique(inst, opts.budget);
    if (name == "edge-tree-tj") return solve_edge_tree_tj(inst);
    if (name == "spanning-tree-tj") return solve_spanning_tree_tj(inst);
    if (name == "spanning-biclique-fixed-i")
      return solve_spanning_biclique_fixed_i(inst, opts.budget);
  } catch (const std::logic_error& e) {
    throw CLI::ValidationError("--solver", e.what());
  }
  throw CLI::ValidationError("--solver", "unknown solver: " + name);
}

int verdict_exit_code(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Yes:
      return kExitYes;
    case VerdictKind::No:
      return kExitNo;
    default:
      return kExitBudget;
  }
}

int run_solve(const std::string& path, const std::string& solver,
              long long budget_flag, bool emit_sequence,
              const std::string& sequence_out) {
  Instance inst = parse_instance_json(read_file(path));
  DispatchOptions opts;
  opts.budget = effective_budget(budget_flag);
  auto t0 = std::chrono::steady_clock::now();
  SolveResult res = run_named_solver(solver, inst, opts);
  auto t1 = std::chrono::steady_clock::now();
  auto ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  if (res.verdict.kind == VerdictKind::Yes)
    std::cout << "YES steps=" << res.verdict.sequence->move_count() << "\n";
  else
    std::cout << to_string(res.verdict.kind) << "\n";
  std::cout << "solver=" << res.solver << " nodes=" << res.rg_nodes
            << " edges=" << res.rg_edges << " time_ms=" << ms << "\n";
  if (res.verdict.kind == VerdictKind::Yes) {
    std::string seq_text = format_sequence(*res.verdict.sequence);
    if (emit_sequence) std::cout << seq_text;
    if (!sequence_out.empty()) write_file(sequence_out, seq_text);
  }
  return verdict_exit_code(res.verdict.kind);
}

int run_verify(const std::string& instance_path,
               const std::string& sequence_path) {
  Instance inst = parse_instance_json(read_file(instance_path));
  std::vector<Solution> steps = parse_sequence_text(
      read_file(sequence_path), solution_kind_for(inst.variant));
  VerifyResult res = verify_sequence(inst, steps);
  if (res.ok) {
    std::cout << "ACCEPT\n";
    return kExitYes;
  }
  std::cout << "REJECT step=" << res.index << " reason=" << res.reason << "\n";
  return kExitNo;
}

// ---- reduce: kind-specific source documents

struct SourceDoc {
  Graph graph{0, {}};
  int s = -1, t = -1, i = -1, k = -1;
  std::vector<int> source, target;
};

std::vector<int> parse_int_array(const ordered_json& v, const char* key) {
  if (!v.is_array())
    throw input_error(std::string("source json: \"") + key +
                      "\" must be an array of integers");
  std::vector<int> out;
  for (const auto& x : v) {
    if (!x.is_number_integer())
      throw input_error(std::string("source json: \"") + key +
                        "\" must hold integers");
    out.push_back(x.get<int>());
  }
  return out;
}

SourceDoc parse_source_doc(const std::string& text,
                           const std::vector<std::string>& fields) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw input_error(std::string("source json: ") + e.what());
  }
  if (!doc.is_object())
    throw input_error("source json: top level must be an object");
  for (const auto& item : doc.items()) {
    if (item.key() == "graph") continue;
    if (std::find(fields.begin(), fields.end(), item.key()) == fields.end())
      throw input_error("source json: unexpected field \"" + item.key() +
                        "\" for this reduction kind");
  }
  if (!doc.contains("graph"))
    throw input_error("source json: missing field \"graph\"");
  const ordered_json& gj = doc.at("graph");
  if (!gj.is_object() || !gj.contains("n") || !gj.contains("edges"))
    throw input_error("source json: \"graph\" needs \"n\" and \"edges\"");
  for (const auto& item : gj.items())
    if (item.key() != "n" && item.key() != "edges")
      throw input_error("source json: unknown field \"" + item.key() +
                        "\" in graph");
  std::vector<Edge> edges;
  for (const auto& e : gj.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw input_error("source json: edges must be [u, v] pairs");
    edges.push_back(Edge(e[0].get<int>(), e[1].get<int>()));
  }
  SourceDoc out;
  out.graph = Graph(gj.at("n").get<int>(), edges);
  for (const std::string& f : fields) {
    if (!doc.contains(f))
      throw input_error("source json: missing field \"" + f + "\"");
    const ordered_json& v = doc.at(f);
    if (f == "s")
      out.s = v.get<int>();
    else if (f == "t")
      out.t = v.get<int>();
    else if (f == "i")
      out.i = v.get<int>();
    else if (f == "k")
      out.k = v.get<int>();
    else if (f == "source")
      out.source = parse_int_array(v, "source");
    else if (f == "target")
      out.target = parse_int_array(v, "target");
  }
  return out;
}

Variant parse_variant_flag(const std::string& s) {
  if (s == "induced") return Variant::Induced;
  if (s == "spanning") return Variant::Spanning;
  throw CLI::ValidationError("--variant", "must be induced or spanning");
}

/// Path/cycle gadget on the clique-layered graph. Falls back to rule TS
/// explicitly when every layer is a singleton and the rules coincide.
GadgetOutput build_spr_ts(const Graph& g, int s, int t,
                          const std::vector<int>& vs,
                          const std::vector<int>& vt, Variant variant,
                          bool cycle) {
  auto construct = [&](const Graph& on) {
    return cycle ? reduce_spr_to_cycle(on, s, t, vs, vt, variant)
                 : reduce_spr_to_path(on, s, t, vs, vt, variant);
  };
  GadgetOutput out = construct(g);  // also validates the raw source
  if (out.instance.rule == Rule::TJ) {
    Layers layers = shortest_path_layers(g, s, t);
    out = construct(make_layers_cliques(g, layers));
    out.instance.rule = Rule::TS;
  }
  return out;
}

std::string verdict_name(const Verdict& v) { return to_string(v.kind); }

/// Brute-force verdict for the reduction's source problem, as YES/NO, or
/// BUDGET_EXCEEDED when the bounded search gives up.
std::string source_verdict(const std::string& kind, const SourceDoc& src,
                           const OracleBudget& budget) {
  auto oracle_on = [&](Variant variant, Rule rule, PropertySpec prop) {
    Instance inst{src.graph, variant, rule, prop,
                  Solution::vertex_set(src.source),
                  Solution::vertex_set(src.target)};
    return verdict_name(solve_bfs(inst, budget).verdict);
  };
  if (kind == "hampath-edgepath")
    return has_hamiltonian_st_path(src.graph, src.s, src.t) ? "YES" : "NO";
  if (kind == "bcbs-spanbiclique")
    return has_balanced_biclique(src.graph, src.k) ? "YES" : "NO";
  if (kind == "misr-indbiclique")
    return oracle_on(Variant::Induced, Rule::TJ, PropertySpec::edgeless());
  if (kind == "cliquer-diam2")
    return oracle_on(Variant::Induced, Rule::TS, PropertySpec::clique());
  // shortest-path reconfiguration source, rule-independent verdict
  return oracle_on(Variant::Induced, Rule::TJ,
                   PropertySpec::shortest_st_path(src.s, src.t));
}

int run_reduce(const std::string& kind, const std::string& source_path,
               const std::string& out_path, const std::string& variant_name,
               bool check, long long budget_flag) {
  static const std::map<std::string, std::vector<std::string>> kind_fields = {
      {"hampath-edgepath", {"s", "t"}},
      {"spr-path", {"s", "t", "source", "target"}},
      {"spr-cycle", {"s", "t", "source", "target"}},
      {"spr-path-ts", {"s", "t", "source", "target"}},
      {"spr-cycle-ts", {"s", "t", "source", "target"}},
      {"spr-spantree-ts", {"s", "t", "source", "target"}},
      {"misr-indbiclique", {"source", "target", "i"}},
      {"bcbs-spanbiclique", {"k"}},
      {"cliquer-diam2", {"source", "target"}},
  };
  auto it = kind_fields.find(kind);
  if (it == kind_fields.end())
    throw CLI::ValidationError("kind", "unknown reduction kind: " + kind);
  SourceDoc src = parse_source_doc(read_file(source_path), it->second);
  Variant variant = parse_variant_flag(variant_name);
  GadgetOutput gadget;
  if (kind == "hampath-edgepath")
    gadget = reduce_hampath_to_edge_path(src.graph, src.s, src.t);
  else if (kind == "spr-path")
    gadget = reduce_spr_to_path(src.graph, src.s, src.t, src.source,
                                src.target, variant);
  else if (kind == "spr-cycle")
    gadget = reduce_spr_to_cycle(src.graph, src.s, src.t, src.source,
                                 src.target, variant);
  else if (kind == "spr-path-ts")
    gadget = build_spr_ts(src.graph, src.s, src.t, src.source, src.target,
                          variant, false);
  else if (kind == "spr-cycle-ts")
    gadget = build_spr_ts(src.graph, src.s, src.t, src.source, src.target,
                          variant, true);
  else if (kind == "spr-spantree-ts")
    gadget = reduce_spr_to_spanning_tree_ts(src.graph, src.s, src.t,
                                            src.source, src.target);
  else if (kind == "misr-indbiclique")
    gadget = reduce_misr_to_induced_biclique(src.graph, src.source, src.target,
                                             src.i);
  else if (kind == "bcbs-spanbiclique")
    gadget = reduce_bcbs_to_spanning_biclique(src.graph, src.k);
  else
    gadget = reduce_cliquer_to_diam2(src.graph, src.source, src.target);

  write_file(out_path, serialize_instance_json(gadget.instance));
  ordered_json ann;
  ann["kind"] = kind;
  ann["vertex_map"] = gadget.vertex_map;
  ordered_json names;
  for (const auto& [name, vertex] : gadget.annotation) names[name] = vertex;
  ann["annotation"] = std::move(names);
  write_file(out_path + ".ann.json", ann.dump(2) + "\n");
  std::cout << "wrote " << out_path
            << " vertices=" << gadget.instance.graph.vertex_count()
            << " edges=" << gadget.instance.graph.edge_count()
            << " k=" << gadget.instance.source.size() << "\n";

  if (check) {
    OracleBudget budget = effective_budget(budget_flag);
    std::string src_verdict = source_verdict(kind, src, budget);
    std::string red_verdict =
        verdict_name(solve_bfs(gadget.instance, budget).verdict);
    std::cout << "check: source=" << src_verdict << " reduced=" << red_verdict
              << "\n";
    if (src_verdict == "BUDGET_EXCEEDED" || red_verdict == "BUDGET_EXCEEDED")
      return kExitBudget;
    if (src_verdict != red_verdict) {
      std::cerr << "reduction check failed: verdicts disagree\n";
      return kExitCheckFailed;
    }
  }
  return kExitYes;
}

int run_rgraph(const std::string& path, const std::string& dot_path,
               long long budget_flag) {
  Instance inst = parse_instance_json(read_file(path));
  OracleBudget budget = effective_budget(budget_flag);
  ReconfigGraph rg;
  try {
    rg = build_reconfig_graph(inst, budget);
  } catch (const budget_error&) {
    std::cout << "BUDGET_EXCEEDED\n";
    return kExitBudget;
  }
  std::cout << "nodes=" << rg.nodes.size() << " edges=" << rg.edge_count()
            << "\n";
  if (!dot_path.empty()) write_file(dot_path, to_dot(rg));
  return kExitYes;
}

int run_bench(const std::string& dir, const std::string& csv_path,
              long long budget_flag) {
  if (!fs::is_directory(dir))
    throw input_error("bench: not a directory: " + dir);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  DispatchOptions opts;
  opts.budget = effective_budget(budget_flag);
  struct Row {
    std::string file, solver, verdict, steps, nodes, edges, time_ms;
  };
  std::vector<Row> rows;
  for (const fs::path& f : files) {
    Row row;
    row.file = f.filename().string();
    auto t0 = std::chrono::steady_clock::now();
    try {
      Instance inst = parse_instance_json(read_file(f.string()));
      SolveResult res = dispatch(inst, opts);
      row.solver = res.solver;
      row.verdict = to_string(res.verdict.kind);
      if (res.verdict.kind == VerdictKind::Yes)
        row.steps = std::to_string(res.verdict.sequence->move_count());
      row.nodes = std::to_string(res.rg_nodes);
      row.edges = std::to_string(res.rg_edges);
    } catch (const input_error& e) {
      row.verdict = "ERROR";
      std::cerr << row.file << ": " << e.what() << "\n";
    }
    auto t1 = std::chrono::steady_clock::now();
    row.time_ms = std::to_string(
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0)
            .count());
    rows.push_back(std::move(row));
  }
  std::cout << std::left << std::setw(32) << "file" << std::setw(26) << "solver"
            << std::setw(17) << "verdict" << std::setw(7) << "steps"
            << std::setw(9) << "nodes" << std::setw(9) << "edges"
            << "time_ms\n";
  for (const Row& r : rows)
    std::cout << std::left << std::setw(32) << r.file << std::setw(26)
              << r.solver << std::setw(17) << r.verdict << std::setw(7)
              << r.steps << std::setw(9) << r.nodes << std::setw(9) << r.edges
              << r.time_ms << "\n";
  if (!csv_path.empty()) {
    std::ostringstream csv;
    csv << "file,solver,verdict,steps,nodes,edges\n";
    for (const Row& r : rows)
      csv << r.file << ',' << r.solver << ',' << r.verdict << ',' << r.steps
          << ',' << r.nodes << ',' << r.edges << "\n";
    write_file(csv_path, csv.str());
  }
  return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subgraph reconfiguration solver"};
  app.require_subcommand(1);

  std::string instance_path, sequence_path, solver = "auto";
  std::string reduce_kind, source_path, out_path, variant_name = "induced";
  std::string dot_path, csv_path, suite_dir, sequence_out;
  long long budget_flag = 0;
  bool emit_sequence = false, check = false;

  CLI::App* solve = app.add_subcommand("solve", "decide reachability");
  solve->add_option("instance", instance_path, "instance JSON file")
      ->required();
  solve->add_option("--solver", solver,
                    "auto, oracle, or a specialized solver name");
  solve->add_option("--budget", budget_flag,
                    "candidate-solution cap for the exhaustive search");
  solve->add_flag("--emit-sequence", emit_sequence,
                  "print the witness sequence after the report");
  solve->add_option("--sequence-out", sequence_out,
                    "write the witness sequence to this file");

  CLI::App* verify = app.add_subcommand("verify", "check a witness sequence");
  verify->add_option("instance", instance_path, "instance JSON file")
      ->required();
  verify->add_option("sequence", sequence_path, "sequence text file")
      ->required();

  CLI::App* reduce =
      app.add_subcommand("reduce", "construct a hardness-reduction instance");
  reduce->add_option("kind", reduce_kind,
                     "hampath-edgepath, spr-path, spr-cycle, spr-path-ts, "
                     "spr-cycle-ts, spr-spantree-ts, misr-indbiclique, "
                     "bcbs-spanbiclique or cliquer-diam2")
      ->required();
  reduce->add_option("source", source_path, "source problem JSON file")
      ->required();
  reduce->add_option("-o,--out", out_path, "output instance file")->required();
  reduce->add_option("--variant", variant_name,
                     "induced or spanning (shortest-path kinds only)");
  reduce->add_flag("--check", check,
                   "solve source and reduced instance, require agreement");
  reduce->add_option("--budget", budget_flag, "oracle budget for --check");

  CLI::App* rgraph =
      app.add_subcommand("rgraph", "explore the reconfiguration graph");
  rgraph->add_option("instance", instance_path, "instance JSON file")
      ->required();
  rgraph->add_option("--dot", dot_path, "write Graphviz output here");
  rgraph->add_option("--budget", budget_flag,
                     "candidate-solution cap for enumeration");

  CLI::App* bench = app.add_subcommand("bench", "run a directory of instances");
  bench->add_option("suite", suite_dir, "directory of instance JSON files")
      ->required();
  bench->add_option("--csv", csv_path, "write machine-readable results here");
  bench->add_option("--budget", budget_flag,
                    "candidate-solution cap per instance");

  try {
    app.parse(argc, argv);
    if (solve->parsed())
      return run_solve(instance_path, solver, budget_flag, emit_sequence,
                       sequence_out);
    if (verify->parsed()) return run_verify(instance_path, sequence_path);
    if (reduce->parsed())
      return run_reduce(reduce_kind, source_path, out_path, variant_name,
                        check, budget_flag);
    if (rgraph->parsed()) return run_rgraph(instance_path, dot_path, budget_flag);
    if (bench->parsed()) return run_bench(suite_dir, csv_path, budget_flag);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const budget_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  }
  return kExitUsage;
}
