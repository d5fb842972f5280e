#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subrecon/feasibility.hpp"
#include "subrecon/graph.hpp"
#include "subrecon/io.hpp"
#include "subrecon/moves.hpp"
#include "subrecon/oracle.hpp"
#include "subrecon/reductions.hpp"
#include "subrecon/solvers.hpp"
#include "subrecon/types.hpp"

namespace py = pybind11;
using namespace subrecon;

namespace {

Variant parse_variant(const std::string& s) {
  if (s == "edge") return Variant::Edge;
  if (s == "induced") return Variant::Induced;
  if (s == "spanning") return Variant::Spanning;
  throw input_error("unknown variant: " + s);
}

Rule parse_rule(const std::string& s) {
  if (s == "tj") return Rule::TJ;
  if (s == "ts") return Rule::TS;
  throw input_error("unknown rule: " + s);
}

// Property dicts use the same kind names and parameter keys as the JSON
// instance format.
PropertySpec property_from_dict(const py::dict& d) {
  auto kind = d["kind"].cast<std::string>();
  if (kind == "path") return PropertySpec::path();
  if (kind == "cycle") return PropertySpec::cycle();
  if (kind == "tree") return PropertySpec::tree();
  if (kind == "clique") return PropertySpec::clique();
  if (kind == "edgeless") return PropertySpec::edgeless();
  if (kind == "diameter_two") return PropertySpec::diameter_at_most_two();
  if (kind == "biclique")
    return PropertySpec::biclique(d["i"].cast<int>(), d["j"].cast<int>());
  if (kind == "shortest_st_path")
    return PropertySpec::shortest_st_path(d["s"].cast<int>(),
                                          d["t"].cast<int>());
  throw input_error("unknown property kind: " + kind);
}

py::dict property_to_dict(const PropertySpec& p) {
  py::dict d;
  switch (p.kind) {
    case PropertyKind::Path: d["kind"] = "path"; break;
    case PropertyKind::Cycle: d["kind"] = "cycle"; break;
    case PropertyKind::Tree: d["kind"] = "tree"; break;
    case PropertyKind::Clique: d["kind"] = "clique"; break;
    case PropertyKind::Edgeless: d["kind"] = "edgeless"; break;
    case PropertyKind::DiameterAtMostTwo: d["kind"] = "diameter_two"; break;
    case PropertyKind::Biclique:
      d["kind"] = "biclique";
      d["i"] = p.i;
      d["j"] = p.j;
      break;
    case PropertyKind::ShortestStPath:
      d["kind"] = "shortest_st_path";
      d["s"] = p.s;
      d["t"] = p.t;
      break;
  }
  return d;
}

// Edge-set solutions cross the boundary as lists of (u, v) pairs,
// vertex-set solutions as lists of ints.
py::list solution_to_py(const Solution& sol) {
  py::list out;
  if (sol.kind() == SolutionKind::EdgeSet) {
    for (const Edge& e : sol.edges()) out.append(py::make_tuple(e.u, e.v));
  } else {
    for (int v : sol.vertices()) out.append(v);
  }
  return out;
}

Solution solution_from_py(const py::handle& obj, SolutionKind kind) {
  if (kind == SolutionKind::EdgeSet) {
    std::vector<Edge> es;
    for (const auto& item : obj) {
      auto p = item.cast<std::pair<int, int>>();
      es.emplace_back(p.first, p.second);
    }
    return Solution::edge_set(std::move(es));
  }
  std::vector<int> vs;
  for (const auto& item : obj) vs.push_back(item.cast<int>());
  return Solution::vertex_set(std::move(vs));
}

std::vector<Edge> edges_from_py(const py::iterable& obj) {
  std::vector<Edge> es;
  for (const auto& item : obj) {
    auto p = item.cast<std::pair<int, int>>();
    es.emplace_back(p.first, p.second);
  }
  return es;
}

OracleBudget budget_from_args(std::optional<std::size_t> max_candidates,
                              std::optional<int> max_k) {
  OracleBudget budget = budget_from_env();
  if (max_candidates) budget.max_candidates = *max_candidates;
  if (max_k) budget.max_k = *max_k;
  return budget;
}

py::dict result_to_dict(const SolveResult& res) {
  py::dict d;
  d["verdict"] = to_string(res.verdict.kind);
  d["solver"] = res.solver;
  if (res.verdict.sequence) {
    py::list steps;
    for (const Solution& s : res.verdict.sequence->steps)
      steps.append(solution_to_py(s));
    d["steps"] = steps;
  } else {
    d["steps"] = py::none();
  }
  d["rg_nodes"] = res.rg_nodes;
  d["rg_edges"] = res.rg_edges;
  return d;
}

py::dict gadget_to_dict(GadgetOutput out) {
  py::dict d;
  d["instance"] = py::cast(std::move(out.instance));
  d["vertex_map"] = py::cast(out.vertex_map);
  d["annotation"] = py::cast(out.annotation);
  return d;
}

std::vector<Solution> steps_from_py(const py::iterable& steps,
                                    SolutionKind kind) {
  std::vector<Solution> out;
  for (const auto& step : steps) out.push_back(solution_from_py(step, kind));
  return out;
}

}  // namespace

PYBIND11_MODULE(_subrecon, m) {
  m.doc() = "Subgraph reconfiguration: solvers, witness checking and "
            "hardness gadgets.";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const budget_error& e) {
      PyErr_SetString(PyExc_RuntimeError, e.what());
    } catch (const input_error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const py::iterable& edges) {
             return Graph(n, edges_from_py(edges));
           }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("vertex_count", &Graph::vertex_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def_property_readonly("edges",
                             [](const Graph& g) {
                               py::list out;
                               for (const Edge& e : g.edges())
                                 out.append(py::make_tuple(e.u, e.v));
                               return out;
                             })
      .def("neighbors_of",
           [](const Graph& g, int u) {
             if (!g.has_vertex(u)) throw input_error("vertex out of range");
             return g.neighbors_of(u);
           },
           py::arg("u"))
      .def("degree",
           [](const Graph& g, int u) {
             if (!g.has_vertex(u)) throw input_error("vertex out of range");
             return g.degree(u);
           },
           py::arg("u"))
      .def("has_edge",
           [](const Graph& g, int a, int b) { return g.has_edge(a, b); },
           py::arg("a"), py::arg("b"))
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.vertex_count()) +
               ", m=" + std::to_string(g.edge_count()) + ")";
      });

  py::class_<Instance>(m, "Instance")
      .def(py::init([](const Graph& graph, const std::string& variant,
                       const std::string& rule, const py::dict& property,
                       const py::iterable& source, const py::iterable& target) {
             Instance inst;
             inst.graph = graph;
             inst.variant = parse_variant(variant);
             inst.rule = parse_rule(rule);
             inst.property = property_from_dict(property);
             SolutionKind kind = solution_kind_for(inst.variant);
             inst.source = solution_from_py(source, kind);
             inst.target = solution_from_py(target, kind);
             validate_instance(inst);
             return inst;
           }),
           py::arg("graph"), py::arg("variant"), py::arg("rule"),
           py::arg("property"), py::arg("source"), py::arg("target"))
      .def_property_readonly("graph",
                             [](const Instance& i) { return i.graph; })
      .def_property_readonly(
          "variant", [](const Instance& i) { return to_string(i.variant); })
      .def_property_readonly(
          "rule", [](const Instance& i) { return to_string(i.rule); })
      .def_property_readonly(
          "property", [](const Instance& i) { return property_to_dict(i.property); })
      .def_property_readonly(
          "source", [](const Instance& i) { return solution_to_py(i.source); })
      .def_property_readonly(
          "target", [](const Instance& i) { return solution_to_py(i.target); })
      .def("__repr__", [](const Instance& i) {
        return "Instance(variant=" + to_string(i.variant) +
               ", rule=" + to_string(i.rule) +
               ", property=" + to_string(i.property) +
               ", k=" + std::to_string(i.source.size()) + ")";
      });

  m.def("parse_instance", &parse_instance_json, py::arg("text"),
        "Parse an instance from its JSON text form.");
  m.def("serialize_instance", &serialize_instance_json, py::arg("instance"),
        "Serialize an instance to its JSON text form.");

  m.def(
      "check_property",
      [](const Graph& g, const py::iterable& solution,
         const std::string& variant, const py::dict& property) {
        Variant v = parse_variant(variant);
        Solution sol = solution_from_py(solution, solution_kind_for(v));
        return check_property(g, sol, v, property_from_dict(property));
      },
      py::arg("graph"), py::arg("solution"), py::arg("variant"),
      py::arg("property"),
      "True iff the solution satisfies the property under the variant.");

  m.def(
      "neighbors",
      [](const Instance& inst, const py::iterable& solution) {
        Solution sol =
            solution_from_py(solution, solution_kind_for(inst.variant));
        py::list out;
        for (const Solution& nb :
             neighbors(inst.graph, sol, inst.variant, inst.rule,
                       inst.property))
          out.append(solution_to_py(nb));
        return out;
      },
      py::arg("instance"), py::arg("solution"),
      "All feasible solutions one legal move away.");

  m.def(
      "solve",
      [](const Instance& inst, std::optional<std::size_t> max_candidates,
         std::optional<int> max_k) {
        DispatchOptions opts;
        opts.budget = budget_from_args(max_candidates, max_k);
        return result_to_dict(dispatch(inst, opts));
      },
      py::arg("instance"), py::arg("max_candidates") = py::none(),
      py::arg("max_k") = py::none(),
      "Decide reachability, routing to a closed-form solver when one "
      "applies. Returns verdict, solver, witness steps, and the size of any "
      "explored reconfiguration graph.");

  m.def(
      "solve_exhaustive",
      [](const Instance& inst, std::optional<std::size_t> max_candidates,
         std::optional<int> max_k) {
        return result_to_dict(
            solve_bfs(inst, budget_from_args(max_candidates, max_k)));
      },
      py::arg("instance"), py::arg("max_candidates") = py::none(),
      py::arg("max_k") = py::none(),
      "Decide reachability by breadth-first search over the full "
      "reconfiguration graph, bypassing the solver dispatch.");

  m.def(
      "verify",
      [](const Instance& inst, const py::iterable& steps) {
        VerifyResult res = verify_sequence(
            inst, steps_from_py(steps, solution_kind_for(inst.variant)));
        py::dict d;
        d["ok"] = res.ok;
        d["index"] = res.index;
        d["reason"] = res.reason;
        return d;
      },
      py::arg("instance"), py::arg("steps"),
      "Check a claimed witness sequence; reports the first violating step.");

  m.def(
      "shortest_path_layers",
      [](const Graph& g, int s, int t) {
        return shortest_path_layers(g, s, t).sets;
      },
      py::arg("graph"), py::arg("s"), py::arg("t"),
      "Vertices on shortest s-t paths, grouped by distance from s.");

  m.def(
      "make_layers_cliques",
      [](const Graph& g, int s, int t) {
        return make_layers_cliques(g, shortest_path_layers(g, s, t));
      },
      py::arg("graph"), py::arg("s"), py::arg("t"),
      "The graph with every shortest-path layer completed to a clique.");

  m.def(
      "reduce_hampath_to_edge_path",
      [](const Graph& g, int s, int t) {
        return gadget_to_dict(reduce_hampath_to_edge_path(g, s, t));
      },
      py::arg("graph"), py::arg("s"), py::arg("t"),
      "Edge-path instance solvable iff the graph has a Hamiltonian s-t "
      "path.");

  m.def(
      "reduce_spr_to_path",
      [](const Graph& g, int s, int t, const std::vector<int>& source,
         const std::vector<int>& target, const std::string& variant) {
        return gadget_to_dict(
            reduce_spr_to_path(g, s, t, source, target,
                               parse_variant(variant)));
      },
      py::arg("graph"), py::arg("s"), py::arg("t"), py::arg("source"),
      py::arg("target"), py::arg("variant"),
      "Path instance mirroring a shortest-path reconfiguration instance.");

  m.def(
      "reduce_spr_to_cycle",
      [](const Graph& g, int s, int t, const std::vector<int>& source,
         const std::vector<int>& target, const std::string& variant) {
        return gadget_to_dict(
            reduce_spr_to_cycle(g, s, t, source, target,
                                parse_variant(variant)));
      },
      py::arg("graph"), py::arg("s"), py::arg("t"), py::arg("source"),
      py::arg("target"), py::arg("variant"),
      "Cycle instance mirroring a shortest-path reconfiguration instance.");

  m.def(
      "reduce_spr_to_spanning_tree_ts",
      [](const Graph& g, int s, int t, const std::vector<int>& source,
         const std::vector<int>& target) {
        return gadget_to_dict(
            reduce_spr_to_spanning_tree_ts(g, s, t, source, target));
      },
      py::arg("graph"), py::arg("s"), py::arg("t"), py::arg("source"),
      py::arg("target"),
      "Spanning-tree sliding instance mirroring a shortest-path "
      "reconfiguration instance.");

  m.def(
      "reduce_misr_to_induced_biclique",
      [](const Graph& g, const std::vector<int>& source,
         const std::vector<int>& target, int i) {
        return gadget_to_dict(
            reduce_misr_to_induced_biclique(g, source, target, i));
      },
      py::arg("graph"), py::arg("source"), py::arg("target"), py::arg("i"),
      "Induced-biclique instance equivalent to reconfiguring maximum "
      "independent sets.");

  m.def(
      "reduce_bcbs_to_spanning_biclique",
      [](const Graph& g, int k) {
        return gadget_to_dict(reduce_bcbs_to_spanning_biclique(g, k));
      },
      py::arg("graph"), py::arg("k"),
      "Spanning-biclique instance solvable iff the bipartite graph contains "
      "a balanced biclique with k vertices a side.");

  m.def(
      "reduce_cliquer_to_diam2",
      [](const Graph& g, const std::vector<int>& source,
         const std::vector<int>& target) {
        return gadget_to_dict(reduce_cliquer_to_diam2(g, source, target));
      },
      py::arg("graph"), py::arg("source"), py::arg("target"),
      "Induced diameter-two sliding instance equivalent to clique "
      "reconfiguration under sliding.");
}
