#include "subrecon/io.hpp"

#include <sstream>

#include "json.hpp"

namespace subrecon {

namespace {

using json = nlohmann::ordered_json;

void check_keys(const json& obj, std::initializer_list<const char*> allowed,
                const char* where) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* k : allowed)
      if (item.key() == k) {
        known = true;
        break;
      }
    if (!known)
      throw input_error(std::string("instance json: unknown field \"") +
                        item.key() + "\" in " + where);
  }
}

int get_int(const json& obj, const char* key, const char* where) {
  if (!obj.contains(key))
    throw input_error(std::string("instance json: missing field \"") + key +
                      "\" in " + where);
  const json& v = obj.at(key);
  if (!v.is_number_integer())
    throw input_error(std::string("instance json: field \"") + key + "\" in " +
                      where + " must be an integer");
  return v.get<int>();
}

std::string get_string(const json& obj, const char* key, const char* where) {
  if (!obj.contains(key))
    throw input_error(std::string("instance json: missing field \"") + key +
                      "\" in " + where);
  const json& v = obj.at(key);
  if (!v.is_string())
    throw input_error(std::string("instance json: field \"") + key + "\" in " +
                      where + " must be a string");
  return v.get<std::string>();
}

const json& get_required(const json& obj, const char* key, const char* where) {
  if (!obj.contains(key))
    throw input_error(std::string("instance json: missing field \"") + key +
                      "\" in " + where);
  return obj.at(key);
}

Edge parse_edge(const json& v, const char* where) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() ||
      !v[1].is_number_integer())
    throw input_error(std::string("instance json: each edge in ") + where +
                      " must be a [u, v] integer pair");
  return Edge(v[0].get<int>(), v[1].get<int>());
}

Graph parse_graph(const json& v) {
  if (!v.is_object())
    throw input_error("instance json: \"graph\" must be an object");
  check_keys(v, {"n", "edges"}, "graph");
  int n = get_int(v, "n", "graph");
  const json& ed = get_required(v, "edges", "graph");
  if (!ed.is_array())
    throw input_error("instance json: \"graph.edges\" must be an array");
  std::vector<Edge> edges;
  edges.reserve(ed.size());
  for (const json& e : ed) edges.push_back(parse_edge(e, "graph.edges"));
  return Graph(n, edges);
}

Variant parse_variant(const std::string& s) {
  if (s == "edge") return Variant::Edge;
  if (s == "induced") return Variant::Induced;
  if (s == "spanning") return Variant::Spanning;
  throw input_error("instance json: variant must be edge, induced or spanning");
}

Rule parse_rule(const std::string& s) {
  if (s == "tj") return Rule::TJ;
  if (s == "ts") return Rule::TS;
  throw input_error("instance json: rule must be tj or ts");
}

PropertySpec parse_property(const json& v) {
  if (!v.is_object())
    throw input_error("instance json: \"property\" must be an object");
  std::string kind = get_string(v, "kind", "property");
  auto only = [&](std::initializer_list<const char*> allowed) {
    check_keys(v, allowed, "property");
  };
  if (kind == "path") {
    only({"kind"});
    return PropertySpec::path();
  }
  if (kind == "cycle") {
    only({"kind"});
    return PropertySpec::cycle();
  }
  if (kind == "tree") {
    only({"kind"});
    return PropertySpec::tree();
  }
  if (kind == "clique") {
    only({"kind"});
    return PropertySpec::clique();
  }
  if (kind == "edgeless") {
    only({"kind"});
    return PropertySpec::edgeless();
  }
  if (kind == "diameter_two") {
    only({"kind"});
    return PropertySpec::diameter_at_most_two();
  }
  if (kind == "biclique") {
    only({"kind", "i", "j"});
    return PropertySpec::biclique(get_int(v, "i", "property"),
                                  get_int(v, "j", "property"));
  }
  if (kind == "shortest_st_path") {
    only({"kind", "s", "t"});
    return PropertySpec::shortest_st_path(get_int(v, "s", "property"),
                                          get_int(v, "t", "property"));
  }
  throw input_error("instance json: unknown property kind \"" + kind + "\"");
}

Solution parse_solution(const json& v, SolutionKind kind, const char* where) {
  if (!v.is_array())
    throw input_error(std::string("instance json: \"") + where +
                      "\" must be an array");
  if (kind == SolutionKind::EdgeSet) {
    std::vector<Edge> edges;
    edges.reserve(v.size());
    for (const json& e : v) edges.push_back(parse_edge(e, where));
    return Solution::edge_set(edges);
  }
  std::vector<int> verts;
  verts.reserve(v.size());
  for (const json& x : v) {
    if (!x.is_number_integer())
      throw input_error(std::string("instance json: \"") + where +
                        "\" must hold integers");
    verts.push_back(x.get<int>());
  }
  return Solution::vertex_set(verts);
}

json solution_to_json(const Solution& sol) {
  json arr = json::array();
  if (sol.kind() == SolutionKind::EdgeSet) {
    for (const Edge& e : sol.edges()) arr.push_back(json::array({e.u, e.v}));
  } else {
    for (int v : sol.vertices()) arr.push_back(v);
  }
  return arr;
}

}  // namespace

Instance parse_instance_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw input_error(std::string("instance json: ") + e.what());
  }
  if (!doc.is_object())
    throw input_error("instance json: top level must be an object");
  check_keys(doc, {"graph", "variant", "rule", "property", "source", "target"},
             "instance");
  Graph g = parse_graph(get_required(doc, "graph", "instance"));
  Variant variant = parse_variant(get_string(doc, "variant", "instance"));
  Rule rule = parse_rule(get_string(doc, "rule", "instance"));
  PropertySpec prop = parse_property(get_required(doc, "property", "instance"));
  SolutionKind kind = solution_kind_for(variant);
  Solution source =
      parse_solution(get_required(doc, "source", "instance"), kind, "source");
  Solution target =
      parse_solution(get_required(doc, "target", "instance"), kind, "target");
  return Instance{std::move(g), variant, rule, prop, std::move(source),
                  std::move(target)};
}

std::string serialize_instance_json(const Instance& inst) {
  json doc;
  json graph;
  graph["n"] = inst.graph.vertex_count();
  json edges = json::array();
  for (const Edge& e : inst.graph.edges())
    edges.push_back(json::array({e.u, e.v}));
  graph["edges"] = std::move(edges);
  doc["graph"] = std::move(graph);
  doc["variant"] = to_string(inst.variant);
  doc["rule"] = to_string(inst.rule);
  json prop;
  switch (inst.property.kind) {
    case PropertyKind::Path:
      prop["kind"] = "path";
      break;
    case PropertyKind::Cycle:
      prop["kind"] = "cycle";
      break;
    case PropertyKind::Tree:
      prop["kind"] = "tree";
      break;
    case PropertyKind::Clique:
      prop["kind"] = "clique";
      break;
    case PropertyKind::Edgeless:
      prop["kind"] = "edgeless";
      break;
    case PropertyKind::DiameterAtMostTwo:
      prop["kind"] = "diameter_two";
      break;
    case PropertyKind::Biclique:
      prop["kind"] = "biclique";
      prop["i"] = inst.property.i;
      prop["j"] = inst.property.j;
      break;
    case PropertyKind::ShortestStPath:
      prop["kind"] = "shortest_st_path";
      prop["s"] = inst.property.s;
      prop["t"] = inst.property.t;
      break;
  }
  doc["property"] = std::move(prop);
  doc["source"] = solution_to_json(inst.source);
  doc["target"] = solution_to_json(inst.target);
  return doc.dump(2) + "\n";
}

std::string format_solution(const Solution& sol) {
  std::ostringstream out;
  if (sol.kind() == SolutionKind::EdgeSet) {
    bool first = true;
    for (const Edge& e : sol.edges()) {
      if (!first) out << ' ';
      out << e.u << '-' << e.v;
      first = false;
    }
  } else {
    bool first = true;
    for (int v : sol.vertices()) {
      if (!first) out << ' ';
      out << v;
      first = false;
    }
  }
  return out.str();
}

Solution parse_solution_line(const std::string& line, SolutionKind kind) {
  std::istringstream in(line);
  if (kind == SolutionKind::EdgeSet) {
    std::vector<Edge> edges;
    std::string tok;
    while (in >> tok) {
      std::size_t dash = tok.find('-', 1);  // skip a leading minus sign
      if (dash == std::string::npos)
        throw input_error("sequence: edge token \"" + tok +
                          "\" is not of the form u-v");
      try {
        int u = std::stoi(tok.substr(0, dash));
        int v = std::stoi(tok.substr(dash + 1));
        edges.push_back(Edge(u, v));
      } catch (const std::exception&) {
        throw input_error("sequence: edge token \"" + tok +
                          "\" is not of the form u-v");
      }
    }
    return Solution::edge_set(edges);
  }
  std::vector<int> verts;
  int v;
  while (in >> v) verts.push_back(v);
  if (!in.eof())
    throw input_error("sequence: expected whitespace-separated integers");
  return Solution::vertex_set(verts);
}

std::string format_sequence(const ReconfigSequence& seq) {
  std::string out;
  for (const Solution& sol : seq.steps) {
    out += format_solution(sol);
    out += '\n';
  }
  return out;
}

std::vector<Solution> parse_sequence_text(const std::string& text,
                                          SolutionKind kind) {
  std::vector<Solution> steps;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) steps.push_back(parse_solution_line(line, kind));
  return steps;
}

std::string to_dot(const ReconfigGraph& rg) {
  std::ostringstream out;
  out << "graph reconfig {\n";
  out << "  node [shape=box];\n";
  for (std::size_t id = 0; id < rg.nodes.size(); ++id) {
    out << "  n" << id << " [label=\"" << format_solution(rg.nodes[id]) << "\"";
    bool is_src = static_cast<int>(id) == rg.source_index;
    bool is_dst = static_cast<int>(id) == rg.target_index;
    if (is_src && is_dst)
      out << ", style=filled, fillcolor=gold";
    else if (is_src)
      out << ", style=filled, fillcolor=lightblue";
    else if (is_dst)
      out << ", style=filled, fillcolor=palegreen";
    out << "];\n";
  }
  for (std::size_t id = 0; id < rg.nodes.size(); ++id)
    for (int other : rg.adj[id])
      if (static_cast<std::size_t>(other) > id)
        out << "  n" << id << " -- n" << other << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace subrecon
