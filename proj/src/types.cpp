#include "subrecon/types.hpp"

#include <algorithm>

namespace subrecon {

PropertySpec PropertySpec::biclique(int i, int j) {
  if (i < 1 || j < 1) throw input_error("biclique: part sizes must be >= 1");
  return {PropertyKind::Biclique, i, j, -1, -1};
}

PropertySpec PropertySpec::shortest_st_path(int s, int t) {
  if (s == t) throw input_error("shortest_st_path: s and t must differ");
  return {PropertyKind::ShortestStPath, 0, 0, s, t};
}

Solution Solution::vertex_set(std::vector<int> vs) {
  std::sort(vs.begin(), vs.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
    throw input_error("solution: duplicate vertex");
  Solution s;
  s.kind_ = SolutionKind::VertexSet;
  s.vertices_ = std::move(vs);
  return s;
}

Solution Solution::edge_set(std::vector<Edge> es) {
  std::sort(es.begin(), es.end());
  if (std::adjacent_find(es.begin(), es.end()) != es.end())
    throw input_error("solution: duplicate edge");
  Solution s;
  s.kind_ = SolutionKind::EdgeSet;
  s.edges_ = std::move(es);
  return s;
}

bool Solution::contains_vertex(int v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Solution::contains_edge(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::string to_string(Variant v) {
  switch (v) {
    case Variant::Edge: return "edge";
    case Variant::Induced: return "induced";
    case Variant::Spanning: return "spanning";
  }
  return "?";
}

std::string to_string(Rule r) { return r == Rule::TJ ? "tj" : "ts"; }

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Yes: return "YES";
    case VerdictKind::No: return "NO";
    case VerdictKind::BudgetExceeded: return "BUDGET_EXCEEDED";
  }
  return "?";
}

std::string to_string(const PropertySpec& p) {
  switch (p.kind) {
    case PropertyKind::Path: return "path";
    case PropertyKind::Cycle: return "cycle";
    case PropertyKind::Tree: return "tree";
    case PropertyKind::Clique: return "clique";
    case PropertyKind::Biclique:
      return "biclique(" + std::to_string(p.i) + "," + std::to_string(p.j) +
             ")";
    case PropertyKind::Edgeless: return "edgeless";
    case PropertyKind::DiameterAtMostTwo: return "diameter_two";
    case PropertyKind::ShortestStPath:
      return "shortest_st_path(" + std::to_string(p.s) + "," +
             std::to_string(p.t) + ")";
  }
  return "?";
}

}  // namespace subrecon
