#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "subrecon/graph.hpp"

namespace subrecon {

enum class Variant { Edge, Induced, Spanning };
enum class Rule { TJ, TS };

enum class PropertyKind {
  Path,
  Cycle,
  Tree,
  Clique,
  Biclique,
  Edgeless,
  DiameterAtMostTwo,
  ShortestStPath,
};

/// A target graph property, possibly parameterized. Biclique carries part
/// sizes (i,j); ShortestStPath carries the endpoint pair (s,t) it connects.
struct PropertySpec {
  PropertyKind kind = PropertyKind::Path;
  int i = 0;  // Biclique only
  int j = 0;  // Biclique only
  int s = -1; // ShortestStPath only
  int t = -1; // ShortestStPath only

  static PropertySpec path() { return {PropertyKind::Path, 0, 0, -1, -1}; }
  static PropertySpec cycle() { return {PropertyKind::Cycle, 0, 0, -1, -1}; }
  static PropertySpec tree() { return {PropertyKind::Tree, 0, 0, -1, -1}; }
  static PropertySpec clique() { return {PropertyKind::Clique, 0, 0, -1, -1}; }
  static PropertySpec biclique(int i, int j);
  static PropertySpec edgeless() {
    return {PropertyKind::Edgeless, 0, 0, -1, -1};
  }
  static PropertySpec diameter_at_most_two() {
    return {PropertyKind::DiameterAtMostTwo, 0, 0, -1, -1};
  }
  static PropertySpec shortest_st_path(int s, int t);

  friend bool operator==(const PropertySpec&, const PropertySpec&) = default;
};

enum class SolutionKind { VertexSet, EdgeSet };

/// A candidate solution: either a vertex subset or an edge subset of the host
/// graph, kept in canonical sorted order with distinct elements.
class Solution {
 public:
  Solution() = default;

  static Solution vertex_set(std::vector<int> vs);
  static Solution edge_set(std::vector<Edge> es);

  SolutionKind kind() const { return kind_; }
  std::size_t size() const {
    return kind_ == SolutionKind::VertexSet ? vertices_.size() : edges_.size();
  }
  bool empty() const { return size() == 0; }

  const std::vector<int>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool contains_vertex(int v) const;
  bool contains_edge(const Edge& e) const;

  friend bool operator==(const Solution&, const Solution&) = default;
  friend auto operator<=>(const Solution&, const Solution&) = default;

 private:
  SolutionKind kind_ = SolutionKind::VertexSet;
  std::vector<int> vertices_;
  std::vector<Edge> edges_;
};

/// The kind of solution a variant reconfigures.
inline SolutionKind solution_kind_for(Variant v) {
  return v == Variant::Edge ? SolutionKind::EdgeSet : SolutionKind::VertexSet;
}

/// A full reconfiguration question: graph, variant, move rule, property and
/// the two endpoint solutions.
struct Instance {
  Graph graph;
  Variant variant = Variant::Edge;
  Rule rule = Rule::TJ;
  PropertySpec property;
  Solution source;
  Solution target;
};

/// Witness for a YES answer: steps[0] is the source, steps.back() the target,
/// and consecutive steps differ by exactly one legal token move.
struct ReconfigSequence {
  std::vector<Solution> steps;

  std::size_t move_count() const { return steps.empty() ? 0 : steps.size() - 1; }
};

enum class VerdictKind { Yes, No, BudgetExceeded };

struct Verdict {
  VerdictKind kind = VerdictKind::No;
  std::optional<ReconfigSequence> sequence;  // present iff kind == Yes

  static Verdict yes(ReconfigSequence seq) {
    return {VerdictKind::Yes, std::move(seq)};
  }
  static Verdict no() { return {VerdictKind::No, std::nullopt}; }
  static Verdict budget_exceeded() {
    return {VerdictKind::BudgetExceeded, std::nullopt};
  }
};

/// Outcome of a solve plus bookkeeping for reporting: which engine answered
/// and how much of the reconfiguration graph it explored (zero for the
/// closed-form solvers, which never build one).
struct SolveResult {
  Verdict verdict;
  std::string solver;
  std::size_t rg_nodes = 0;
  std::size_t rg_edges = 0;
};

std::string to_string(Variant v);
std::string to_string(Rule r);
std::string to_string(VerdictKind k);
std::string to_string(const PropertySpec& p);

}  // namespace subrecon
