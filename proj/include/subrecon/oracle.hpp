#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "subrecon/graph.hpp"
#include "subrecon/types.hpp"

namespace subrecon {

/// Resource limits for the exhaustive engine. Candidate generation counts
/// every size-k subset examined; exceeding either limit aborts with
/// budget_error rather than returning a wrong NO.
struct OracleBudget {
  std::size_t max_candidates = 5000000;
  int max_k = 12;
};

/// Reads the RECONFIG_BUDGET environment variable (a candidate-count
/// override) on top of the defaults. Invalid values are ignored.
OracleBudget budget_from_env();

/// Every feasible solution of the instance's size, in canonical
/// lexicographic order. Throws budget_error if k exceeds budget.max_k or the
/// number of candidate subsets exceeds budget.max_candidates.
std::vector<Solution> enumerate_solutions(const Instance& inst,
                                          const OracleBudget& budget);

/// Explicit reconfiguration graph: one node per feasible solution, edges
/// between solutions one legal move apart.
struct ReconfigGraph {
  std::vector<Solution> nodes;        // canonical lexicographic order
  std::vector<std::vector<int>> adj;  // ascending node indices
  int source_index = -1;
  int target_index = -1;

  std::size_t edge_count() const;
};

/// Materializes the reconfiguration graph. Throws input_error if source or
/// target is infeasible, budget_error on blown budget.
ReconfigGraph build_reconfig_graph(const Instance& inst,
                                   const OracleBudget& budget);

/// Shortest node-index path between two nodes of rg, or nullopt if none.
/// Deterministic: BFS in node order with ascending neighbor expansion.
std::optional<std::vector<int>> shortest_node_path(const ReconfigGraph& rg,
                                                   int from, int to);

/// Breadth-first reachability over the full reconfiguration graph; YES
/// verdicts carry a shortest witness sequence. Falls back to an implicit
/// frontier search (never materializing adjacency) when the node count
/// exceeds an internal memory threshold.
SolveResult solve_bfs(const Instance& inst, const OracleBudget& budget);

namespace detail {
/// solve_bfs with an explicit materialization threshold, for testing the
/// implicit fallback engine against the default path.
SolveResult solve_bfs_with_limit(const Instance& inst,
                                 const OracleBudget& budget,
                                 std::size_t explicit_node_limit);
}  // namespace detail

}  // namespace subrecon
