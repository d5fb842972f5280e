#pragma once

#include "subrecon/oracle.hpp"
#include "subrecon/types.hpp"

namespace subrecon {

struct DispatchOptions {
  OracleBudget budget;
  // Spanning-biclique instances route to the hub-graph solver only while
  // min(i,j) stays at or below this; larger hubs go to the oracle.
  int fixed_i_threshold = 3;
};

/// Routes an instance to the fastest engine that decides it: closed-form
/// solvers where the problem admits one, the exhaustive oracle otherwise.
/// Size-mismatched endpoints are answered NO without any search. Every YES
/// carries a witness sequence.
SolveResult dispatch(const Instance& inst, const DispatchOptions& opts = {});

/// Edge-variant Cycle under either rule. A feasible cycle has no legal
/// moves at all, so the answer is YES exactly when source equals target.
SolveResult solve_edge_cycle(const Instance& inst);

/// Edge-variant Clique under either rule; rigid for the same reason.
SolveResult solve_edge_clique(const Instance& inst);

/// Edge-variant Biclique(i,j) under either rule. With both parts >= 2 the
/// solutions are rigid; stars with >= 3 leaves reconfigure leaf by leaf iff
/// the centers coincide; one- and two-edge solutions reduce to connectivity
/// walks, except two-edge sliding which goes to the oracle.
SolveResult solve_edge_biclique(const Instance& inst,
                                const OracleBudget& budget);

/// Edge-variant Tree under jumping. YES iff the solution has at most one
/// edge or all edges of both solutions share one connected component; the
/// witness migrates the source tree and then grows the common subtree.
SolveResult solve_edge_tree_tj(const Instance& inst);

/// Spanning Tree under jumping. YES iff both vertex sets share a connected
/// component; witnesses come from reconfiguring spanning trees of the two
/// solutions edge by edge and projecting to vertex sets.
SolveResult solve_spanning_tree_tj(const Instance& inst);

/// Spanning Biclique(i,j) under jumping with small min(i,j). Walks the hub
/// graph; delegates to the oracle when i = j, where the hub side is not
/// fixed.
SolveResult solve_spanning_biclique_fixed_i(const Instance& inst,
                                            const OracleBudget& budget);

}  // namespace subrecon
