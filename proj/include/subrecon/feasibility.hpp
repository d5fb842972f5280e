#pragma once

#include "subrecon/graph.hpp"
#include "subrecon/types.hpp"

namespace subrecon {

/// Does the solution satisfy the property under the given variant?
///
/// Edge variant: the graph formed by the edge subset (its vertices are the
/// endpoints of chosen edges) must satisfy the property. Induced: the
/// subgraph induced by the vertex subset must satisfy it. Spanning: the
/// induced subgraph must contain a spanning subgraph satisfying it.
///
/// Size-zero solutions are vacuously feasible except for properties that
/// require positive size: Cycle, Biclique and ShortestStPath always fail on
/// the empty set, and the empty edge set does not count as a Clique.
///
/// Throws input_error if the solution kind does not match the variant or the
/// solution is not well-formed for g. The spanning Path/Cycle checks are
/// exponential in |sol| and throw budget_error beyond 20 vertices.
bool check_property(const Graph& g, const Solution& sol, Variant variant,
                    const PropertySpec& prop);

/// True iff every pair of vertices in vs lies at distance <= 2 inside the
/// subgraph induced by vs. Vacuously true for |vs| <= 1.
bool diameter_at_most_two(const Graph& g, const std::vector<int>& vs);

/// Throws input_error unless sol's elements all belong to g.
void validate_solution(const Graph& g, const Solution& sol);

/// Throws input_error unless inst is well-formed: property parameters in
/// range, solution kinds matching the variant, and both endpoints feasible.
void validate_instance(const Instance& inst);

}  // namespace subrecon
