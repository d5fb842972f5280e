#pragma once

#include <vector>

#include "subrecon/graph.hpp"

namespace subrecon {

/// Node of the hub graph used by the spanning-biclique solver: a candidate
/// hub set H (the small side of the biclique) together with C(H), the
/// vertices adjacent to every member of H. H represents the solution family
/// S(H) = { H + T : T subset of C(H), |T| = j }.
struct HubNode {
  std::vector<int> hub;     // sorted, |hub| = i
  std::vector<int> common;  // sorted, C(hub)
};

/// Vertices outside hub adjacent to every hub member, ascending.
std::vector<int> common_neighbors(const Graph& g, const std::vector<int>& hub);

/// Are the solution families of two hub sets one move apart? True iff some
/// V_a in S(H_a) and V_b in S(H_b) differ by at most one swapped vertex,
/// decided by closed-form overlap conditions on H and C(H) alone. i is the
/// hub size, j the terminal count (i < j).
bool aux_adjacent(const HubNode& a, const HubNode& b, int i, int j);

/// Hub graph over all size-i vertex subsets with |C(H)| >= j, nodes in
/// lexicographic hub order, adjacency ascending (self-loops omitted).
struct AuxGraph {
  std::vector<HubNode> nodes;
  std::vector<std::vector<int>> adj;

  int index_of(const std::vector<int>& hub) const;
};

AuxGraph build_aux_graph(const Graph& g, int i, int j);

/// All hub sets H with |H| = i whose family S(H) contains the vertex set vs
/// (vs sorted), in lexicographic order.
std::vector<std::vector<int>> hub_candidates(const Graph& g,
                                             const std::vector<int>& vs,
                                             int i);

}  // namespace subrecon
