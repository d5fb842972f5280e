#pragma once

#include <map>
#include <string>
#include <vector>

#include "subrecon/graph.hpp"
#include "subrecon/types.hpp"

namespace subrecon {

/// Shortest-path layer decomposition between two vertices: sets[i] holds the
/// vertices at distance i from s that lie on some shortest s-t path, so
/// sets.front() == {s} and sets.back() == {t}. Vertices on no shortest path
/// appear in no layer.
struct Layers {
  std::vector<std::vector<int>> sets;

  int distance() const { return static_cast<int>(sets.size()) - 1; }
};

/// Throws input_error when s == t or t is unreachable from s.
Layers shortest_path_layers(const Graph& g, int s, int t);

/// g plus every missing edge inside each layer. Layer membership and
/// shortest s-t paths are unchanged by the added edges.
Graph make_layers_cliques(const Graph& g, const Layers& layers);

/// A constructed instance plus the bookkeeping tests need: where each input
/// vertex ended up (always the identity here; inputs are never renumbered)
/// and a name for every added vertex.
struct GadgetOutput {
  Instance instance;
  std::vector<int> vertex_map;
  std::map<std::string, int> annotation;
};

/// Instance of the edge variant (TJ, path property) that is a yes-instance
/// exactly when g has a Hamiltonian path from s to t. Adds 2n+5 vertices:
/// v, x, w and two pendant paths of n+1 edges each hanging from x.
GadgetOutput reduce_hampath_to_edge_path(const Graph& g, int s, int t);

/// Instance of the chosen variant (path property) that mirrors a
/// shortest-path reconfiguration instance: four new vertices extend every
/// solution path beyond s and t so its ends can never move. The rule is TJ
/// when g has no intra-layer edges and TS when every layer is a clique;
/// partially filled layers are rejected.
GadgetOutput reduce_spr_to_path(const Graph& g, int s, int t,
                                const std::vector<int>& v_s,
                                const std::vector<int>& v_t, Variant variant);

/// Same as reduce_spr_to_path but closing the path into a cycle through two
/// new vertices.
GadgetOutput reduce_spr_to_cycle(const Graph& g, int s, int t,
                                 const std::vector<int>& v_s,
                                 const std::vector<int>& v_t, Variant variant);

/// Path gadget on the clique-layered graph with property Tree, variant
/// Spanning, rule TS: every feasible solution is forced to be a path, so the
/// spanning-tree instance tracks the shortest-path instance.
GadgetOutput reduce_spr_to_spanning_tree_ts(const Graph& g, int s, int t,
                                            const std::vector<int>& v_s,
                                            const std::vector<int>& v_t);

/// Instance of the induced variant (TJ, biclique(i, |v_s|+1)) equivalent to
/// reconfiguring maximum independent sets of g: i new vertices complete to
/// all of g pin one side, one extra vertex pins the other.
GadgetOutput reduce_misr_to_induced_biclique(const Graph& g,
                                             const std::vector<int>& v_s,
                                             const std::vector<int>& v_t,
                                             int i);

/// Instance of the spanning variant (TJ, biclique(k,k)) that is a
/// yes-instance exactly when the bipartite graph g contains a complete
/// bipartite subgraph with k vertices a side. Throws input_error if g is not
/// bipartite. The bipartition is recovered by 2-coloring each component from
/// its smallest vertex.
GadgetOutput reduce_bcbs_to_spanning_biclique(const Graph& g, int k);

/// Instance of the induced variant (TS, diameter at most two) equivalent to
/// clique reconfiguration under TS: two copies of g joined by a perfect
/// matching, with one mirror vertex dropped from each endpoint so exactly
/// one vertex per solution is exposed. The dropped mirrors belong to the
/// smallest members of v_s and v_t.
GadgetOutput reduce_cliquer_to_diam2(const Graph& g,
                                     const std::vector<int>& v_s,
                                     const std::vector<int>& v_t);

}  // namespace subrecon
