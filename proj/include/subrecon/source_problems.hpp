#pragma once

#include <vector>

#include "subrecon/graph.hpp"

namespace subrecon {

/// True if g has a Hamiltonian path from s to t. Exact bitmask search;
/// graphs beyond 20 vertices are rejected with budget_error.
bool has_hamiltonian_st_path(const Graph& g, int s, int t);

/// True if vs is pairwise non-adjacent in g.
bool is_independent_set(const Graph& g, const std::vector<int>& vs);

/// Size of a largest independent set. Exact enumeration; graphs beyond 20
/// vertices are rejected with budget_error.
int independence_number(const Graph& g);

/// True if vs is pairwise adjacent in g.
bool is_clique(const Graph& g, const std::vector<int>& vs);

/// True if g contains a complete bipartite subgraph with k vertices on each
/// side (edges within a side are allowed; only the cross edges matter).
bool has_balanced_biclique(const Graph& g, int k);

}  // namespace subrecon
