#include "subrecon/feasibility.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace subrecon {

namespace {

// Spanning Path/Cycle need a Hamiltonian search over the solution; the
// subset DP below is exponential, so refuse absurd sizes instead of hanging.
constexpr int kHamiltonianLimit = 20;

/// The small graph a property is evaluated on: either the graph formed by an
/// edge subset or the subgraph induced by a vertex subset. Vertices are
/// re-indexed 0..nv-1; masks hold local adjacency (nv stays tiny in every
/// pipeline, but the structural checks below avoid masks where nv could grow).
struct LocalGraph {
  std::vector<int> verts;  // sorted global ids
  int nv = 0;
  int m = 0;
  std::vector<std::vector<int>> adj;
  std::vector<int> deg;

  int local_index(int global) const {
    auto it = std::lower_bound(verts.begin(), verts.end(), global);
    if (it == verts.end() || *it != global) return -1;
    return static_cast<int>(it - verts.begin());
  }
  bool has(int a, int b) const {
    const auto& nb = adj[a];
    return std::binary_search(nb.begin(), nb.end(), b);
  }
};

LocalGraph formed_by_edges(const std::vector<Edge>& es) {
  LocalGraph lg;
  for (const Edge& e : es) {
    lg.verts.push_back(e.u);
    lg.verts.push_back(e.v);
  }
  std::sort(lg.verts.begin(), lg.verts.end());
  lg.verts.erase(std::unique(lg.verts.begin(), lg.verts.end()),
                 lg.verts.end());
  lg.nv = static_cast<int>(lg.verts.size());
  lg.adj.assign(lg.nv, {});
  for (const Edge& e : es) {
    int a = lg.local_index(e.u), b = lg.local_index(e.v);
    lg.adj[a].push_back(b);
    lg.adj[b].push_back(a);
  }
  for (auto& nb : lg.adj) std::sort(nb.begin(), nb.end());
  lg.m = static_cast<int>(es.size());
  lg.deg.resize(lg.nv);
  for (int v = 0; v < lg.nv; ++v) lg.deg[v] = static_cast<int>(lg.adj[v].size());
  return lg;
}

LocalGraph induced_by_vertices(const Graph& g, const std::vector<int>& vs) {
  LocalGraph lg;
  lg.verts = vs;  // already sorted
  lg.nv = static_cast<int>(vs.size());
  lg.adj.assign(lg.nv, {});
  for (int a = 0; a < lg.nv; ++a)
    for (int b = a + 1; b < lg.nv; ++b)
      if (g.has_edge(vs[a], vs[b])) {
        lg.adj[a].push_back(b);
        lg.adj[b].push_back(a);
        ++lg.m;
      }
  lg.deg.resize(lg.nv);
  for (int v = 0; v < lg.nv; ++v) lg.deg[v] = static_cast<int>(lg.adj[v].size());
  return lg;
}

bool is_connected(const LocalGraph& lg) {
  if (lg.nv == 0) return true;
  std::vector<bool> seen(lg.nv, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int cnt = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : lg.adj[u])
      if (!seen[w]) {
        seen[w] = true;
        ++cnt;
        stack.push_back(w);
      }
  }
  return cnt == lg.nv;
}

bool is_path_graph(const LocalGraph& lg) {
  if (lg.nv == 0) return true;
  if (lg.m != lg.nv - 1) return false;
  for (int v = 0; v < lg.nv; ++v)
    if (lg.deg[v] > 2) return false;
  return is_connected(lg);
}

bool is_cycle_graph(const LocalGraph& lg) {
  if (lg.nv < 3) return false;
  for (int v = 0; v < lg.nv; ++v)
    if (lg.deg[v] != 2) return false;
  return is_connected(lg);
}

bool is_tree_graph(const LocalGraph& lg) {
  if (lg.nv == 0) return true;
  return lg.m == lg.nv - 1 && is_connected(lg);
}

bool is_complete_graph(const LocalGraph& lg) {
  return 2 * lg.m == lg.nv * (lg.nv - 1);
}

/// Exactly K_{i,j}: connected complete bipartite with those part sizes.
bool is_complete_bipartite(const LocalGraph& lg, int i, int j) {
  if (lg.nv != i + j || lg.nv < 2) return false;
  if (!is_connected(lg)) return false;
  std::vector<int> color(lg.nv, -1);
  std::vector<int> stack{0};
  color[0] = 0;
  int sizes[2] = {1, 0};
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : lg.adj[u]) {
      if (color[w] < 0) {
        color[w] = 1 - color[u];
        ++sizes[color[w]];
        stack.push_back(w);
      } else if (color[w] == color[u]) {
        return false;
      }
    }
  }
  if (!((sizes[0] == i && sizes[1] == j) || (sizes[0] == j && sizes[1] == i)))
    return false;
  // Bipartite with the right part sizes; complete iff the edge count maxes out.
  return lg.m == i * j;
}

bool has_diameter_at_most_two(const LocalGraph& lg) {
  if (lg.nv <= 1) return true;
  // Two-level BFS per vertex; nv is small everywhere this runs.
  for (int s = 0; s < lg.nv; ++s) {
    std::vector<int> dist(lg.nv, -1);
    dist[s] = 0;
    std::vector<int> frontier{s};
    for (int level = 0; level < 2 && !frontier.empty(); ++level) {
      std::vector<int> next;
      for (int u : frontier)
        for (int w : lg.adj[u])
          if (dist[w] < 0) {
            dist[w] = level + 1;
            next.push_back(w);
          }
      frontier = std::move(next);
    }
    for (int v = 0; v < lg.nv; ++v)
      if (dist[v] < 0) return false;
  }
  return true;
}

bool has_hamiltonian_path(const LocalGraph& lg) {
  if (lg.nv <= 1) return true;
  if (lg.nv > kHamiltonianLimit)
    throw budget_error("spanning path check: solution too large");
  if (!is_connected(lg)) return false;
  std::vector<std::uint64_t> masks(lg.nv, 0);
  for (int v = 0; v < lg.nv; ++v)
    for (int w : lg.adj[v]) masks[v] |= std::uint64_t{1} << w;
  // ends[S] = vertices at which some path covering exactly S can end.
  std::vector<std::uint64_t> ends(std::size_t{1} << lg.nv, 0);
  for (int v = 0; v < lg.nv; ++v)
    ends[std::uint64_t{1} << v] = std::uint64_t{1} << v;
  std::uint64_t full = (std::uint64_t{1} << lg.nv) - 1;
  for (std::uint64_t s = 1; s <= full; ++s) {
    std::uint64_t e = ends[s];
    if (!e) continue;
    if (s == full) return true;
    for (int v = 0; v < lg.nv; ++v) {
      if (!(e >> v & 1)) continue;
      std::uint64_t ext = masks[v] & ~s;
      while (ext) {
        int w = std::countr_zero(ext);
        ext &= ext - 1;
        ends[s | (std::uint64_t{1} << w)] |= std::uint64_t{1} << w;
      }
    }
  }
  return false;
}

bool has_hamiltonian_cycle(const LocalGraph& lg) {
  if (lg.nv < 3) return false;
  if (lg.nv > kHamiltonianLimit)
    throw budget_error("spanning cycle check: solution too large");
  for (int v = 0; v < lg.nv; ++v)
    if (lg.deg[v] < 2) return false;
  if (!is_connected(lg)) return false;
  std::vector<std::uint64_t> masks(lg.nv, 0);
  for (int v = 0; v < lg.nv; ++v)
    for (int w : lg.adj[v]) masks[v] |= std::uint64_t{1} << w;
  // Paths anchored at vertex 0; close the cycle with an edge back to 0.
  std::uint64_t full = (std::uint64_t{1} << lg.nv) - 1;
  std::vector<std::uint64_t> ends(std::size_t{1} << lg.nv, 0);
  ends[1] = 1;
  for (std::uint64_t s = 1; s <= full; ++s) {
    if (!(s & 1)) continue;
    std::uint64_t e = ends[s];
    if (!e) continue;
    if (s == full && (e & masks[0])) return true;
    for (int v = 0; v < lg.nv; ++v) {
      if (!(e >> v & 1)) continue;
      std::uint64_t ext = masks[v] & ~s;
      while (ext) {
        int w = std::countr_zero(ext);
        ext &= ext - 1;
        ends[s | (std::uint64_t{1} << w)] |= std::uint64_t{1} << w;
      }
    }
  }
  return false;
}

/// Some bipartition (X, rest) with |X| = a covers every cross pair.
bool has_spanning_biclique(const LocalGraph& lg, int i, int j) {
  if (lg.nv != i + j) return false;
  int a = std::min(i, j);
  std::vector<int> pick(a);
  std::iota(pick.begin(), pick.end(), 0);
  auto complete_across = [&](const std::vector<int>& side) {
    std::vector<bool> in_side(lg.nv, false);
    for (int v : side) in_side[v] = true;
    for (int x : side)
      for (int y = 0; y < lg.nv; ++y)
        if (!in_side[y] && !lg.has(x, y)) return false;
    return true;
  };
  if (a == 0) return lg.nv == 0;
  while (true) {
    if (complete_across(pick)) return true;
    int pos = a - 1;
    while (pos >= 0 && pick[pos] == lg.nv - a + pos) --pos;
    if (pos < 0) return false;
    ++pick[pos];
    for (int q = pos + 1; q < a; ++q) pick[q] = pick[q - 1] + 1;
  }
}

/// Vertex set of some shortest s-t path: one vertex per distance layer,
/// consecutive layers joined by an edge.
bool is_shortest_st_path_set(const Graph& g, const std::vector<int>& vs,
                             int s, int t) {
  if (!g.has_vertex(s) || !g.has_vertex(t))
    throw input_error("shortest_st_path: endpoint out of range");
  auto ds = bfs_distances(g, s);
  auto dt = bfs_distances(g, t);
  int d = ds[t];
  if (d < 0) return false;  // no s-t path exists at all
  if (static_cast<int>(vs.size()) != d + 1) return false;
  std::vector<int> by_layer(d + 1, -1);
  for (int v : vs) {
    if (ds[v] < 0 || dt[v] < 0 || ds[v] + dt[v] != d) return false;
    if (by_layer[ds[v]] != -1) return false;
    by_layer[ds[v]] = v;
  }
  if (by_layer[0] != s || by_layer[d] != t) return false;
  for (int k = 0; k + 1 <= d; ++k)
    if (!g.has_edge(by_layer[k], by_layer[k + 1])) return false;
  return true;
}

/// Edge set forming a shortest s-t path.
bool is_shortest_st_path_edges(const Graph& g, const LocalGraph& lg, int s,
                               int t) {
  if (!g.has_vertex(s) || !g.has_vertex(t))
    throw input_error("shortest_st_path: endpoint out of range");
  if (!is_path_graph(lg) || lg.nv < 2) return false;
  std::vector<int> endpoints;
  for (int v = 0; v < lg.nv; ++v)
    if (lg.deg[v] == 1) endpoints.push_back(lg.verts[v]);
  std::sort(endpoints.begin(), endpoints.end());
  std::vector<int> want{std::min(s, t), std::max(s, t)};
  if (endpoints != want) return false;
  auto dist = bfs_distances(g, s);
  return dist[t] == lg.m;
}

bool check_on_formed(const Graph& g, const LocalGraph& lg,
                     const PropertySpec& prop) {
  switch (prop.kind) {
    case PropertyKind::Path: return is_path_graph(lg);
    case PropertyKind::Cycle: return is_cycle_graph(lg);
    case PropertyKind::Tree: return is_tree_graph(lg);
    case PropertyKind::Clique: return lg.nv > 0 && is_complete_graph(lg);
    case PropertyKind::Biclique: return is_complete_bipartite(lg, prop.i, prop.j);
    case PropertyKind::Edgeless: return lg.m == 0;
    case PropertyKind::DiameterAtMostTwo: return has_diameter_at_most_two(lg);
    case PropertyKind::ShortestStPath:
      return is_shortest_st_path_edges(g, lg, prop.s, prop.t);
  }
  return false;
}

bool check_on_induced(const Graph& g, const LocalGraph& lg,
                      const PropertySpec& prop) {
  switch (prop.kind) {
    case PropertyKind::Path: return is_path_graph(lg);
    case PropertyKind::Cycle: return is_cycle_graph(lg);
    case PropertyKind::Tree: return is_tree_graph(lg);
    case PropertyKind::Clique: return is_complete_graph(lg);
    case PropertyKind::Biclique: return is_complete_bipartite(lg, prop.i, prop.j);
    case PropertyKind::Edgeless: return lg.m == 0;
    case PropertyKind::DiameterAtMostTwo: return has_diameter_at_most_two(lg);
    case PropertyKind::ShortestStPath:
      return is_shortest_st_path_set(g, lg.verts, prop.s, prop.t);
  }
  return false;
}

bool check_on_spanning(const Graph& g, const LocalGraph& lg,
                       const PropertySpec& prop) {
  switch (prop.kind) {
    case PropertyKind::Path: return has_hamiltonian_path(lg);
    case PropertyKind::Cycle: return has_hamiltonian_cycle(lg);
    case PropertyKind::Tree: return is_connected(lg);
    // A spanning clique needs every pair adjacent, so it matches induced.
    case PropertyKind::Clique: return is_complete_graph(lg);
    case PropertyKind::Biclique: return has_spanning_biclique(lg, prop.i, prop.j);
    // The empty spanning subgraph is always edgeless.
    case PropertyKind::Edgeless: return true;
    // A spanning subgraph of diameter <= 2 forces the induced one to <= 2
    // and vice versa, so the variants coincide here.
    case PropertyKind::DiameterAtMostTwo: return has_diameter_at_most_two(lg);
    case PropertyKind::ShortestStPath:
      return is_shortest_st_path_set(g, lg.verts, prop.s, prop.t);
  }
  return false;
}

}  // namespace

bool check_property(const Graph& g, const Solution& sol, Variant variant,
                    const PropertySpec& prop) {
  if (sol.kind() != solution_kind_for(variant))
    throw input_error("check_property: solution kind does not match variant");
  validate_solution(g, sol);
  if (variant == Variant::Edge) {
    LocalGraph lg = formed_by_edges(sol.edges());
    return check_on_formed(g, lg, prop);
  }
  LocalGraph lg = induced_by_vertices(g, sol.vertices());
  return variant == Variant::Induced ? check_on_induced(g, lg, prop)
                                     : check_on_spanning(g, lg, prop);
}

bool diameter_at_most_two(const Graph& g, const std::vector<int>& vs) {
  Solution sol = Solution::vertex_set(vs);
  validate_solution(g, sol);
  LocalGraph lg = induced_by_vertices(g, sol.vertices());
  return has_diameter_at_most_two(lg);
}

void validate_solution(const Graph& g, const Solution& sol) {
  if (sol.kind() == SolutionKind::VertexSet) {
    for (int v : sol.vertices())
      if (!g.has_vertex(v))
        throw input_error("solution: vertex " + std::to_string(v) +
                          " out of range");
  } else {
    for (const Edge& e : sol.edges())
      if (!g.has_edge(e))
        throw input_error("solution: edge " + std::to_string(e.u) + "-" +
                          std::to_string(e.v) + " not in graph");
  }
}

void validate_instance(const Instance& inst) {
  const PropertySpec& p = inst.property;
  if (p.kind == PropertyKind::Biclique && (p.i < 1 || p.j < 1))
    throw input_error("instance: biclique part sizes must be >= 1");
  if (p.kind == PropertyKind::ShortestStPath) {
    if (!inst.graph.has_vertex(p.s) || !inst.graph.has_vertex(p.t))
      throw input_error("instance: shortest_st_path endpoint out of range");
    if (p.s == p.t)
      throw input_error("instance: shortest_st_path endpoints must differ");
  }
  SolutionKind want = solution_kind_for(inst.variant);
  if (inst.source.kind() != want || inst.target.kind() != want)
    throw input_error("instance: solution kind does not match variant");
  validate_solution(inst.graph, inst.source);
  validate_solution(inst.graph, inst.target);
  if (!check_property(inst.graph, inst.source, inst.variant, p))
    throw input_error("instance: source solution is infeasible");
  if (!check_property(inst.graph, inst.target, inst.variant, p))
    throw input_error("instance: target solution is infeasible");
}

}  // namespace subrecon
