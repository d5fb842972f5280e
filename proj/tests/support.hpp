#pragma once

// Shared helpers for the test binaries: tiny graph builders, enumeration of
// pairwise non-isomorphic graphs, and a brute-force reconfiguration model
// that shares only the feasibility predicate with the library. The naive
// model defines moves and reachability from first principles so the oracle
// and the specialized solvers can be checked against it.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <utility>
#include <vector>

#include "subrecon/feasibility.hpp"
#include "subrecon/graph.hpp"
#include "subrecon/types.hpp"

namespace ts {

using subrecon::Edge;
using subrecon::Graph;
using subrecon::Instance;
using subrecon::PropertySpec;
using subrecon::Rule;
using subrecon::Solution;
using subrecon::SolutionKind;
using subrecon::Variant;

inline Graph make_graph(int n, const std::vector<std::pair<int, int>>& es) {
  std::vector<Edge> edges;
  edges.reserve(es.size());
  for (auto [u, v] : es) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

inline Graph path_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return Graph(n, std::move(es));
}

inline Graph cycle_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(es));
}

inline Graph complete_graph(int n) {
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
  return Graph(n, std::move(es));
}

// Star with the center at vertex 0 and the given number of leaves.
inline Graph star_graph(int leaves) {
  std::vector<Edge> es;
  for (int i = 1; i <= leaves; ++i) es.emplace_back(0, i);
  return Graph(leaves + 1, std::move(es));
}

inline Solution vset(std::vector<int> vs) {
  return Solution::vertex_set(std::move(vs));
}

inline Solution eset(const std::vector<std::pair<int, int>>& es) {
  std::vector<Edge> edges;
  edges.reserve(es.size());
  for (auto [u, v] : es) edges.emplace_back(u, v);
  return Solution::edge_set(std::move(edges));
}

inline Instance make_instance(Graph g, Variant variant, Rule rule,
                              PropertySpec prop, Solution source,
                              Solution target) {
  return Instance{std::move(g), variant, rule, std::move(prop),
                  std::move(source), std::move(target)};
}

// ---- enumeration of non-isomorphic graphs ----

// Bit position of the pair (u,v), u < v, in lexicographic order.
inline int pair_bit(int u, int v, int n) {
  int idx = 0;
  for (int a = 0; a < u; ++a) idx += n - a - 1;
  return idx + (v - u - 1);
}

inline Graph graph_from_mask(int n, std::uint32_t mask) {
  std::vector<Edge> es;
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if (mask >> bit & 1u) es.emplace_back(u, v);
  return Graph(n, std::move(es));
}

// All graphs on exactly n labeled vertices, one representative per
// isomorphism class. Canonical form: the smallest edge bitmask over all
// vertex relabelings. Practical up to n = 6.
inline const std::vector<Graph>& nonisomorphic_graphs(int n) {
  static std::map<int, std::vector<Graph>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  int bits = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> pair_of(bits);
  {
    int b = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v, ++b) pair_of[b] = {u, v};
  }
  std::vector<std::vector<int>> bit_maps;  // per permutation: bit -> bit
  {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<int> bm(bits);
      for (int b = 0; b < bits; ++b) {
        auto [u, v] = pair_of[b];
        int pu = perm[u], pv = perm[v];
        if (pu > pv) std::swap(pu, pv);
        bm[b] = pair_bit(pu, pv, n);
      }
      bit_maps.push_back(std::move(bm));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
    bool canonical = true;
    for (const auto& bm : bit_maps) {
      std::uint32_t img = 0;
      for (std::uint32_t rest = mask; rest;) {
        int b = std::countr_zero(rest);
        rest &= rest - 1;
        img |= 1u << bm[b];
      }
      if (img < mask) {
        canonical = false;
        break;
      }
    }
    if (canonical) out.push_back(graph_from_mask(n, mask));
  }
  return cache.emplace(n, std::move(out)).first->second;
}

inline bool graph_connected(const Graph& g) {
  if (g.vertex_count() <= 1) return true;
  std::vector<char> seen(g.vertex_count(), 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : g.neighbors_of(u))
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        q.push(w);
      }
  }
  return reached == g.vertex_count();
}

inline std::vector<Graph> nonisomorphic_connected_graphs(int n) {
  std::vector<Graph> out;
  for (const Graph& g : nonisomorphic_graphs(n))
    if (graph_connected(g)) out.push_back(g);
  return out;
}

// Seeded random graph with edge density drawn from {1/4, 1/2, 3/4}.
inline Graph random_graph(std::mt19937& rng, int n) {
  int num = static_cast<int>(rng() % 3) + 1;
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (static_cast<int>(rng() % 4) < num) es.emplace_back(u, v);
  return Graph(n, std::move(es));
}

// ---- brute-force reconfiguration model ----

template <typename Fn>
void for_each_combination(int m, int k, Fn&& fn) {
  if (k > m || k < 0) return;
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    fn(static_cast<const std::vector<int>&>(pick));
    int pos = k - 1;
    while (pos >= 0 && pick[pos] == m - k + pos) --pos;
    if (pos < 0) break;
    ++pick[pos];
    for (int q = pos + 1; q < k; ++q) pick[q] = pick[q - 1] + 1;
  }
}

// All feasible solutions of the instance's size, by scanning every subset
// of the element universe. Lexicographic order falls out of the scan.
inline std::vector<Solution> naive_feasible_solutions(const Instance& inst) {
  int k = static_cast<int>(inst.source.size());
  bool edge_kind = inst.variant == Variant::Edge;
  int m = edge_kind ? inst.graph.edge_count() : inst.graph.vertex_count();
  std::vector<Solution> out;
  for_each_combination(m, k, [&](const std::vector<int>& pick) {
    Solution cand;
    if (edge_kind) {
      std::vector<Edge> es;
      es.reserve(pick.size());
      for (int id : pick) es.push_back(inst.graph.edge_at(id));
      cand = Solution::edge_set(std::move(es));
    } else {
      cand = Solution::vertex_set(pick);
    }
    if (check_property(inst.graph, cand, inst.variant, inst.property))
      out.push_back(std::move(cand));
  });
  return out;
}

// One-token move legality written out from the definition: exactly one
// element leaves, one enters, and under token sliding the two are adjacent
// (vertices joined by an edge; edges sharing an endpoint).
inline bool naive_move_ok(const Graph& g, const Solution& a, const Solution& b,
                          Rule rule) {
  if (a.kind() != b.kind() || a.size() != b.size()) return false;
  if (a.kind() == SolutionKind::VertexSet) {
    std::vector<int> out, in;
    std::set_difference(a.vertices().begin(), a.vertices().end(),
                        b.vertices().begin(), b.vertices().end(),
                        std::back_inserter(out));
    std::set_difference(b.vertices().begin(), b.vertices().end(),
                        a.vertices().begin(), a.vertices().end(),
                        std::back_inserter(in));
    if (out.size() != 1 || in.size() != 1) return false;
    return rule == Rule::TJ || g.has_edge(out[0], in[0]);
  }
  std::vector<Edge> out, in;
  std::set_difference(a.edges().begin(), a.edges().end(), b.edges().begin(),
                      b.edges().end(), std::back_inserter(out));
  std::set_difference(b.edges().begin(), b.edges().end(), a.edges().begin(),
                      a.edges().end(), std::back_inserter(in));
  if (out.size() != 1 || in.size() != 1) return false;
  if (rule == Rule::TJ) return true;
  const Edge& x = out[0];
  const Edge& y = in[0];
  return x.u == y.u || x.u == y.v || x.v == y.u || x.v == y.v;
}

struct NaiveRg {
  std::vector<Solution> nodes;
  std::vector<std::vector<int>> adj;
  int source_index = -1;
  int target_index = -1;

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& a : adj) twice += a.size();
    return twice / 2;
  }
};

inline int naive_index_of(const std::vector<Solution>& nodes,
                          const Solution& s) {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), s);
  if (it == nodes.end() || !(*it == s)) return -1;
  return static_cast<int>(it - nodes.begin());
}

inline NaiveRg naive_reconfig_graph(const Instance& inst) {
  NaiveRg rg;
  rg.nodes = naive_feasible_solutions(inst);
  rg.adj.assign(rg.nodes.size(), {});
  for (std::size_t i = 0; i < rg.nodes.size(); ++i)
    for (std::size_t j = i + 1; j < rg.nodes.size(); ++j)
      if (naive_move_ok(inst.graph, rg.nodes[i], rg.nodes[j], inst.rule)) {
        rg.adj[i].push_back(static_cast<int>(j));
        rg.adj[j].push_back(static_cast<int>(i));
      }
  rg.source_index = naive_index_of(rg.nodes, inst.source);
  rg.target_index = naive_index_of(rg.nodes, inst.target);
  return rg;
}

inline std::vector<int> naive_bfs_dist(const std::vector<std::vector<int>>& adj,
                                       int src) {
  std::vector<int> dist(adj.size(), -1);
  std::queue<int> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : adj[u])
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
  }
  return dist;
}

// true iff the target node is reachable from the source node
inline bool naive_reachable(const NaiveRg& rg) {
  if (rg.source_index < 0 || rg.target_index < 0) return false;
  return naive_bfs_dist(rg.adj, rg.source_index)[rg.target_index] >= 0;
}

}  // namespace ts
