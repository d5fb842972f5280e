#include "subrecon/source_problems.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace subrecon {

namespace {

constexpr int kExactSearchLimit = 20;

std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint32_t> adj(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= std::uint32_t{1} << e.v;
    adj[e.v] |= std::uint32_t{1} << e.u;
  }
  return adj;
}

}  // namespace

bool has_hamiltonian_st_path(const Graph& g, int s, int t) {
  if (!g.has_vertex(s) || !g.has_vertex(t))
    throw input_error("hamiltonian path: endpoint out of range");
  if (s == t) throw input_error("hamiltonian path: endpoints coincide");
  int n = g.vertex_count();
  if (n > kExactSearchLimit)
    throw budget_error("hamiltonian path: graph too large for exact search");
  std::vector<std::uint32_t> adj = adjacency_masks(g);
  std::uint32_t full = (std::uint32_t{1} << n) - 1;
  // ends[mask] = endpoints of paths that start at s and cover exactly mask
  std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
  ends[std::uint32_t{1} << s] = std::uint32_t{1} << s;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    std::uint32_t e = ends[mask];
    if (!e) continue;
    while (e) {
      int v = std::countr_zero(e);
      e &= e - 1;
      std::uint32_t next = adj[v] & ~mask;
      while (next) {
        int w = std::countr_zero(next);
        next &= next - 1;
        ends[mask | (std::uint32_t{1} << w)] |= std::uint32_t{1} << w;
      }
    }
  }
  return (ends[full] >> t) & 1;
}

bool is_independent_set(const Graph& g, const std::vector<int>& vs) {
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b)
      if (g.has_edge(vs[a], vs[b])) return false;
  return true;
}

int independence_number(const Graph& g) {
  int n = g.vertex_count();
  if (n > kExactSearchLimit)
    throw budget_error("independence number: graph too large for exact search");
  std::vector<std::uint32_t> adj = adjacency_masks(g);
  int best = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    bool ok = true;
    for (std::uint32_t rest = mask; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      if (adj[v] & mask) {
        ok = false;
        break;
      }
    }
    if (ok) best = std::max(best, std::popcount(mask));
  }
  return best;
}

bool is_clique(const Graph& g, const std::vector<int>& vs) {
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b)
      if (!g.has_edge(vs[a], vs[b])) return false;
  return true;
}

bool has_balanced_biclique(const Graph& g, int k) {
  if (k <= 0) throw input_error("balanced biclique: k must be positive");
  int n = g.vertex_count();
  if (k > n) return false;
  // every k-subset as the left side; the right side needs k common neighbors
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    int common = 0;
    for (int v = 0; v < n; ++v) {
      bool in_pick = std::find(pick.begin(), pick.end(), v) != pick.end();
      if (in_pick) continue;
      bool all = true;
      for (int u : pick)
        if (!g.has_edge(u, v)) {
          all = false;
          break;
        }
      if (all) ++common;
    }
    if (common >= k) return true;
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return false;
}

}  // namespace subrecon
