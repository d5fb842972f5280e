#include "subrecon/graph.hpp"

#include <algorithm>
#include <queue>

namespace subrecon {

namespace {
// Beyond this the packed matrix would dominate memory; fall back to
// binary-searching the sorted adjacency lists.
constexpr int kMatrixVertexLimit = 2048;
}  // namespace

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw input_error("graph: vertex count must be non-negative");
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u < 0 || e.v >= n_)
      throw input_error("graph: edge endpoint out of range");
    if (e.u == e.v) throw input_error("graph: self-loops are not allowed");
    if (i > 0 && edges_[i - 1] == e)
      throw input_error("graph: duplicate edge");
  }
  adj_.assign(n_, {});
  inc_.assign(n_, {});
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    adj_[edges_[i].u].push_back(edges_[i].v);
    adj_[edges_[i].v].push_back(edges_[i].u);
    inc_[edges_[i].u].push_back(static_cast<int>(i));
    inc_[edges_[i].v].push_back(static_cast<int>(i));
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
  if (n_ > 0 && n_ <= kMatrixVertexLimit) {
    words_per_row_ = (n_ + 63) / 64;
    matrix_.assign(static_cast<std::size_t>(n_) * words_per_row_, 0);
    for (const Edge& e : edges_) {
      matrix_[static_cast<std::size_t>(e.u) * words_per_row_ + e.v / 64] |=
          std::uint64_t{1} << (e.v % 64);
      matrix_[static_cast<std::size_t>(e.v) * words_per_row_ + e.u / 64] |=
          std::uint64_t{1} << (e.u % 64);
    }
  }
}

bool Graph::has_edge(int a, int b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_ || a == b) return false;
  if (!matrix_.empty()) {
    return (matrix_[static_cast<std::size_t>(a) * words_per_row_ + b / 64] >>
            (b % 64)) &
           1;
  }
  const auto& nb = adj_[a];
  return std::binary_search(nb.begin(), nb.end(), b);
}

int Graph::edge_index(const Edge& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return -1;
  return static_cast<int>(it - edges_.begin());
}

std::vector<int> bfs_distances(const Graph& g, int src) {
  std::vector<int> dist(g.vertex_count(), -1);
  if (!g.has_vertex(src)) throw input_error("bfs: source vertex out of range");
  std::queue<int> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : g.neighbors_of(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<std::vector<int>> comps;
  std::vector<bool> seen(g.vertex_count(), false);
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    // Vertices are scanned in ascending order, so each component is
    // discovered at its smallest member.
    std::vector<int> comp;
    std::vector<int> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (int w : g.neighbors_of(u)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

std::vector<int> component_ids(const Graph& g) {
  auto comps = connected_components(g);
  std::vector<int> ids(g.vertex_count(), -1);
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (int v : comps[i]) ids[v] = static_cast<int>(i);
  return ids;
}

}  // namespace subrecon
