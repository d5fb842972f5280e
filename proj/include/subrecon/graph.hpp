#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace subrecon {

/// Thrown for malformed user input: bad graphs, bad solutions, infeasible
/// instances, unusable reduction sources.
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a computation would exceed the configured resource budget.
/// Distinct from a NO answer: the question was not decided.
class budget_error : public std::runtime_error {
 public:
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

/// Undirected edge with endpoints stored as (min,max).
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1. Immutable after construction;
/// all accessors are const and safe for concurrent use.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Rejects self-loops, duplicate edges
  /// and endpoints outside [0, n).
  Graph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  /// Edges in canonical sorted order.
  const std::vector<Edge>& edges() const { return edges_; }

  /// Neighbors of u, ascending.
  const std::vector<int>& neighbors_of(int u) const { return adj_[u]; }

  int degree(int u) const { return static_cast<int>(adj_[u].size()); }

  bool has_vertex(int u) const { return u >= 0 && u < n_; }
  bool has_edge(int a, int b) const;
  bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }

  /// Index of e in edges(), or -1 if absent.
  int edge_index(const Edge& e) const;

  const Edge& edge_at(int idx) const { return edges_[idx]; }

  /// Indices into edges() of the edges incident to u, ascending.
  const std::vector<int>& incident_edges(int u) const { return inc_[u]; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<int>> inc_;
  // Packed adjacency matrix, built only for small n.
  std::vector<std::uint64_t> matrix_;
  int words_per_row_ = 0;
};

/// BFS distances from src; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, int src);

/// Vertex partition into connected components. Components are listed in
/// order of their smallest member and each is internally sorted, so ids
/// (positions in the outer vector) are deterministic.
std::vector<std::vector<int>> connected_components(const Graph& g);

/// component_ids[v] = index of v's component in connected_components(g).
std::vector<int> component_ids(const Graph& g);

}  // namespace subrecon
