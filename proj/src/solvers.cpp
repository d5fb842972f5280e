#include "subrecon/solvers.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "subrecon/biclique_aux.hpp"
#include "subrecon/feasibility.hpp"

namespace subrecon {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::logic_error(msg);
}

SolveResult yes_with(const char* name, std::vector<Solution> steps) {
  return {Verdict::yes({std::move(steps)}), name, 0, 0};
}

SolveResult no_with(const char* name) { return {Verdict::no(), name, 0, 0}; }

std::vector<int> vertex_set_of(const std::vector<Edge>& es) {
  std::vector<int> vs;
  vs.reserve(es.size() * 2);
  for (const Edge& e : es) {
    vs.push_back(e.u);
    vs.push_back(e.v);
  }
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

bool contains(const std::vector<int>& sorted, int x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

bool contains(const std::vector<Edge>& sorted, const Edge& e) {
  return std::binary_search(sorted.begin(), sorted.end(), e);
}

template <typename T>
std::vector<T> exchanged(const std::vector<T>& sorted, const T& out,
                         const T& in) {
  std::vector<T> r;
  r.reserve(sorted.size());
  for (const T& x : sorted)
    if (!(x == out)) r.push_back(x);
  r.insert(std::upper_bound(r.begin(), r.end(), in), in);
  return r;
}

// ---- walks in the line graph (edges as nodes, adjacency = shared endpoint)

struct EdgeBfs {
  std::vector<int> dist;
  std::vector<int> parent;
};

EdgeBfs line_graph_bfs(const Graph& g, const std::vector<int>& source_ids) {
  EdgeBfs r{std::vector<int>(g.edge_count(), -1),
            std::vector<int>(g.edge_count(), -1)};
  std::queue<int> q;
  for (int s : source_ids) {
    r.dist[s] = 0;
    q.push(s);
  }
  while (!q.empty()) {
    int e = q.front();
    q.pop();
    const Edge& ed = g.edge_at(e);
    // merge the two incident lists so neighbors come out ascending
    const auto& iu = g.incident_edges(ed.u);
    const auto& iv = g.incident_edges(ed.v);
    std::size_t a = 0, b = 0;
    while (a < iu.size() || b < iv.size()) {
      int f;
      if (b >= iv.size() || (a < iu.size() && iu[a] <= iv[b])) {
        f = iu[a];
        if (b < iv.size() && iv[b] == f) ++b;
        ++a;
      } else {
        f = iv[b];
        ++b;
      }
      if (f != e && r.dist[f] < 0) {
        r.dist[f] = r.dist[e] + 1;
        r.parent[f] = e;
        q.push(f);
      }
    }
  }
  return r;
}

/// Edge-id path from one of source_ids to whichever target id is closest
/// (ties by id), or empty if unreachable.
std::vector<int> line_graph_path(const Graph& g,
                                 const std::vector<int>& source_ids,
                                 const std::vector<int>& target_ids) {
  EdgeBfs r = line_graph_bfs(g, source_ids);
  int best = -1;
  for (int t : target_ids)
    if (r.dist[t] >= 0 && (best < 0 || r.dist[t] < r.dist[best])) best = t;
  if (best < 0) return {};
  std::vector<int> path;
  for (int at = best; at >= 0; at = r.parent[at]) path.push_back(at);
  std::reverse(path.begin(), path.end());
  return path;
}

// ---- tree exchange machinery shared by the edge and spanning tree solvers

std::vector<int> tree_degrees_dense(const std::vector<Edge>& es, int n) {
  std::vector<int> deg(n, 0);
  for (const Edge& e : es) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

/// Smallest leaf edge of tree es whose degree-one endpoint differs from
/// banned_leaf, optionally restricted to edges outside `exclude`.
Edge pick_leaf_edge(const std::vector<Edge>& es, int n, int banned_leaf,
                    const std::vector<Edge>* exclude) {
  std::vector<int> deg = tree_degrees_dense(es, n);
  for (const Edge& e : es) {
    if (exclude && contains(*exclude, e)) continue;
    int leaf = -1;
    if (deg[e.u] == 1)
      leaf = e.u;
    else if (deg[e.v] == 1)
      leaf = e.v;
    if (leaf >= 0 && leaf != banned_leaf) return e;
  }
  throw std::logic_error("tree solver: no removable leaf edge");
}

/// Vertices of the unique path between a and b inside the tree given by es.
std::vector<Edge> tree_path_edges(const std::vector<Edge>& es, int a, int b) {
  std::vector<int> vs = vertex_set_of(es);
  auto li = [&](int v) {
    return static_cast<int>(
        std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
  };
  std::vector<std::vector<int>> adj(vs.size());
  for (const Edge& e : es) {
    adj[li(e.u)].push_back(li(e.v));
    adj[li(e.v)].push_back(li(e.u));
  }
  std::vector<int> parent(vs.size(), -2);
  std::queue<int> q;
  parent[li(a)] = -1;
  q.push(li(a));
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : adj[u])
      if (parent[w] == -2) {
        parent[w] = u;
        q.push(w);
      }
  }
  std::vector<Edge> path;
  for (int at = li(b); parent[at] >= 0; at = parent[at])
    path.push_back(Edge(vs[at], vs[parent[at]]));
  std::sort(path.begin(), path.end());
  return path;
}

/// Component of the common subgraph (shared vertices, shared edges) with the
/// most edges; ties go to the component with the smallest vertex.
void max_common_component(const std::vector<Edge>& cur,
                          const std::vector<Edge>& et_edges,
                          std::vector<int>& v_prime,
                          std::vector<Edge>& e_prime) {
  std::vector<int> vc = vertex_set_of(cur);
  std::vector<int> vt = vertex_set_of(et_edges);
  std::vector<int> common_v;
  std::set_intersection(vc.begin(), vc.end(), vt.begin(), vt.end(),
                        std::back_inserter(common_v));
  std::vector<Edge> common_e;
  std::set_intersection(cur.begin(), cur.end(), et_edges.begin(),
                        et_edges.end(), std::back_inserter(common_e));
  auto li = [&](int v) {
    return static_cast<int>(
        std::lower_bound(common_v.begin(), common_v.end(), v) -
        common_v.begin());
  };
  std::vector<std::vector<int>> adj(common_v.size());
  for (const Edge& e : common_e) {
    adj[li(e.u)].push_back(li(e.v));
    adj[li(e.v)].push_back(li(e.u));
  }
  std::vector<int> comp(common_v.size(), -1);
  int ncomp = 0;
  for (std::size_t s = 0; s < common_v.size(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{static_cast<int>(s)};
    comp[s] = ncomp;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : adj[u])
        if (comp[w] < 0) {
          comp[w] = ncomp;
          stack.push_back(w);
        }
    }
    ++ncomp;
  }
  std::vector<int> edge_cnt(ncomp, 0);
  for (const Edge& e : common_e) ++edge_cnt[comp[li(e.u)]];
  // components are numbered by ascending smallest vertex already
  int best = 0;
  for (int c = 1; c < ncomp; ++c)
    if (edge_cnt[c] > edge_cnt[best]) best = c;
  v_prime.clear();
  e_prime.clear();
  if (ncomp == 0) return;
  for (std::size_t v = 0; v < common_v.size(); ++v)
    if (comp[v] == best) v_prime.push_back(common_v[v]);
  for (const Edge& e : common_e)
    if (comp[li(e.u)] == best) e_prime.push_back(e);
}

/// Shortest path in g from any vertex of src_set to the nearest vertex of
/// dst_set (ties by vertex id). Assumes one exists.
std::vector<int> set_to_set_path(const Graph& g, const std::vector<int>& src,
                                 const std::vector<int>& dst) {
  std::vector<int> dist(g.vertex_count(), -1), parent(g.vertex_count(), -1);
  std::queue<int> q;
  for (int s : src) {
    dist[s] = 0;
    q.push(s);
  }
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : g.neighbors_of(u))
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        parent[w] = u;
        q.push(w);
      }
  }
  int best = -1;
  for (int t : dst)
    if (dist[t] >= 0 && (best < 0 || dist[t] < dist[best])) best = t;
  require(best >= 0, "tree solver: endpoint sets not connected");
  std::vector<int> path;
  for (int at = best; at >= 0; at = parent[at]) path.push_back(at);
  std::reverse(path.begin(), path.end());
  return path;
}

/// Single-exchange walk between two trees on at least two edges whose edges
/// all live in one component of g. Migrates the current tree next to the
/// target when they share no vertex, then repeatedly swaps one edge to grow
/// the largest common subtree.
std::vector<std::vector<Edge>> edge_tree_sequence(const Graph& g,
                                                  std::vector<Edge> cur,
                                                  const std::vector<Edge>& et) {
  std::vector<std::vector<Edge>> steps{cur};
  int n = g.vertex_count();
  std::vector<int> vt = vertex_set_of(et);
  {
    std::vector<int> vc = vertex_set_of(cur);
    std::vector<int> inter;
    std::set_intersection(vc.begin(), vc.end(), vt.begin(), vt.end(),
                          std::back_inserter(inter));
    if (inter.empty()) {
      std::vector<int> path = set_to_set_path(g, vc, vt);
      for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        Edge rm = pick_leaf_edge(cur, n, path[i], nullptr);
        cur = exchanged(cur, rm, Edge(path[i], path[i + 1]));
        steps.push_back(cur);
      }
    }
  }
  std::size_t guard = 4 * (et.size() + g.vertex_count()) + 8;
  while (cur != et) {
    require(guard-- > 0, "tree solver: failed to make progress");
    std::vector<int> v_prime;
    std::vector<Edge> e_prime;
    max_common_component(cur, et, v_prime, e_prime);
    // smallest target edge leaving the common subtree
    Edge chosen{};
    bool found = false;
    for (const Edge& e : et) {
      if (contains(e_prime, e)) continue;
      bool u_in = contains(v_prime, e.u), v_in = contains(v_prime, e.v);
      if (u_in != v_in) {
        chosen = e;
        found = true;
        break;
      }
    }
    require(found, "tree solver: no edge extends the common subtree");
    std::vector<int> vc = vertex_set_of(cur);
    Edge rm{};
    if (contains(vc, chosen.u) && contains(vc, chosen.v)) {
      // adding chosen closes a cycle; drop its smallest non-target edge
      std::vector<Edge> cycle = tree_path_edges(cur, chosen.u, chosen.v);
      bool got = false;
      for (const Edge& e : cycle)
        if (!contains(et, e)) {
          rm = e;
          got = true;
          break;
        }
      require(got, "tree solver: cycle lies inside the target tree");
    } else {
      int anchor = contains(v_prime, chosen.u) ? chosen.u : chosen.v;
      rm = pick_leaf_edge(cur, n, anchor, &e_prime);
    }
    cur = exchanged(cur, rm, chosen);
    steps.push_back(cur);
  }
  return steps;
}

std::vector<Solution> edge_solutions(const std::vector<std::vector<Edge>>& seq) {
  std::vector<Solution> out;
  out.reserve(seq.size());
  for (const auto& es : seq) out.push_back(Solution::edge_set(es));
  return out;
}

/// Walk by single swaps between two same-size sorted vertex sets, appending
/// every intermediate set (cur excluded, target included) to steps.
void append_swap_walk(std::vector<std::vector<int>>& steps,
                      std::vector<int>& cur, const std::vector<int>& target) {
  std::vector<int> out, in;
  std::set_difference(cur.begin(), cur.end(), target.begin(), target.end(),
                      std::back_inserter(out));
  std::set_difference(target.begin(), target.end(), cur.begin(), cur.end(),
                      std::back_inserter(in));
  for (std::size_t idx = 0; idx < out.size(); ++idx) {
    cur = exchanged(cur, out[idx], in[idx]);
    steps.push_back(cur);
  }
}

int star_center(const std::vector<Edge>& es) {
  // es has >= 2 edges sharing one endpoint
  const Edge& a = es[0];
  const Edge& b = es[1];
  int c = (a.u == b.u || a.u == b.v) ? a.u : a.v;
  for (const Edge& e : es)
    require(e.u == c || e.v == c, "star solver: edges do not share a center");
  return c;
}

}  // namespace

SolveResult solve_edge_cycle(const Instance& inst) {
  if (inst.variant != Variant::Edge ||
      inst.property.kind != PropertyKind::Cycle)
    throw std::logic_error("solve_edge_cycle: wrong variant or property");
  validate_instance(inst);
  if (inst.source == inst.target)
    return yes_with("edge-cycle", {inst.source});
  return no_with("edge-cycle");
}

SolveResult solve_edge_clique(const Instance& inst) {
  if (inst.variant != Variant::Edge ||
      inst.property.kind != PropertyKind::Clique)
    throw std::logic_error("solve_edge_clique: wrong variant or property");
  validate_instance(inst);
  if (inst.source == inst.target)
    return yes_with("edge-clique", {inst.source});
  if (inst.source.size() != inst.target.size()) return no_with("edge-clique");
  if (inst.source.size() == 1) {
    // a single edge is a complete graph on two vertices, so every landing
    // spot is feasible: jumps always succeed, slides walk the line graph
    if (inst.rule == Rule::TJ)
      return yes_with("edge-clique", {inst.source, inst.target});
    std::vector<int> path = line_graph_path(
        inst.graph, {inst.graph.edge_index(inst.source.edges()[0])},
        {inst.graph.edge_index(inst.target.edges()[0])});
    if (path.empty()) return no_with("edge-clique");
    std::vector<Solution> steps;
    for (int id : path)
      steps.push_back(Solution::edge_set({inst.graph.edge_at(id)}));
    return yes_with("edge-clique", std::move(steps));
  }
  // with three or more edges, dropping any edge of the clique leaves a hole
  // only that same edge can refill
  return no_with("edge-clique");
}

SolveResult solve_edge_biclique(const Instance& inst,
                                const OracleBudget& budget) {
  if (inst.variant != Variant::Edge ||
      inst.property.kind != PropertyKind::Biclique)
    throw std::logic_error("solve_edge_biclique: wrong variant or property");
  validate_instance(inst);
  const char* name = "edge-biclique";
  if (inst.source.size() != inst.target.size()) return no_with(name);
  if (inst.source == inst.target) return yes_with(name, {inst.source});
  int a = std::min(inst.property.i, inst.property.j);
  int b = std::max(inst.property.i, inst.property.j);
  if (a >= 2) return no_with(name);  // every move breaks the biclique
  const std::vector<Edge>& es = inst.source.edges();
  const std::vector<Edge>& et = inst.target.edges();
  if (b >= 3) {
    // stars reconfigure one leaf edge at a time around a shared center
    if (star_center(es) != star_center(et)) return no_with(name);
    std::vector<Edge> cur = es;
    std::vector<Solution> steps{inst.source};
    std::vector<Edge> out, in;
    std::set_difference(cur.begin(), cur.end(), et.begin(), et.end(),
                        std::back_inserter(out));
    std::set_difference(et.begin(), et.end(), cur.begin(), cur.end(),
                        std::back_inserter(in));
    for (std::size_t idx = 0; idx < out.size(); ++idx) {
      cur = exchanged(cur, out[idx], in[idx]);
      steps.push_back(Solution::edge_set(cur));
    }
    return yes_with(name, std::move(steps));
  }
  if (b == 1) {
    // single edges: any jump works; slides walk the line graph
    if (inst.rule == Rule::TJ)
      return yes_with(name, {inst.source, inst.target});
    std::vector<int> path =
        line_graph_path(inst.graph, {inst.graph.edge_index(es[0])},
                        {inst.graph.edge_index(et[0])});
    if (path.empty()) return no_with(name);
    std::vector<Solution> steps;
    for (int id : path)
      steps.push_back(Solution::edge_set({inst.graph.edge_at(id)}));
    return yes_with(name, std::move(steps));
  }
  // two edges sharing an endpoint
  if (inst.rule == Rule::TS) return solve_bfs(inst, budget);
  std::vector<Edge> shared;
  std::set_intersection(es.begin(), es.end(), et.begin(), et.end(),
                        std::back_inserter(shared));
  if (shared.size() == 1)
    return yes_with(name, {inst.source, inst.target});
  // disjoint pairs: thread one token through the line graph, trailing the
  // other one edge behind it
  std::vector<int> src_ids{inst.graph.edge_index(es[0]),
                           inst.graph.edge_index(es[1])};
  std::vector<int> dst_ids{inst.graph.edge_index(et[0]),
                           inst.graph.edge_index(et[1])};
  std::vector<int> path = line_graph_path(inst.graph, src_ids, dst_ids);
  if (path.empty()) return no_with(name);
  std::vector<int> walk;
  walk.push_back(path[0] == src_ids[0] ? src_ids[1] : src_ids[0]);
  walk.insert(walk.end(), path.begin(), path.end());
  walk.push_back(path.back() == dst_ids[0] ? dst_ids[1] : dst_ids[0]);
  std::vector<Solution> steps;
  for (std::size_t i = 0; i + 1 < walk.size(); ++i)
    steps.push_back(Solution::edge_set(
        {inst.graph.edge_at(walk[i]), inst.graph.edge_at(walk[i + 1])}));
  return yes_with(name, std::move(steps));
}

SolveResult solve_edge_tree_tj(const Instance& inst) {
  if (inst.variant != Variant::Edge ||
      inst.property.kind != PropertyKind::Tree || inst.rule != Rule::TJ)
    throw std::logic_error("solve_edge_tree_tj: wrong variant, property or rule");
  validate_instance(inst);
  const char* name = "edge-tree-tj";
  if (inst.source.size() != inst.target.size()) return no_with(name);
  const std::vector<Edge>& es = inst.source.edges();
  const std::vector<Edge>& et = inst.target.edges();
  if (es.size() <= 1) {
    if (inst.source == inst.target) return yes_with(name, {inst.source});
    return yes_with(name, {inst.source, inst.target});
  }
  std::vector<int> comp = component_ids(inst.graph);
  int c0 = comp[es[0].u];
  for (const Edge& e : es)
    if (comp[e.u] != c0) return no_with(name);
  for (const Edge& e : et)
    if (comp[e.u] != c0) return no_with(name);
  if (inst.source == inst.target) return yes_with(name, {inst.source});
  std::vector<std::vector<Edge>> seq = edge_tree_sequence(inst.graph, es, et);
  require(seq.size() - 1 <=
              es.size() + static_cast<std::size_t>(inst.graph.vertex_count()),
          "tree solver: witness exceeds the move bound");
  return yes_with(name, edge_solutions(seq));
}

SolveResult solve_spanning_tree_tj(const Instance& inst) {
  if (inst.variant != Variant::Spanning ||
      inst.property.kind != PropertyKind::Tree || inst.rule != Rule::TJ)
    throw std::logic_error(
        "solve_spanning_tree_tj: wrong variant, property or rule");
  validate_instance(inst);
  const char* name = "spanning-tree-tj";
  if (inst.source.size() != inst.target.size()) return no_with(name);
  const std::vector<int>& vs = inst.source.vertices();
  const std::vector<int>& vt = inst.target.vertices();
  std::size_t k = vs.size();
  if (k == 0) return yes_with(name, {inst.source});
  if (k == 1) {
    if (inst.source == inst.target) return yes_with(name, {inst.source});
    return yes_with(name, {inst.source, inst.target});
  }
  std::vector<int> comp = component_ids(inst.graph);
  if (comp[vs[0]] != comp[vt[0]]) return no_with(name);
  if (inst.source == inst.target) return yes_with(name, {inst.source});
  if (k == 2) {
    std::vector<int> shared;
    std::set_intersection(vs.begin(), vs.end(), vt.begin(), vt.end(),
                          std::back_inserter(shared));
    if (shared.size() == 1)
      return yes_with(name, {inst.source, inst.target});
    // walk the pair along a connecting path, one endpoint at a time
    std::vector<int> path = set_to_set_path(inst.graph, vs, vt);
    std::vector<int> walk;
    walk.push_back(path.front() == vs[0] ? vs[1] : vs[0]);
    walk.insert(walk.end(), path.begin(), path.end());
    walk.push_back(path.back() == vt[0] ? vt[1] : vt[0]);
    std::vector<Solution> steps;
    for (std::size_t i = 0; i + 1 < walk.size(); ++i)
      steps.push_back(Solution::vertex_set({walk[i], walk[i + 1]}));
    return yes_with(name, std::move(steps));
  }
  // reconfigure spanning trees of the endpoints and read off vertex sets
  auto dfs_tree = [&](const std::vector<int>& verts) {
    std::vector<Edge> out;
    std::vector<bool> visited(inst.graph.vertex_count(), false);
    // explicit stack of (vertex, next neighbor position) so smaller
    // neighbors are taken first
    std::vector<std::pair<int, std::size_t>> stack{{verts[0], 0}};
    visited[verts[0]] = true;
    while (!stack.empty()) {
      auto& [u, pos] = stack.back();
      const auto& nb = inst.graph.neighbors_of(u);
      bool advanced = false;
      while (pos < nb.size()) {
        int w = nb[pos++];
        if (visited[w] || !contains(verts, w)) continue;
        visited[w] = true;
        out.push_back(Edge(u, w));
        stack.push_back({w, 0});
        advanced = true;
        break;
      }
      if (!advanced) stack.pop_back();
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  std::vector<Edge> ts = dfs_tree(vs), tt = dfs_tree(vt);
  require(ts.size() == k - 1 && tt.size() == k - 1,
          "tree solver: endpoint set does not induce a connected subgraph");
  std::vector<std::vector<Edge>> eseq = edge_tree_sequence(inst.graph, ts, tt);
  std::vector<Solution> steps;
  for (const auto& edges : eseq) {
    Solution sol = Solution::vertex_set(vertex_set_of(edges));
    if (!steps.empty() && steps.back() == sol) continue;
    if (!steps.empty()) {
      std::vector<int> out, in;
      const auto& prev = steps.back().vertices();
      const auto& next = sol.vertices();
      std::set_difference(prev.begin(), prev.end(), next.begin(), next.end(),
                          std::back_inserter(out));
      std::set_difference(next.begin(), next.end(), prev.begin(), prev.end(),
                          std::back_inserter(in));
      require(out.size() == 1 && in.size() == 1,
              "tree solver: projected step is not a single swap");
    }
    steps.push_back(std::move(sol));
  }
  return yes_with(name, std::move(steps));
}

SolveResult solve_spanning_biclique_fixed_i(const Instance& inst,
                                            const OracleBudget& budget) {
  if (inst.variant != Variant::Spanning ||
      inst.property.kind != PropertyKind::Biclique || inst.rule != Rule::TJ)
    throw std::logic_error(
        "solve_spanning_biclique_fixed_i: wrong variant, property or rule");
  validate_instance(inst);
  int a = std::min(inst.property.i, inst.property.j);
  int b = std::max(inst.property.i, inst.property.j);
  // With equal parts either side can act as the hub, and both sizes are
  // pinned anyway, so the bounded exhaustive search settles it.
  if (a == b) return solve_bfs(inst, budget);
  const char* name = "spanning-biclique-fixed-i";
  if (inst.source.size() != inst.target.size()) return no_with(name);
  const Graph& g = inst.graph;
  AuxGraph aux = build_aux_graph(g, a, b);
  auto hub_of = [&](const std::vector<int>& verts) {
    auto cands = hub_candidates(g, verts, a);
    if (cands.empty())
      throw input_error("spanning biclique: no hub set for a solution");
    return cands.front();
  };
  int hs = aux.index_of(hub_of(inst.source.vertices()));
  int ht = aux.index_of(hub_of(inst.target.vertices()));
  require(hs >= 0 && ht >= 0, "spanning biclique: hub missing from hub graph");
  std::vector<int> parent(aux.nodes.size(), -2);
  std::queue<int> q;
  parent[hs] = -1;
  q.push(hs);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    if (u == ht) break;
    for (int w : aux.adj[u])
      if (parent[w] == -2) {
        parent[w] = u;
        q.push(w);
      }
  }
  if (parent[ht] == -2) return no_with(name);
  std::vector<int> hubpath;
  for (int at = ht; at >= 0; at = parent[at]) hubpath.push_back(at);
  std::reverse(hubpath.begin(), hubpath.end());

  // One bridging pair per hub edge: a solution of each family with overlap
  // at least a+b-1, assembled from the shared hub vertices, the shared
  // common-neighbor pool, and per-side filler.
  auto bridge = [&](const HubNode& hp, const HubNode& hq) {
    auto uni = [](const std::vector<int>& x, const std::vector<int>& y) {
      std::vector<int> r;
      std::set_union(x.begin(), x.end(), y.begin(), y.end(),
                     std::back_inserter(r));
      return r;
    };
    auto inter = [](const std::vector<int>& x, const std::vector<int>& y) {
      std::vector<int> r;
      std::set_intersection(x.begin(), x.end(), y.begin(), y.end(),
                            std::back_inserter(r));
      return r;
    };
    std::vector<int> up = uni(hp.hub, hp.common);
    std::vector<int> uq = uni(hq.hub, hq.common);
    std::vector<int> vp = uni(hp.hub, inter(hq.hub, up));
    std::vector<int> vq = uni(hq.hub, inter(hp.hub, uq));
    std::vector<int> pool = inter(hp.common, hq.common);
    {
      std::vector<int> hubs = uni(hp.hub, hq.hub);
      std::vector<int> tmp;
      std::set_difference(pool.begin(), pool.end(), hubs.begin(), hubs.end(),
                          std::back_inserter(tmp));
      pool = std::move(tmp);
    }
    std::size_t want = static_cast<std::size_t>(a + b);
    std::size_t fill = std::min({want - vp.size(), want - vq.size(),
                                 pool.size()});
    std::vector<int> shared(pool.begin(), pool.begin() + fill);
    vp = uni(vp, shared);
    vq = uni(vq, shared);
    auto top_off = [&](std::vector<int>& v, const std::vector<int>& from) {
      for (int x : from) {
        if (v.size() >= want) break;
        if (!contains(v, x))
          v.insert(std::upper_bound(v.begin(), v.end(), x), x);
      }
    };
    top_off(vp, hp.common);
    top_off(vq, hq.common);
    require(vp.size() == want && vq.size() == want,
            "spanning biclique: bridge fill failed");
    require(inter(vp, vq).size() >= want - 1,
            "spanning biclique: bridge pair too far apart");
    return std::pair<std::vector<int>, std::vector<int>>{vp, vq};
  };

  std::vector<std::vector<int>> walk{inst.source.vertices()};
  std::vector<int> cur = inst.source.vertices();
  for (std::size_t h = 0; h + 1 < hubpath.size(); ++h) {
    auto [vp, vq] = bridge(aux.nodes[hubpath[h]], aux.nodes[hubpath[h + 1]]);
    append_swap_walk(walk, cur, vp);
    append_swap_walk(walk, cur, vq);
    cur = vq;
  }
  append_swap_walk(walk, cur, inst.target.vertices());
  std::vector<Solution> steps;
  for (auto& w : walk) {
    Solution sol = Solution::vertex_set(std::move(w));
    if (steps.empty() || !(steps.back() == sol)) steps.push_back(std::move(sol));
  }
  return yes_with(name, std::move(steps));
}

SolveResult dispatch(const Instance& inst, const DispatchOptions& opts) {
  validate_instance(inst);
  if (inst.source.size() != inst.target.size())
    return {Verdict::no(), "size-mismatch", 0, 0};
  const PropertySpec& p = inst.property;
  if (inst.variant == Variant::Edge) {
    switch (p.kind) {
      case PropertyKind::Cycle:
        return solve_edge_cycle(inst);
      case PropertyKind::Clique:
        return solve_edge_clique(inst);
      case PropertyKind::Biclique:
        return solve_edge_biclique(inst, opts.budget);
      case PropertyKind::Tree:
        if (inst.rule == Rule::TJ) return solve_edge_tree_tj(inst);
        break;
      default:
        break;
    }
  } else if (inst.variant == Variant::Spanning && inst.rule == Rule::TJ) {
    if (p.kind == PropertyKind::Tree) return solve_spanning_tree_tj(inst);
    if (p.kind == PropertyKind::Biclique &&
        std::min(p.i, p.j) <= opts.fixed_i_threshold)
      return solve_spanning_biclique_fixed_i(inst, opts.budget);
  }
  return solve_bfs(inst, opts.budget);
}

}  // namespace subrecon
