#include "subrecon/reductions.hpp"

#include <algorithm>
#include <string>

#include "subrecon/feasibility.hpp"
#include "subrecon/source_problems.hpp"

namespace subrecon {

namespace {

std::vector<int> identity_map(int n) {
  std::vector<int> m(n);
  for (int i = 0; i < n; ++i) m[i] = i;
  return m;
}

enum class LayerFill { None, All, Partial };

LayerFill intra_layer_fill(const Graph& g, const Layers& layers) {
  std::size_t present = 0, possible = 0;
  for (const auto& layer : layers.sets) {
    for (std::size_t a = 0; a < layer.size(); ++a)
      for (std::size_t b = a + 1; b < layer.size(); ++b) {
        ++possible;
        if (g.has_edge(layer[a], layer[b])) ++present;
      }
  }
  if (present == 0) return LayerFill::None;
  if (present == possible) return LayerFill::All;
  return LayerFill::Partial;
}

/// Common validation for the shortest-path reconfiguration gadgets: layers
/// must cover the whole graph, both endpoint sets must be shortest st-paths,
/// and intra-layer edges must be absent (TJ form) or complete (TS form).
/// Returns the rule implied by the intra-layer edges.
Rule validate_spr_source(const Graph& g, int s, int t,
                         const std::vector<int>& v_s,
                         const std::vector<int>& v_t, const Layers& layers) {
  std::size_t layered = 0;
  for (const auto& layer : layers.sets) layered += layer.size();
  if (layered != static_cast<std::size_t>(g.vertex_count()))
    throw input_error(
        "shortest-path source: a vertex lies on no shortest s-t path");
  PropertySpec spec = PropertySpec::shortest_st_path(s, t);
  if (!check_property(g, Solution::vertex_set(v_s), Variant::Induced, spec))
    throw input_error("shortest-path source: source set is not a shortest path");
  if (!check_property(g, Solution::vertex_set(v_t), Variant::Induced, spec))
    throw input_error("shortest-path source: target set is not a shortest path");
  switch (intra_layer_fill(g, layers)) {
    case LayerFill::None:
      return Rule::TJ;
    case LayerFill::All:
      return Rule::TS;
    default:
      throw input_error(
          "shortest-path source: layers are partially filled; expected no "
          "intra-layer edges or complete layers");
  }
}

std::vector<int> with_extra(const std::vector<int>& vs,
                            std::initializer_list<int> extra) {
  std::vector<int> r = vs;
  r.insert(r.end(), extra);
  std::sort(r.begin(), r.end());
  return r;
}

}  // namespace

Layers shortest_path_layers(const Graph& g, int s, int t) {
  if (!g.has_vertex(s) || !g.has_vertex(t))
    throw input_error("layers: endpoint out of range");
  if (s == t) throw input_error("layers: endpoints coincide");
  std::vector<int> ds = bfs_distances(g, s);
  std::vector<int> dt = bfs_distances(g, t);
  if (ds[t] < 0) throw input_error("layers: t is unreachable from s");
  int d = ds[t];
  Layers layers;
  layers.sets.assign(d + 1, {});
  for (int v = 0; v < g.vertex_count(); ++v)
    if (ds[v] >= 0 && dt[v] >= 0 && ds[v] + dt[v] == d)
      layers.sets[ds[v]].push_back(v);
  return layers;
}

Graph make_layers_cliques(const Graph& g, const Layers& layers) {
  std::vector<Edge> edges = g.edges();
  for (const auto& layer : layers.sets)
    for (std::size_t a = 0; a < layer.size(); ++a)
      for (std::size_t b = a + 1; b < layer.size(); ++b)
        if (!g.has_edge(layer[a], layer[b]))
          edges.push_back(Edge(layer[a], layer[b]));
  return Graph(g.vertex_count(), edges);
}

GadgetOutput reduce_hampath_to_edge_path(const Graph& g, int s, int t) {
  if (!g.has_vertex(s) || !g.has_vertex(t))
    throw input_error("hamiltonian-path gadget: endpoint out of range");
  if (s == t) throw input_error("hamiltonian-path gadget: endpoints coincide");
  int n = g.vertex_count();
  int v = n, x = n + 1, w = n + 2;
  int s_base = n + 3;      // s_1 .. s_{n+1}
  int t_base = 2 * n + 4;  // t_1 .. t_{n+1}
  std::vector<Edge> edges = g.edges();
  edges.push_back(Edge(x, v));
  edges.push_back(Edge(v, s));
  edges.push_back(Edge(t, w));
  std::vector<Edge> es = {Edge(x, v), Edge(v, s)};
  std::vector<Edge> et = es;
  for (int p = 0; p < n; ++p) {
    edges.push_back(Edge(s_base + p, s_base + p + 1));
    edges.push_back(Edge(t_base + p, t_base + p + 1));
    es.push_back(Edge(s_base + p, s_base + p + 1));
    et.push_back(Edge(t_base + p, t_base + p + 1));
  }
  edges.push_back(Edge(s_base + n, x));
  edges.push_back(Edge(t_base + n, x));
  es.push_back(Edge(s_base + n, x));
  et.push_back(Edge(t_base + n, x));
  GadgetOutput out;
  out.instance = Instance{Graph(3 * n + 5, edges), Variant::Edge, Rule::TJ,
                          PropertySpec::path(), Solution::edge_set(es),
                          Solution::edge_set(et)};
  out.vertex_map = identity_map(n);
  out.annotation = {{"v", v}, {"x", x}, {"w", w}};
  for (int p = 1; p <= n + 1; ++p) {
    out.annotation["s_" + std::to_string(p)] = s_base + p - 1;
    out.annotation["t_" + std::to_string(p)] = t_base + p - 1;
  }
  return out;
}

GadgetOutput reduce_spr_to_path(const Graph& g, int s, int t,
                                const std::vector<int>& v_s,
                                const std::vector<int>& v_t, Variant variant) {
  Layers layers = shortest_path_layers(g, s, t);
  Rule rule = validate_spr_source(g, s, t, v_s, v_t, layers);
  int n = g.vertex_count();
  int s1 = n, s2 = n + 1, t1 = n + 2, t2 = n + 3;
  std::vector<Edge> edges = g.edges();
  edges.push_back(Edge(s2, s1));
  edges.push_back(Edge(s1, s));
  edges.push_back(Edge(t, t1));
  edges.push_back(Edge(t1, t2));
  GadgetOutput out;
  out.instance = Instance{Graph(n + 4, edges), variant, rule,
                          PropertySpec::path(),
                          Solution::vertex_set(with_extra(v_s, {s1, s2, t1, t2})),
                          Solution::vertex_set(with_extra(v_t, {s1, s2, t1, t2}))};
  out.vertex_map = identity_map(n);
  out.annotation = {{"s_1", s1}, {"s_2", s2}, {"t_1", t1}, {"t_2", t2}};
  return out;
}

GadgetOutput reduce_spr_to_cycle(const Graph& g, int s, int t,
                                 const std::vector<int>& v_s,
                                 const std::vector<int>& v_t, Variant variant) {
  Layers layers = shortest_path_layers(g, s, t);
  Rule rule = validate_spr_source(g, s, t, v_s, v_t, layers);
  int n = g.vertex_count();
  int s1 = n, t1 = n + 1;
  std::vector<Edge> edges = g.edges();
  edges.push_back(Edge(s, s1));
  edges.push_back(Edge(s1, t1));
  edges.push_back(Edge(t1, t));
  GadgetOutput out;
  out.instance = Instance{Graph(n + 2, edges), variant, rule,
                          PropertySpec::cycle(),
                          Solution::vertex_set(with_extra(v_s, {s1, t1})),
                          Solution::vertex_set(with_extra(v_t, {s1, t1}))};
  out.vertex_map = identity_map(n);
  out.annotation = {{"s_1", s1}, {"t_1", t1}};
  return out;
}

GadgetOutput reduce_spr_to_spanning_tree_ts(const Graph& g, int s, int t,
                                            const std::vector<int>& v_s,
                                            const std::vector<int>& v_t) {
  Layers layers = shortest_path_layers(g, s, t);
  validate_spr_source(g, s, t, v_s, v_t, layers);
  Graph cliqued = make_layers_cliques(g, layers);
  int n = g.vertex_count();
  int s1 = n, s2 = n + 1, t1 = n + 2, t2 = n + 3;
  std::vector<Edge> edges = cliqued.edges();
  edges.push_back(Edge(s2, s1));
  edges.push_back(Edge(s1, s));
  edges.push_back(Edge(t, t1));
  edges.push_back(Edge(t1, t2));
  GadgetOutput out;
  out.instance = Instance{Graph(n + 4, edges), Variant::Spanning, Rule::TS,
                          PropertySpec::tree(),
                          Solution::vertex_set(with_extra(v_s, {s1, s2, t1, t2})),
                          Solution::vertex_set(with_extra(v_t, {s1, s2, t1, t2}))};
  out.vertex_map = identity_map(n);
  out.annotation = {{"s_1", s1}, {"s_2", s2}, {"t_1", t1}, {"t_2", t2}};
  return out;
}

GadgetOutput reduce_misr_to_induced_biclique(const Graph& g,
                                             const std::vector<int>& v_s,
                                             const std::vector<int>& v_t,
                                             int i) {
  if (i < 1) throw input_error("independent-set gadget: i must be positive");
  if (v_s.size() != v_t.size())
    throw input_error("independent-set gadget: endpoint sizes differ");
  int alpha = independence_number(g);
  auto check_mis = [&](const std::vector<int>& vs, const char* which) {
    for (int v : vs)
      if (!g.has_vertex(v))
        throw input_error("independent-set gadget: vertex out of range");
    if (!is_independent_set(g, vs) ||
        static_cast<int>(vs.size()) != alpha)
      throw input_error(std::string("independent-set gadget: ") + which +
                        " set is not a maximum independent set");
  };
  check_mis(v_s, "source");
  check_mis(v_t, "target");
  int n = g.vertex_count();
  int r = n + i;  // L occupies n .. n+i-1
  std::vector<Edge> edges = g.edges();
  for (int l = n; l < n + i; ++l) {
    for (int u = 0; u < n; ++u) edges.push_back(Edge(u, l));
    edges.push_back(Edge(l, r));
  }
  std::vector<int> extra(i + 1);
  for (int p = 0; p <= i; ++p) extra[p] = n + p;
  auto lift = [&](const std::vector<int>& vs) {
    std::vector<int> out = vs;
    out.insert(out.end(), extra.begin(), extra.end());
    std::sort(out.begin(), out.end());
    return Solution::vertex_set(out);
  };
  GadgetOutput out;
  out.instance = Instance{
      Graph(n + i + 1, edges), Variant::Induced, Rule::TJ,
      PropertySpec::biclique(i, static_cast<int>(v_s.size()) + 1),
      lift(v_s), lift(v_t)};
  out.vertex_map = identity_map(n);
  for (int p = 1; p <= i; ++p)
    out.annotation["l_" + std::to_string(p)] = n + p - 1;
  out.annotation["r_1"] = r;
  return out;
}

GadgetOutput reduce_bcbs_to_spanning_biclique(const Graph& g, int k) {
  if (k < 1) throw input_error("biclique-subgraph gadget: k must be positive");
  int n = g.vertex_count();
  // recover a bipartition by 2-coloring; color 0 holds each component's
  // smallest vertex
  std::vector<int> color(n, -1);
  for (int start = 0; start < n; ++start) {
    if (color[start] >= 0) continue;
    color[start] = 0;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : g.neighbors_of(u)) {
        if (color[w] < 0) {
          color[w] = 1 - color[u];
          stack.push_back(w);
        } else if (color[w] == color[u]) {
          throw input_error("biclique-subgraph gadget: graph is not bipartite");
        }
      }
    }
  }
  int a1 = n, b1 = n + k, a2 = n + 2 * k, b2 = n + 3 * k;
  std::vector<Edge> edges = g.edges();
  for (int p = 0; p < k; ++p)
    for (int q = 0; q < k; ++q) {
      edges.push_back(Edge(a1 + p, b1 + q));
      edges.push_back(Edge(a2 + p, b2 + q));
    }
  for (int v = 0; v < n; ++v) {
    for (int p = 0; p < k; ++p) {
      if (color[v] == 0)
        edges.push_back(Edge(b1 + p, v));  // B1 complete to A
      else
        edges.push_back(Edge(v, a2 + p));  // B complete to A2
    }
  }
  std::vector<int> vs(2 * k), vt(2 * k);
  for (int p = 0; p < 2 * k; ++p) {
    vs[p] = a1 + p;
    vt[p] = a2 + p;
  }
  GadgetOutput out;
  out.instance = Instance{Graph(n + 4 * k, edges), Variant::Spanning, Rule::TJ,
                          PropertySpec::biclique(k, k),
                          Solution::vertex_set(vs), Solution::vertex_set(vt)};
  out.vertex_map = identity_map(n);
  for (int p = 1; p <= k; ++p) {
    out.annotation["a1_" + std::to_string(p)] = a1 + p - 1;
    out.annotation["b1_" + std::to_string(p)] = b1 + p - 1;
    out.annotation["a2_" + std::to_string(p)] = a2 + p - 1;
    out.annotation["b2_" + std::to_string(p)] = b2 + p - 1;
  }
  return out;
}

GadgetOutput reduce_cliquer_to_diam2(const Graph& g,
                                     const std::vector<int>& v_s,
                                     const std::vector<int>& v_t) {
  if (v_s.size() != v_t.size())
    throw input_error("clique gadget: endpoint sizes differ");
  if (v_s.size() < 2)
    throw input_error("clique gadget: endpoint cliques need at least 2 vertices");
  auto check_clique = [&](const std::vector<int>& vs, const char* which) {
    for (int v : vs)
      if (!g.has_vertex(v))
        throw input_error("clique gadget: vertex out of range");
    if (!is_clique(g, vs))
      throw input_error(std::string("clique gadget: ") + which +
                        " set is not a clique");
  };
  check_clique(v_s, "source");
  check_clique(v_t, "target");
  int n = g.vertex_count();
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    edges.push_back(e);                        // left copy
    edges.push_back(Edge(n + e.u, n + e.v));   // right copy
  }
  for (int v = 0; v < n; ++v) edges.push_back(Edge(v, n + v));
  auto lift = [&](const std::vector<int>& vs) {
    int drop = *std::min_element(vs.begin(), vs.end());
    std::vector<int> out;
    for (int v : vs) {
      out.push_back(v);
      if (v != drop) out.push_back(n + v);
    }
    std::sort(out.begin(), out.end());
    return Solution::vertex_set(out);
  };
  GadgetOutput out;
  out.instance = Instance{Graph(2 * n, edges), Variant::Induced, Rule::TS,
                          PropertySpec::diameter_at_most_two(), lift(v_s),
                          lift(v_t)};
  out.vertex_map = identity_map(n);
  for (int v = 0; v < n; ++v)
    out.annotation["r_" + std::to_string(v)] = n + v;
  return out;
}

}  // namespace subrecon
