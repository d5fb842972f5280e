#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "subrecon/feasibility.hpp"
#include "subrecon/oracle.hpp"
#include "subrecon/reductions.hpp"
#include "subrecon/source_problems.hpp"
#include "subrecon/types.hpp"
#include "support.hpp"

using namespace subrecon;

namespace {

VerdictKind reduced_verdict(const GadgetOutput& out) {
  OracleBudget budget;
  return solve_bfs(out.instance, budget).verdict.kind;
}

// Added vertices must be exactly the names in the annotation, and input
// vertices must keep their labels.
void check_bookkeeping(const GadgetOutput& out, int input_n) {
  REQUIRE(static_cast<int>(out.vertex_map.size()) == input_n);
  for (int v = 0; v < input_n; ++v) CHECK(out.vertex_map[v] == v);
  std::set<int> named;
  for (const auto& [name, v] : out.annotation) {
    CHECK(v >= input_n);
    named.insert(v);
  }
  std::set<int> added;
  for (int v = input_n; v < out.instance.graph.vertex_count(); ++v)
    added.insert(v);
  CHECK(named == added);
}

// Independent all-shortest-paths enumeration: depth-first over every path
// of minimum length, collecting which vertices occur at which distance.
std::vector<std::set<int>> enumerate_layer_sets(const Graph& g, int s, int t) {
  auto ds = bfs_distances(g, s);
  int d = ds[t];
  REQUIRE(d >= 0);
  std::vector<std::set<int>> got(d + 1);
  std::vector<int> stack{s};
  auto dfs = [&](auto&& self, int at) -> void {
    int depth = static_cast<int>(stack.size()) - 1;
    if (at == t && depth == d) {
      for (int i = 0; i <= d; ++i) got[i].insert(stack[i]);
      return;
    }
    if (depth >= d) return;
    for (int w : g.neighbors_of(at)) {
      stack.push_back(w);
      self(self, w);
      stack.pop_back();
    }
  };
  dfs(dfs, s);
  return got;
}

}  // namespace

TEST_CASE("layer decomposition by distance") {
  SUBCASE("path graph gives singleton layers") {
    Layers l = shortest_path_layers(ts::path_graph(4), 0, 3);
    REQUIRE(l.distance() == 3);
    for (int i = 0; i <= 3; ++i) CHECK(l.sets[i] == std::vector<int>{i});
  }
  SUBCASE("4-cycle has one two-vertex middle layer") {
    Layers l = shortest_path_layers(ts::cycle_graph(4), 0, 2);
    REQUIRE(l.distance() == 2);
    CHECK(l.sets[0] == std::vector<int>{0});
    CHECK(l.sets[1] == std::vector<int>{1, 3});
    CHECK(l.sets[2] == std::vector<int>{2});
  }
  SUBCASE("single edge") {
    Layers l = shortest_path_layers(ts::path_graph(2), 0, 1);
    REQUIRE(l.distance() == 1);
    CHECK(l.sets[0] == std::vector<int>{0});
    CHECK(l.sets[1] == std::vector<int>{1});
  }
  SUBCASE("bad endpoints are rejected") {
    CHECK_THROWS_AS(shortest_path_layers(ts::path_graph(3), 1, 1),
                    input_error);
    CHECK_THROWS_AS(
        shortest_path_layers(ts::make_graph(4, {{0, 1}, {2, 3}}), 0, 3),
        input_error);
    CHECK_THROWS_AS(shortest_path_layers(ts::path_graph(3), 0, 5),
                    input_error);
  }
}

TEST_CASE("layer decomposition matches exhaustive path enumeration") {
  std::mt19937 rng(20240817);
  std::vector<Graph> pool;
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : ts::nonisomorphic_graphs(n)) pool.push_back(g);
  for (int i = 0; i < 60; ++i) pool.push_back(ts::random_graph(rng, 7));
  for (const Graph& g : pool) {
    auto ds0 = bfs_distances(g, 0);
    for (int s = 0; s < g.vertex_count(); ++s) {
      auto ds = bfs_distances(g, s);
      for (int t = 0; t < g.vertex_count(); ++t) {
        if (s == t || ds[t] < 0) continue;
        Layers l = shortest_path_layers(g, s, t);
        auto want = enumerate_layer_sets(g, s, t);
        REQUIRE(l.distance() == static_cast<int>(want.size()) - 1);
        std::set<int> seen;
        for (int i = 0; i <= l.distance(); ++i) {
          std::set<int> have(l.sets[i].begin(), l.sets[i].end());
          CHECK(have == want[i]);
          for (int v : l.sets[i]) {
            CHECK_FALSE(seen.count(v));  // layers are pairwise disjoint
            seen.insert(v);
          }
        }
      }
    }
    (void)ds0;
  }
}

TEST_CASE("layer cliques fill exactly the intra-layer pairs") {
  Graph c4 = ts::cycle_graph(4);
  Layers l = shortest_path_layers(c4, 0, 2);
  Graph filled = make_layers_cliques(c4, l);
  CHECK(filled.edge_count() == c4.edge_count() + 1);
  CHECK(filled.has_edge(1, 3));

  Graph p4 = ts::path_graph(4);
  Layers lp = shortest_path_layers(p4, 0, 3);
  CHECK(make_layers_cliques(p4, lp) == p4);
}

TEST_CASE("hamiltonian-path gadget: structure and verdicts") {
  SUBCASE("3-path input counts") {
    GadgetOutput out = reduce_hampath_to_edge_path(ts::path_graph(3), 0, 2);
    const Instance& inst = out.instance;
    CHECK(inst.graph.vertex_count() == 14);   // 3n + 5
    CHECK(inst.graph.edge_count() == 13);     // |E| + 2n + 5
    CHECK(inst.source.size() == 6);           // n + 3
    CHECK(inst.variant == Variant::Edge);
    CHECK(inst.rule == Rule::TJ);
    CHECK(inst.property.kind == PropertyKind::Path);
    check_bookkeeping(out, 3);
    CHECK(reduced_verdict(out) == VerdictKind::Yes);
  }
  SUBCASE("no hamiltonian path between two star leaves") {
    GadgetOutput out = reduce_hampath_to_edge_path(ts::star_graph(3), 1, 2);
    CHECK(reduced_verdict(out) == VerdictKind::No);
  }
  SUBCASE("identical endpoints are rejected") {
    CHECK_THROWS_AS(reduce_hampath_to_edge_path(ts::path_graph(3), 1, 1),
                    input_error);
  }
  SUBCASE("closed-form sizes on assorted inputs") {
    std::mt19937 rng(7);
    for (int i = 0; i < 12; ++i) {
      int n = 2 + static_cast<int>(rng() % 4);
      Graph g = ts::random_graph(rng, n);
      int s = static_cast<int>(rng() % n);
      int t = (s + 1 + static_cast<int>(rng() % (n - 1))) % n;
      GadgetOutput out = reduce_hampath_to_edge_path(g, s, t);
      CHECK(out.instance.graph.vertex_count() == 3 * n + 5);
      CHECK(out.instance.graph.edge_count() == g.edge_count() + 2 * n + 5);
      CHECK(out.instance.source.size() == static_cast<std::size_t>(n + 3));
      check_bookkeeping(out, n);
      CHECK_NOTHROW(validate_instance(out.instance));
    }
  }
}

TEST_CASE("shortest-path gadgets: path form") {
  Graph c4 = ts::cycle_graph(4);
  SUBCASE("swapping the middle vertex of a 4-cycle") {
    GadgetOutput out =
        reduce_spr_to_path(c4, 0, 2, {0, 1, 2}, {0, 2, 3}, Variant::Induced);
    const Instance& inst = out.instance;
    CHECK(inst.graph.vertex_count() == 8);
    CHECK(inst.source.size() == 7);
    CHECK(inst.variant == Variant::Induced);
    CHECK(inst.rule == Rule::TJ);
    check_bookkeeping(out, 4);
    CHECK(reduced_verdict(out) == VerdictKind::Yes);
  }
  SUBCASE("identical endpoints") {
    GadgetOutput out =
        reduce_spr_to_path(c4, 0, 2, {0, 1, 2}, {0, 1, 2}, Variant::Spanning);
    CHECK(out.instance.variant == Variant::Spanning);
    CHECK(reduced_verdict(out) == VerdictKind::Yes);
  }
  SUBCASE("internally disjoint long routes cannot trade one vertex") {
    Graph c6 = ts::cycle_graph(6);
    GadgetOutput out = reduce_spr_to_path(c6, 0, 3, {0, 1, 2, 3}, {0, 5, 4, 3},
                                          Variant::Induced);
    CHECK(reduced_verdict(out) == VerdictKind::No);
  }
  SUBCASE("sources that are not shortest paths are rejected") {
    CHECK_THROWS_AS(
        reduce_spr_to_path(c4, 0, 2, {0, 1, 3}, {0, 1, 2}, Variant::Induced),
        input_error);
    // a vertex on no shortest route invalidates the whole graph
    Graph tail = ts::make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}});
    CHECK_THROWS_AS(reduce_spr_to_path(tail, 0, 3, {0, 1, 2, 3}, {0, 1, 2, 3},
                                       Variant::Induced),
                    input_error);
  }
}

TEST_CASE("shortest-path gadgets: cycle form") {
  Graph c4 = ts::cycle_graph(4);
  GadgetOutput out =
      reduce_spr_to_cycle(c4, 0, 2, {0, 1, 2}, {0, 2, 3}, Variant::Induced);
  CHECK(out.instance.graph.vertex_count() == 6);
  CHECK(out.instance.source.size() == 5);
  CHECK(out.instance.property.kind == PropertyKind::Cycle);
  check_bookkeeping(out, 4);
  CHECK(reduced_verdict(out) == VerdictKind::Yes);

  GadgetOutput same =
      reduce_spr_to_cycle(c4, 0, 2, {0, 1, 2}, {0, 1, 2}, Variant::Induced);
  CHECK(reduced_verdict(same) == VerdictKind::Yes);

  Graph c6 = ts::cycle_graph(6);
  GadgetOutput far = reduce_spr_to_cycle(c6, 0, 3, {0, 1, 2, 3}, {0, 5, 4, 3},
                                         Variant::Induced);
  CHECK(reduced_verdict(far) == VerdictKind::No);
}

TEST_CASE("sliding forms are built on the clique-layered graph") {
  Graph c4 = ts::cycle_graph(4);
  Layers l = shortest_path_layers(c4, 0, 2);
  Graph filled = make_layers_cliques(c4, l);

  GadgetOutput tj =
      reduce_spr_to_path(c4, 0, 2, {0, 1, 2}, {0, 2, 3}, Variant::Induced);
  CHECK(tj.instance.rule == Rule::TJ);

  GadgetOutput slid =
      reduce_spr_to_path(filled, 0, 2, {0, 1, 2}, {0, 2, 3}, Variant::Induced);
  CHECK(slid.instance.rule == Rule::TS);
  CHECK(reduced_verdict(slid) == reduced_verdict(tj));

  // partially filled layers are ambiguous and refused
  Graph partial = ts::make_graph(
      5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}, {1, 2}});
  CHECK_THROWS_AS(reduce_spr_to_path(partial, 0, 4, {0, 1, 4}, {0, 3, 4},
                                     Variant::Induced),
                  input_error);
}

TEST_CASE("spanning-tree sliding gadget tracks the path gadget verdicts") {
  Graph c4 = ts::cycle_graph(4);
  GadgetOutput swap = reduce_spr_to_spanning_tree_ts(c4, 0, 2, {0, 1, 2},
                                                     {0, 2, 3});
  CHECK(swap.instance.variant == Variant::Spanning);
  CHECK(swap.instance.rule == Rule::TS);
  CHECK(swap.instance.property.kind == PropertyKind::Tree);
  check_bookkeeping(swap, 4);
  CHECK(reduced_verdict(swap) == VerdictKind::Yes);

  GadgetOutput same = reduce_spr_to_spanning_tree_ts(c4, 0, 2, {0, 1, 2},
                                                     {0, 1, 2});
  CHECK(reduced_verdict(same) == VerdictKind::Yes);

  Graph c6 = ts::cycle_graph(6);
  GadgetOutput far = reduce_spr_to_spanning_tree_ts(c6, 0, 3, {0, 1, 2, 3},
                                                    {0, 5, 4, 3});
  CHECK(reduced_verdict(far) == VerdictKind::No);
}

TEST_CASE("independent-set gadget") {
  SUBCASE("counts and trivial yes") {
    Graph p3 = ts::path_graph(3);
    GadgetOutput out = reduce_misr_to_induced_biclique(p3, {0, 2}, {0, 2}, 1);
    CHECK(out.instance.graph.vertex_count() == 5);  // n + i + 1
    CHECK(out.instance.variant == Variant::Induced);
    CHECK(out.instance.rule == Rule::TJ);
    CHECK(out.instance.property.kind == PropertyKind::Biclique);
    CHECK(out.instance.property.i == 1);
    CHECK(out.instance.property.j == 3);  // |V_s| + 1
    check_bookkeeping(out, 3);
    CHECK(reduced_verdict(out) == VerdictKind::Yes);
  }
  SUBCASE("opposite corners of a 4-cycle cannot trade in one move") {
    Graph c4 = ts::cycle_graph(4);
    GadgetOutput out = reduce_misr_to_induced_biclique(c4, {0, 2}, {1, 3}, 1);
    CHECK(reduced_verdict(out) == VerdictKind::No);
    // matching source-problem verdict, solved directly
    Instance src = ts::make_instance(c4, Variant::Induced, Rule::TJ,
                                     PropertySpec::edgeless(),
                                     ts::vset({0, 2}), ts::vset({1, 3}));
    CHECK(solve_bfs(src, OracleBudget{}).verdict.kind == VerdictKind::No);
  }
  SUBCASE("two hubs pin the left side") {
    Graph p3 = ts::path_graph(3);
    GadgetOutput out = reduce_misr_to_induced_biclique(p3, {0, 2}, {0, 2}, 2);
    CHECK(out.instance.graph.vertex_count() == 6);
    CHECK(out.instance.property.i == 2);
    CHECK(reduced_verdict(out) == VerdictKind::Yes);
  }
  SUBCASE("non-maximum independent sets are rejected") {
    Graph p4 = ts::path_graph(4);
    CHECK_THROWS_AS(reduce_misr_to_induced_biclique(p4, {0}, {3}, 1),
                    input_error);
    CHECK_THROWS_AS(reduce_misr_to_induced_biclique(p4, {0, 1}, {0, 2}, 1),
                    input_error);
  }
}

TEST_CASE("balanced-biclique gadget") {
  SUBCASE("4-cycle contains a 2-by-2 biclique") {
    Graph c4 = ts::cycle_graph(4);
    GadgetOutput out = reduce_bcbs_to_spanning_biclique(c4, 2);
    CHECK(out.instance.graph.vertex_count() == 12);  // n + 4k
    CHECK(out.instance.variant == Variant::Spanning);
    CHECK(out.instance.rule == Rule::TJ);
    CHECK(out.instance.property.i == 2);
    CHECK(out.instance.property.j == 2);
    check_bookkeeping(out, 4);
    CHECK(reduced_verdict(out) == VerdictKind::Yes);
    CHECK(has_balanced_biclique(c4, 2));
  }
  SUBCASE("a single edge has no 2-by-2 biclique") {
    Graph k2 = ts::path_graph(2);
    GadgetOutput out = reduce_bcbs_to_spanning_biclique(k2, 2);
    CHECK(out.instance.graph.vertex_count() == 10);
    CHECK(reduced_verdict(out) == VerdictKind::No);
    CHECK_FALSE(has_balanced_biclique(k2, 2));
  }
  SUBCASE("odd cycles are rejected") {
    CHECK_THROWS_AS(reduce_bcbs_to_spanning_biclique(ts::cycle_graph(5), 2),
                    input_error);
  }
}

TEST_CASE("clique-to-diameter gadget") {
  SUBCASE("sliding one clique vertex across a triangle") {
    Graph k3 = ts::complete_graph(3);
    GadgetOutput out = reduce_cliquer_to_diam2(k3, {0, 1}, {1, 2});
    CHECK(out.instance.graph.vertex_count() == 6);   // 2n
    CHECK(out.instance.source.size() == 3);          // 2|V_s| - 1
    CHECK(out.instance.variant == Variant::Induced);
    CHECK(out.instance.rule == Rule::TS);
    CHECK(out.instance.property.kind == PropertyKind::DiameterAtMostTwo);
    check_bookkeeping(out, 3);
    CHECK(reduced_verdict(out) == VerdictKind::Yes);
    // source problem agrees
    Instance src = ts::make_instance(k3, Variant::Induced, Rule::TS,
                                     PropertySpec::clique(), ts::vset({0, 1}),
                                     ts::vset({1, 2}));
    CHECK(solve_bfs(src, OracleBudget{}).verdict.kind == VerdictKind::Yes);
  }
  SUBCASE("cliques in different components stay apart") {
    Graph two = ts::make_graph(6,
                               {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
    GadgetOutput out = reduce_cliquer_to_diam2(two, {0, 1}, {3, 4});
    CHECK(reduced_verdict(out) == VerdictKind::No);
    Instance src = ts::make_instance(two, Variant::Induced, Rule::TS,
                                     PropertySpec::clique(), ts::vset({0, 1}),
                                     ts::vset({3, 4}));
    CHECK(solve_bfs(src, OracleBudget{}).verdict.kind == VerdictKind::No);
  }
  SUBCASE("undersized or non-clique endpoints are rejected") {
    Graph p3 = ts::path_graph(3);
    CHECK_THROWS_AS(reduce_cliquer_to_diam2(p3, {0}, {2}), input_error);
    CHECK_THROWS_AS(reduce_cliquer_to_diam2(p3, {0, 2}, {0, 1}), input_error);
  }
}

TEST_CASE("every gadget instance is well-formed") {
  // well-formedness (feasible endpoints, valid property parameters) across
  // one construction of each kind
  std::vector<GadgetOutput> outs;
  outs.push_back(reduce_hampath_to_edge_path(ts::path_graph(3), 0, 2));
  Graph c4 = ts::cycle_graph(4);
  outs.push_back(
      reduce_spr_to_path(c4, 0, 2, {0, 1, 2}, {0, 2, 3}, Variant::Induced));
  outs.push_back(
      reduce_spr_to_path(c4, 0, 2, {0, 1, 2}, {0, 2, 3}, Variant::Spanning));
  outs.push_back(
      reduce_spr_to_cycle(c4, 0, 2, {0, 1, 2}, {0, 2, 3}, Variant::Induced));
  outs.push_back(reduce_spr_to_spanning_tree_ts(c4, 0, 2, {0, 1, 2},
                                                {0, 2, 3}));
  outs.push_back(
      reduce_misr_to_induced_biclique(ts::path_graph(3), {0, 2}, {0, 2}, 1));
  outs.push_back(reduce_bcbs_to_spanning_biclique(c4, 2));
  outs.push_back(reduce_cliquer_to_diam2(ts::complete_graph(3), {0, 1},
                                         {1, 2}));
  for (const GadgetOutput& out : outs)
    CHECK_NOTHROW(validate_instance(out.instance));
}
