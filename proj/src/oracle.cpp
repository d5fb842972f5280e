#include "subrecon/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <queue>
#include <string>

#include "subrecon/feasibility.hpp"
#include "subrecon/moves.hpp"

namespace subrecon {

namespace {

// Above this many feasible solutions the explicit adjacency lists are not
// materialized; reachability runs as an implicit frontier search instead.
constexpr std::size_t kExplicitNodeLimit = 200000;

/// Exact C(n,k), clamped to cap+1 once it exceeds cap.
std::size_t combinations_capped(std::size_t n, std::size_t k,
                                std::size_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;  // C(n-k+i, i); exact since i consecutive factors
    if (r > cap) return cap + 1;
  }
  return static_cast<std::size_t>(r);
}

std::size_t element_count(const Instance& inst) {
  return inst.variant == Variant::Edge
             ? static_cast<std::size_t>(inst.graph.edge_count())
             : static_cast<std::size_t>(inst.graph.vertex_count());
}

Solution solution_from_ids(const Instance& inst, const std::vector<int>& ids) {
  if (inst.variant == Variant::Edge) {
    std::vector<Edge> es;
    es.reserve(ids.size());
    for (int id : ids) es.push_back(inst.graph.edge_at(id));
    return Solution::edge_set(std::move(es));
  }
  return Solution::vertex_set(ids);
}

int node_index_of(const std::vector<Solution>& nodes, const Solution& s) {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), s);
  if (it == nodes.end() || !(*it == s)) return -1;
  return static_cast<int>(it - nodes.begin());
}

void fill_adjacency(const Instance& inst, ReconfigGraph& rg) {
  rg.adj.assign(rg.nodes.size(), {});
  for (std::size_t i = 0; i < rg.nodes.size(); ++i) {
    for (const Solution& nb : neighbors(inst.graph, rg.nodes[i], inst.variant,
                                        inst.rule, inst.property)) {
      int j = node_index_of(rg.nodes, nb);
      if (j >= 0) rg.adj[i].push_back(j);
    }
  }
  rg.source_index = node_index_of(rg.nodes, inst.source);
  rg.target_index = node_index_of(rg.nodes, inst.target);
  if (rg.source_index < 0 || rg.target_index < 0)
    throw input_error("reconfig graph: endpoint solution is infeasible");
}

SolveResult solve_explicit(ReconfigGraph rg) {
  SolveResult res;
  res.solver = "oracle";
  res.rg_nodes = rg.nodes.size();
  res.rg_edges = rg.edge_count();
  auto path = shortest_node_path(rg, rg.source_index, rg.target_index);
  if (!path) {
    res.verdict = Verdict::no();
    return res;
  }
  ReconfigSequence seq;
  for (int idx : *path) seq.steps.push_back(rg.nodes[idx]);
  res.verdict = Verdict::yes(std::move(seq));
  return res;
}

/// Frontier BFS that discovers neighbors on the fly; only the visited
/// solutions are kept, never the adjacency.
SolveResult solve_implicit(const Instance& inst) {
  SolveResult res;
  res.solver = "oracle";
  std::map<Solution, int> id_of;
  std::vector<Solution> by_id;
  std::vector<int> parent;
  std::size_t edges_seen = 0;
  auto intern = [&](const Solution& s, int par) {
    auto [it, fresh] = id_of.emplace(s, static_cast<int>(by_id.size()));
    if (fresh) {
      by_id.push_back(s);
      parent.push_back(par);
    }
    return std::pair<int, bool>{it->second, fresh};
  };
  intern(inst.source, -1);
  std::queue<int> q;
  q.push(0);
  int target_id = inst.source == inst.target ? 0 : -1;
  while (!q.empty() && target_id < 0) {
    int cur = q.front();
    q.pop();
    Solution cur_sol = by_id[cur];  // copy: by_id may reallocate below
    for (const Solution& nb : neighbors(inst.graph, cur_sol, inst.variant,
                                        inst.rule, inst.property)) {
      ++edges_seen;
      auto [nid, fresh] = intern(nb, cur);
      if (fresh) {
        if (nb == inst.target) {
          target_id = nid;
          break;
        }
        q.push(nid);
      }
    }
  }
  res.rg_nodes = by_id.size();
  res.rg_edges = edges_seen / 2;
  if (target_id < 0) {
    res.verdict = Verdict::no();
    return res;
  }
  std::vector<int> chain;
  for (int at = target_id; at >= 0; at = parent[at]) chain.push_back(at);
  std::reverse(chain.begin(), chain.end());
  ReconfigSequence seq;
  for (int idx : chain) seq.steps.push_back(by_id[idx]);
  res.verdict = Verdict::yes(std::move(seq));
  return res;
}

}  // namespace

OracleBudget budget_from_env() {
  OracleBudget b;
  if (const char* env = std::getenv("RECONFIG_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0)
      b.max_candidates = static_cast<std::size_t>(v);
  }
  return b;
}

std::vector<Solution> enumerate_solutions(const Instance& inst,
                                          const OracleBudget& budget) {
  std::size_t k = inst.source.size();
  if (static_cast<int>(k) > budget.max_k)
    throw budget_error("oracle: solution size " + std::to_string(k) +
                       " exceeds max_k=" + std::to_string(budget.max_k));
  std::size_t n = element_count(inst);
  std::size_t total = combinations_capped(n, k, budget.max_candidates);
  if (total > budget.max_candidates)
    throw budget_error("oracle: candidate count exceeds budget of " +
                       std::to_string(budget.max_candidates));
  std::vector<Solution> out;
  if (k == 0) {
    Solution empty = inst.variant == Variant::Edge ? Solution::edge_set({})
                                                   : Solution::vertex_set({});
    if (check_property(inst.graph, empty, inst.variant, inst.property))
      out.push_back(std::move(empty));
    return out;
  }
  if (n < k) return out;
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    Solution cand = solution_from_ids(inst, pick);
    if (check_property(inst.graph, cand, inst.variant, inst.property))
      out.push_back(std::move(cand));
    // next combination in lexicographic order
    int pos = static_cast<int>(k) - 1;
    while (pos >= 0 &&
           pick[pos] == static_cast<int>(n) - static_cast<int>(k) + pos)
      --pos;
    if (pos < 0) break;
    ++pick[pos];
    for (std::size_t q = pos + 1; q < k; ++q) pick[q] = pick[q - 1] + 1;
  }
  return out;
}

std::size_t ReconfigGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& a : adj) twice += a.size();
  return twice / 2;
}

ReconfigGraph build_reconfig_graph(const Instance& inst,
                                   const OracleBudget& budget) {
  validate_instance(inst);
  if (inst.source.size() != inst.target.size())
    throw input_error("reconfig graph: source and target sizes differ");
  ReconfigGraph rg;
  rg.nodes = enumerate_solutions(inst, budget);
  fill_adjacency(inst, rg);
  return rg;
}

std::optional<std::vector<int>> shortest_node_path(const ReconfigGraph& rg,
                                                   int from, int to) {
  if (from < 0 || to < 0 || from >= static_cast<int>(rg.nodes.size()) ||
      to >= static_cast<int>(rg.nodes.size()))
    throw input_error("shortest_node_path: node index out of range");
  std::vector<int> parent(rg.nodes.size(), -2);
  parent[from] = -1;
  std::queue<int> q;
  q.push(from);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    if (u == to) break;
    for (int w : rg.adj[u]) {
      if (parent[w] == -2) {
        parent[w] = u;
        q.push(w);
      }
    }
  }
  if (parent[to] == -2) return std::nullopt;
  std::vector<int> path;
  for (int at = to; at >= 0; at = parent[at]) path.push_back(at);
  std::reverse(path.begin(), path.end());
  return path;
}

SolveResult solve_bfs(const Instance& inst, const OracleBudget& budget) {
  return detail::solve_bfs_with_limit(inst, budget, kExplicitNodeLimit);
}

namespace detail {

SolveResult solve_bfs_with_limit(const Instance& inst,
                                 const OracleBudget& budget,
                                 std::size_t explicit_node_limit) {
  validate_instance(inst);
  if (inst.source.size() != inst.target.size())
    return {Verdict::no(), "oracle", 0, 0};
  try {
    ReconfigGraph rg;
    rg.nodes = enumerate_solutions(inst, budget);
    if (rg.nodes.size() > explicit_node_limit) return solve_implicit(inst);
    fill_adjacency(inst, rg);
    return solve_explicit(std::move(rg));
  } catch (const budget_error&) {
    return {Verdict::budget_exceeded(), "oracle", 0, 0};
  }
}

}  // namespace detail

}  // namespace subrecon
