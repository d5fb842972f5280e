#include "subrecon/moves.hpp"

#include <algorithm>

#include "subrecon/feasibility.hpp"

namespace subrecon {

namespace {

bool edges_adjacent(const Edge& a, const Edge& b) {
  return a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
}

template <typename T>
std::vector<T> swap_element(const std::vector<T>& sorted, const T& out,
                            const T& in) {
  std::vector<T> r;
  r.reserve(sorted.size());
  for (const T& x : sorted)
    if (!(x == out)) r.push_back(x);
  r.insert(std::upper_bound(r.begin(), r.end(), in), in);
  return r;
}

// Elements of the symmetric difference, assuming both sides are sorted.
template <typename T>
void set_differences(const std::vector<T>& a, const std::vector<T>& b,
                     std::vector<T>& only_a, std::vector<T>& only_b) {
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(only_a));
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(),
                      std::back_inserter(only_b));
}

}  // namespace

std::vector<Solution> neighbors(const Graph& g, const Solution& sol,
                                Variant variant, Rule rule,
                                const PropertySpec& prop) {
  if (!check_property(g, sol, variant, prop)) return {};
  std::vector<Solution> out;
  if (sol.kind() == SolutionKind::EdgeSet) {
    for (const Edge& removed : sol.edges()) {
      auto try_add = [&](const Edge& added) {
        if (sol.contains_edge(added)) return;
        Solution cand =
            Solution::edge_set(swap_element(sol.edges(), removed, added));
        if (check_property(g, cand, variant, prop))
          out.push_back(std::move(cand));
      };
      if (rule == Rule::TJ) {
        for (const Edge& added : g.edges()) try_add(added);
      } else {
        // Slides must keep a shared endpoint with the removed edge.
        for (int end : {removed.u, removed.v})
          for (int idx : g.incident_edges(end)) try_add(g.edge_at(idx));
      }
    }
  } else {
    for (int removed : sol.vertices()) {
      auto try_add = [&](int added) {
        if (sol.contains_vertex(added)) return;
        Solution cand =
            Solution::vertex_set(swap_element(sol.vertices(), removed, added));
        if (check_property(g, cand, variant, prop))
          out.push_back(std::move(cand));
      };
      if (rule == Rule::TJ) {
        for (int added = 0; added < g.vertex_count(); ++added) try_add(added);
      } else {
        for (int added : g.neighbors_of(removed)) try_add(added);
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_feasible_move(const Graph& g, const Solution& from, const Solution& to,
                      Variant variant, Rule rule, const PropertySpec& prop) {
  SolutionKind want = solution_kind_for(variant);
  if (from.kind() != want || to.kind() != want)
    throw input_error("is_feasible_move: solution kind does not match variant");
  if (from == to || from.size() != to.size()) return false;
  if (from.kind() == SolutionKind::EdgeSet) {
    std::vector<Edge> out, in;
    set_differences(from.edges(), to.edges(), out, in);
    if (out.size() != 1 || in.size() != 1) return false;
    if (rule == Rule::TS && !edges_adjacent(out[0], in[0])) return false;
  } else {
    std::vector<int> out, in;
    set_differences(from.vertices(), to.vertices(), out, in);
    if (out.size() != 1 || in.size() != 1) return false;
    if (rule == Rule::TS && !g.has_edge(out[0], in[0])) return false;
  }
  return check_property(g, from, variant, prop) &&
         check_property(g, to, variant, prop);
}

VerifyResult verify_sequence(const Instance& inst,
                             const std::vector<Solution>& steps) {
  if (steps.empty()) return VerifyResult::reject(0, "empty sequence");
  SolutionKind want = solution_kind_for(inst.variant);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i].kind() != want)
      return VerifyResult::reject(i, "solution kind does not match variant");
    try {
      validate_solution(inst.graph, steps[i]);
    } catch (const input_error& e) {
      return VerifyResult::reject(i, e.what());
    }
    if (steps[i].size() != inst.source.size())
      return VerifyResult::reject(i, "solution size changed");
    if (!check_property(inst.graph, steps[i], inst.variant, inst.property))
      return VerifyResult::reject(i, "infeasible solution");
  }
  if (!(steps.front() == inst.source))
    return VerifyResult::reject(0, "sequence does not start at the source");
  if (!(steps.back() == inst.target))
    return VerifyResult::reject(steps.size() - 1,
                                "sequence does not end at the target");
  for (std::size_t i = 1; i < steps.size(); ++i) {
    if (!is_feasible_move(inst.graph, steps[i - 1], steps[i], inst.variant,
                          inst.rule, inst.property))
      return VerifyResult::reject(i, "not a single legal move");
  }
  return VerifyResult::accept();
}

}  // namespace subrecon
