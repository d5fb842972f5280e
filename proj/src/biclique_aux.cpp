#include "subrecon/biclique_aux.hpp"

#include <algorithm>
#include <numeric>

namespace subrecon {

namespace {

std::vector<int> sorted_union(const std::vector<int>& a,
                              const std::vector<int>& b) {
  std::vector<int> r;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(r));
  return r;
}

std::size_t intersection_size(const std::vector<int>& a,
                              const std::vector<int>& b) {
  std::size_t cnt = 0;
  auto it = a.begin();
  for (int x : b) {
    it = std::lower_bound(it, a.end(), x);
    if (it == a.end()) break;
    if (*it == x) ++cnt;
  }
  return cnt;
}

std::size_t difference_size(const std::vector<int>& a,
                            const std::vector<int>& b) {
  return a.size() - intersection_size(b, a);
}

}  // namespace

std::vector<int> common_neighbors(const Graph& g, const std::vector<int>& hub) {
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (std::binary_search(hub.begin(), hub.end(), v)) continue;
    bool all = true;
    for (int h : hub)
      if (!g.has_edge(v, h)) {
        all = false;
        break;
      }
    if (all) out.push_back(v);
  }
  return out;
}

bool aux_adjacent(const HubNode& a, const HubNode& b, int i, int j) {
  std::vector<int> ua = sorted_union(a.hub, a.common);
  std::vector<int> ub = sorted_union(b.hub, b.common);
  if (intersection_size(ua, ub) < static_cast<std::size_t>(i + j - 1))
    return false;
  if (difference_size(a.hub, ub) > 1) return false;
  if (difference_size(b.hub, ua) > 1) return false;
  return sorted_union(a.hub, b.hub).size() <=
         static_cast<std::size_t>(i + j + 1);
}

int AuxGraph::index_of(const std::vector<int>& hub) const {
  auto cmp = [](const HubNode& n, const std::vector<int>& h) {
    return n.hub < h;
  };
  auto it = std::lower_bound(nodes.begin(), nodes.end(), hub, cmp);
  if (it == nodes.end() || it->hub != hub) return -1;
  return static_cast<int>(it - nodes.begin());
}

AuxGraph build_aux_graph(const Graph& g, int i, int j) {
  AuxGraph aux;
  int n = g.vertex_count();
  if (n < i) return aux;
  std::vector<int> pick(i);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    std::vector<int> common = common_neighbors(g, pick);
    if (static_cast<int>(common.size()) >= j)
      aux.nodes.push_back({pick, std::move(common)});
    int pos = i - 1;
    while (pos >= 0 && pick[pos] == n - i + pos) --pos;
    if (pos < 0) break;
    ++pick[pos];
    for (int q = pos + 1; q < i; ++q) pick[q] = pick[q - 1] + 1;
  }
  aux.adj.assign(aux.nodes.size(), {});
  for (std::size_t p = 0; p < aux.nodes.size(); ++p)
    for (std::size_t q = p + 1; q < aux.nodes.size(); ++q)
      if (aux_adjacent(aux.nodes[p], aux.nodes[q], i, j)) {
        aux.adj[p].push_back(static_cast<int>(q));
        aux.adj[q].push_back(static_cast<int>(p));
      }
  for (auto& a : aux.adj) std::sort(a.begin(), a.end());
  return aux;
}

std::vector<std::vector<int>> hub_candidates(const Graph& g,
                                             const std::vector<int>& vs,
                                             int i) {
  std::vector<std::vector<int>> out;
  int k = static_cast<int>(vs.size());
  if (k < i) return out;
  std::vector<int> idx(i);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    std::vector<int> hub(i);
    for (int q = 0; q < i; ++q) hub[q] = vs[idx[q]];
    bool ok = true;
    for (int v : vs) {
      if (std::binary_search(hub.begin(), hub.end(), v)) continue;
      for (int h : hub)
        if (!g.has_edge(v, h)) {
          ok = false;
          break;
        }
      if (!ok) break;
    }
    if (ok) out.push_back(std::move(hub));
    int pos = i - 1;
    while (pos >= 0 && idx[pos] == k - i + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int q = pos + 1; q < i; ++q) idx[q] = idx[q - 1] + 1;
  }
  return out;
}

}  // namespace subrecon
