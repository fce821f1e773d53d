#include "cftspan/ft_greedy.hpp"

#include <algorithm>
#include <chrono>

#include "cftspan/fault_enum.hpp"
#include "growing_subgraph.hpp"

namespace cftspan {

namespace {

using detail::GrowingSubgraph;

struct WitnessSearcher {
  const GrowingSubgraph& h;
  const ColoredGraph& host;
  ColorList candidate_damage;  // colors that damage the candidate edge
  VertexId u, v;
  int f;
  Weight threshold;
  const SearchBudget& budget;
  std::uint64_t& nodes;

  std::vector<char> failed;
  FaultSet current;

  std::optional<FaultSet> run_branching() {
    failed.assign(static_cast<std::size_t>(host.palette_size()), 0);
    current.clear();
    return dfs();
  }

  std::optional<FaultSet> dfs() {
    if (++nodes > budget.max_nodes)
      throw BudgetExceeded("witness search exceeded node budget");
    auto pr = h.shortest_path(u, v, failed);
    if (pr.dist > threshold) return current;
    if (static_cast<int>(current.size()) == f) return std::nullopt;
    // Any witness extending `current` must damage an edge of this path.
    ColorList cand = detail::path_colors(host, pr.edge_positions);
    for (ColorId c : cand) {
      if (std::binary_search(candidate_damage.begin(), candidate_damage.end(), c)) continue;
      current.insert(std::upper_bound(current.begin(), current.end(), c), c);
      failed[static_cast<std::size_t>(c)] = 1;
      auto res = dfs();
      failed[static_cast<std::size_t>(c)] = 0;
      current.erase(std::find(current.begin(), current.end(), c));
      if (res) return res;
    }
    return std::nullopt;
  }

  std::optional<FaultSet> run_exhaustive() {
    failed.assign(static_cast<std::size_t>(host.palette_size()), 0);
    std::optional<FaultSet> found;
    for_each_fault_set(host.palette_size(), f, [&](const FaultSet& fs) {
      ++nodes;
      if (nodes > budget.max_nodes) throw BudgetExceeded("witness search exceeded node budget");
      for (ColorId c : fs)
        if (std::binary_search(candidate_damage.begin(), candidate_damage.end(), c)) return true;
      for (ColorId c : fs) failed[static_cast<std::size_t>(c)] = 1;
      auto pr = h.shortest_path(u, v, failed);
      for (ColorId c : fs) failed[static_cast<std::size_t>(c)] = 0;
      if (pr.dist > threshold) {
        found = fs;
        return false;
      }
      return true;
    });
    return found;
  }
};

ColorList candidate_damage_set(const ColoredGraph& host, const Edge& e) {
  return fault_set_union(e.colors,
                         fault_set_union(host.vertex_colors(e.u), host.vertex_colors(e.v)));
}

std::optional<FaultSet> search(const GrowingSubgraph& h, const ColoredGraph& host, const Edge& e,
                               int f, Weight threshold, WitnessSearch mode,
                               const SearchBudget& budget, std::uint64_t& nodes) {
  WitnessSearcher s{h, host, candidate_damage_set(host, e), e.u, e.v, f, threshold, budget, nodes,
                    {}, {}};
  return mode == WitnessSearch::Branching ? s.run_branching() : s.run_exhaustive();
}

}  // namespace

std::optional<FaultSet> find_separating_fault_set(const ColoredGraph& h, const Edge& candidate,
                                                  int f, Weight threshold, WitnessSearch mode,
                                                  const SearchBudget& budget,
                                                  std::uint64_t* nodes) {
  if (f < 0) throw std::invalid_argument("f must be non-negative");
  if (h.find_edge(candidate.id) >= 0)
    throw std::invalid_argument("candidate edge is already in the spanner");
  GrowingSubgraph gs(h);
  for (int pos = 0; pos < h.edge_count(); ++pos) gs.add(pos);
  std::uint64_t local = 0;
  auto res = search(gs, h, candidate, f, threshold, mode, budget, local);
  if (nodes) *nodes += local;
  return res;
}

BuildReport build_ft_greedy(const ColoredGraph& g, int k, int f, WitnessSearch mode,
                            const SearchBudget& budget) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (f < 0) throw std::invalid_argument("f must be non-negative");
  auto t0 = std::chrono::steady_clock::now();

  GrowingSubgraph h(g);
  BuildReport report{ColoredGraph{}, {}, {}};
  for (int pos : detail::weight_order(g)) {
    const Edge& e = g.edge_at(pos);
    ++report.stats.edges_examined;
    Weight threshold = static_cast<Weight>(2 * k - 1) * e.weight;
    auto witness = search(h, g, e, f, threshold, mode, budget, report.stats.search_nodes);
    if (witness) {
      h.add(pos);
      report.witness.emplace(e.id, std::move(*witness));
      ++report.stats.edges_kept;
    }
  }
  report.spanner = g.subgraph(h.edge_ids());
  report.stats.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

BlockingSet extract_blocking_set(const BuildReport& report, int k) {
  (void)k;
  BlockingSet b;
  for (const Edge& e : report.spanner.edges()) {
    auto it = report.witness.find(e.id);
    if (it == report.witness.end())
      throw std::logic_error("missing witness provenance for edge " + std::to_string(e.id));
    for (ColorId c : it->second) b.pairs.push_back({e.id, c});
    b.provenance.emplace(e.id, it->second);
  }
  return b;
}

std::vector<std::vector<int>> enumerate_short_cycles(const ColoredGraph& g, int max_edges) {
  std::vector<std::vector<int>> cycles;
  if (max_edges < 2) return cycles;
  const auto& adj = g.adjacency();
  std::vector<char> visited(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<int> path;

  for (int a = 0; a < g.edge_count(); ++a) {
    const Edge& ea = g.edge_at(a);
    // Cycles whose minimum edge position is `a`: a simple path from ea.v
    // back to ea.u over higher-positioned edges.
    visited[static_cast<std::size_t>(ea.v)] = 1;
    auto dfs = [&](auto&& self, VertexId x) -> void {
      for (auto [y, pos] : adj[static_cast<std::size_t>(x)]) {
        if (pos <= a) continue;
        if (y == ea.u) {
          if (static_cast<int>(path.size()) + 2 <= max_edges) {
            std::vector<int> cyc;
            cyc.push_back(a);
            cyc.insert(cyc.end(), path.begin(), path.end());
            cyc.push_back(pos);
            cycles.push_back(std::move(cyc));
          }
          continue;
        }
        if (visited[static_cast<std::size_t>(y)]) continue;
        if (static_cast<int>(path.size()) + 3 > max_edges) continue;  // no room to close
        visited[static_cast<std::size_t>(y)] = 1;
        path.push_back(pos);
        self(self, y);
        path.pop_back();
        visited[static_cast<std::size_t>(y)] = 0;
      }
    };
    dfs(dfs, ea.v);
    visited[static_cast<std::size_t>(ea.v)] = 0;
  }
  return cycles;
}

BlockingCheck verify_blocking_set(const ColoredGraph& h, const BlockingSet& b, int k) {
  BlockingCheck check;
  std::map<EdgeId, std::vector<ColorId>> by_edge;
  for (const BlockingPair& p : b.pairs) {
    int pos = h.find_edge(p.edge);
    if (pos < 0 || p.fault < 0 || p.fault >= h.palette_size() ||
        fault_set_contains(h.damage_set(pos), p.fault)) {
      check.ok = false;
      check.bad_pair = p;
      return check;
    }
    by_edge[p.edge].push_back(p.fault);
  }

  for (const auto& cycle : enumerate_short_cycles(h, 2 * k)) {
    bool blocked = false;
    for (std::size_t i = 0; i < cycle.size() && !blocked; ++i) {
      auto it = by_edge.find(h.edge_at(cycle[i]).id);
      if (it == by_edge.end()) continue;
      for (ColorId x : it->second) {
        for (std::size_t j = 0; j < cycle.size(); ++j) {
          if (j == i) continue;
          if (fault_set_contains(h.damage_set(cycle[j]), x)) {
            blocked = true;
            break;
          }
        }
        if (blocked) break;
      }
    }
    if (!blocked) {
      check.ok = false;
      std::vector<EdgeId> ids;
      for (int pos : cycle) ids.push_back(h.edge_at(pos).id);
      check.unblocked_cycle = std::move(ids);
      return check;
    }
  }
  return check;
}

}  // namespace cftspan
