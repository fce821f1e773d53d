#include "cftspan/modified_greedy.hpp"

#include <cassert>
#include <chrono>

#include "growing_subgraph.hpp"

namespace cftspan {

namespace {

using detail::GrowingSubgraph;

ReplaceabilityResult replaceable_impl(const GrowingSubgraph& h, const ColoredGraph& host,
                                      const Edge& e, int k, int f, std::uint64_t& path_queries) {
  ColorList damage_e = fault_set_union(
      e.colors, fault_set_union(host.vertex_colors(e.u), host.vertex_colors(e.v)));

  std::vector<char> removed(static_cast<std::size_t>(host.palette_size()), 0);
  ReplaceabilityResult res;
  for (int i = 1; i <= f + 1; ++i) {
    ++path_queries;
    auto path = h.min_hop_path(e.u, e.v, removed);
    if (path.hops < 0 || path.hops >= 2 * k) {
      res.replaceable = false;
      res.paths_found = i - 1;
      return res;
    }
    ColorList on_path = detail::path_colors(host, path.edge_positions);
    for (ColorId c : on_path) {
      if (std::binary_search(damage_e.begin(), damage_e.end(), c)) continue;
      // Colors of earlier detours cannot reappear: their edges are filtered.
      assert(!removed[static_cast<std::size_t>(c)]);
      removed[static_cast<std::size_t>(c)] = 1;
      res.blame.insert(std::upper_bound(res.blame.begin(), res.blame.end(), c), c);
    }
  }
  res.replaceable = true;
  res.blame.clear();
  res.paths_found = f + 1;
  return res;
}

}  // namespace

ReplaceabilityResult is_replaceable(const ColoredGraph& h, const Edge& e, int k, int f,
                                    std::uint64_t* path_queries) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (f < 0) throw std::invalid_argument("f must be non-negative");
  if (h.find_edge(e.id) >= 0) throw std::invalid_argument("candidate edge is already in the spanner");
  GrowingSubgraph gs(h);
  for (int pos = 0; pos < h.edge_count(); ++pos) gs.add(pos);
  std::uint64_t local = 0;
  auto res = replaceable_impl(gs, h, e, k, f, local);
  if (path_queries) *path_queries += local;
  return res;
}

BuildReport build_modified_greedy(const ColoredGraph& g, int k, int f) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (f < 0) throw std::invalid_argument("f must be non-negative");
  auto t0 = std::chrono::steady_clock::now();

  GrowingSubgraph h(g);
  BuildReport report{ColoredGraph{}, {}, {}};
  for (int pos : detail::weight_order(g)) {
    const Edge& e = g.edge_at(pos);
    ++report.stats.edges_examined;
    auto res = replaceable_impl(h, g, e, k, f, report.stats.path_queries);
    if (!res.replaceable) {
      h.add(pos);
      report.witness.emplace(e.id, std::move(res.blame));
      ++report.stats.edges_kept;
    }
  }
  report.spanner = g.subgraph(h.edge_ids());
  report.stats.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

bool blame_bound_check(const BuildReport& report, int k, int f) {
  const std::size_t bound = static_cast<std::size_t>(4) * static_cast<std::size_t>(k) *
                            static_cast<std::size_t>(f);
  for (const auto& [id, blame] : report.witness)
    if (blame.size() > bound) return false;
  return true;
}

}  // namespace cftspan
