#pragma once

#include <algorithm>
#include <deque>
#include <queue>
#include <vector>

#include "cftspan/colored_graph.hpp"

namespace cftspan::detail {

// Spanner under construction: a subset of the host graph's edges with
// incremental adjacency and fault-filtered path queries. `failed` masks are
// indexed by dense color id.
class GrowingSubgraph {
 public:
  explicit GrowingSubgraph(const ColoredGraph& g)
      : g_(&g), present_(static_cast<std::size_t>(g.edge_count()), 0),
        adj_(static_cast<std::size_t>(g.vertex_count())) {}

  void add(int pos) {
    const Edge& e = g_->edge_at(pos);
    present_[static_cast<std::size_t>(pos)] = 1;
    adj_[static_cast<std::size_t>(e.u)].push_back({e.v, pos});
    adj_[static_cast<std::size_t>(e.v)].push_back({e.u, pos});
    edge_ids_.push_back(e.id);
  }

  bool contains(int pos) const { return present_[static_cast<std::size_t>(pos)] != 0; }
  const std::vector<EdgeId>& edge_ids() const { return edge_ids_; }

  bool edge_alive(int pos, const std::vector<char>& failed) const {
    for (ColorId c : g_->damage_set(pos))
      if (failed[static_cast<std::size_t>(c)]) return false;
    return true;
  }

  struct PathResult {
    Weight dist = kInfDist;
    std::vector<int> edge_positions;  // empty when unreachable
  };

  // Weighted shortest path among present, non-failed edges.
  PathResult shortest_path(VertexId s, VertexId t, const std::vector<char>& failed) const {
    const std::size_t n = adj_.size();
    std::vector<Weight> dist(n, kInfDist);
    std::vector<int> parent_edge(n, -1);
    std::vector<VertexId> parent(n, -1);
    using Item = std::pair<Weight, VertexId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[static_cast<std::size_t>(s)] = 0;
    pq.push({0, s});
    while (!pq.empty()) {
      auto [d, x] = pq.top();
      pq.pop();
      if (d > dist[static_cast<std::size_t>(x)]) continue;
      if (x == t) break;
      for (auto [y, pos] : adj_[static_cast<std::size_t>(x)]) {
        if (!edge_alive(pos, failed)) continue;
        Weight nd = d + g_->edge_at(pos).weight;
        if (nd < dist[static_cast<std::size_t>(y)]) {
          dist[static_cast<std::size_t>(y)] = nd;
          parent[static_cast<std::size_t>(y)] = x;
          parent_edge[static_cast<std::size_t>(y)] = pos;
          pq.push({nd, y});
        }
      }
    }
    PathResult res;
    res.dist = dist[static_cast<std::size_t>(t)];
    if (res.dist < kInfDist) {
      for (VertexId x = t; x != s; x = parent[static_cast<std::size_t>(x)])
        res.edge_positions.push_back(parent_edge[static_cast<std::size_t>(x)]);
      std::reverse(res.edge_positions.begin(), res.edge_positions.end());
    }
    return res;
  }

  struct HopPath {
    int hops = -1;                    // -1 when unreachable
    std::vector<int> edge_positions;  // s-to-t order
  };

  // Minimum-hop s-t path; among those, the lexicographically smallest vertex
  // id sequence, each hop taking the smallest-id parallel edge.
  HopPath min_hop_path(VertexId s, VertexId t, const std::vector<char>& failed) const {
    const std::size_t n = adj_.size();
    std::vector<int> dist_to_t(n, -1);
    std::deque<VertexId> q{t};
    dist_to_t[static_cast<std::size_t>(t)] = 0;
    while (!q.empty()) {
      VertexId x = q.front();
      q.pop_front();
      for (auto [y, pos] : adj_[static_cast<std::size_t>(x)]) {
        if (!edge_alive(pos, failed)) continue;
        if (dist_to_t[static_cast<std::size_t>(y)] < 0) {
          dist_to_t[static_cast<std::size_t>(y)] = dist_to_t[static_cast<std::size_t>(x)] + 1;
          q.push_back(y);
        }
      }
    }
    HopPath res;
    if (dist_to_t[static_cast<std::size_t>(s)] < 0) return res;
    res.hops = dist_to_t[static_cast<std::size_t>(s)];
    VertexId x = s;
    while (x != t) {
      VertexId best_y = -1;
      int best_pos = -1;
      EdgeId best_id = 0;
      for (auto [y, pos] : adj_[static_cast<std::size_t>(x)]) {
        if (!edge_alive(pos, failed)) continue;
        if (dist_to_t[static_cast<std::size_t>(y)] != dist_to_t[static_cast<std::size_t>(x)] - 1)
          continue;
        EdgeId id = g_->edge_at(pos).id;
        if (best_y < 0 || y < best_y || (y == best_y && id < best_id)) {
          best_y = y;
          best_pos = pos;
          best_id = id;
        }
      }
      res.edge_positions.push_back(best_pos);
      x = best_y;
    }
    return res;
  }

  const ColoredGraph& host() const { return *g_; }

 private:
  const ColoredGraph* g_;
  std::vector<char> present_;
  std::vector<std::vector<std::pair<VertexId, int>>> adj_;
  std::vector<EdgeId> edge_ids_;
};

// Sorted union of the damage sets along a path: the edge lists plus the
// vertex lists of every path vertex, endpoints included.
inline ColorList path_colors(const ColoredGraph& g, const std::vector<int>& edge_positions) {
  ColorList out;
  for (int pos : edge_positions) {
    const ColorList& dmg = g.damage_set(pos);
    out.insert(out.end(), dmg.begin(), dmg.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Edge order used by both builders: increasing weight, ties by ascending id.
inline std::vector<int> weight_order(const ColoredGraph& g) {
  std::vector<int> order(static_cast<std::size_t>(g.edge_count()));
  for (int i = 0; i < g.edge_count(); ++i) order[static_cast<std::size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const Edge& ea = g.edge_at(a);
    const Edge& eb = g.edge_at(b);
    if (ea.weight != eb.weight) return ea.weight < eb.weight;
    return ea.id < eb.id;
  });
  return order;
}

}  // namespace cftspan::detail
