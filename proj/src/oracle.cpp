#include "cftspan/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <queue>

#include "cftspan/fault_enum.hpp"
#include "cftspan/modified_greedy.hpp"
#include "cftspan/rng.hpp"

namespace cftspan {

namespace {

// Check H's edges all exist in G unchanged, then give H back as a subgraph
// of G so both share one palette.
ColoredGraph rebase_subgraph(const ColoredGraph& g, const ColoredGraph& h) {
  auto labels_of = [](const ColoredGraph& gr, const ColorList& lst) {
    std::vector<std::string> out;
    for (ColorId c : lst) out.push_back(gr.color_display(c));
    return out;
  };
  if (h.vertex_count() != g.vertex_count())
    throw std::invalid_argument("spanner vertex count differs from the graph");
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (labels_of(g, g.vertex_colors(v)) != labels_of(h, h.vertex_colors(v)))
      throw std::invalid_argument("spanner vertex " + std::to_string(v) +
                                  " colors differ from the graph");
  for (const Edge& eh : h.edges()) {
    int pos = g.find_edge(eh.id);
    if (pos < 0) throw std::invalid_argument("spanner edge " + std::to_string(eh.id) +
                                             " is not an edge of the graph");
    const Edge& eg = g.edge_at(pos);
    if (eg.u != eh.u || eg.v != eh.v || eg.weight != eh.weight ||
        labels_of(g, eg.colors) != labels_of(h, eh.colors))
      throw std::invalid_argument("spanner edge " + std::to_string(eh.id) +
                                  " differs from the graph's edge");
  }
  return g.subgraph(h.edge_ids());
}

// Single-source distances over non-failed edges.
void dijkstra_from(const ColoredGraph& g, VertexId s, const std::vector<char>& failed,
                   std::vector<Weight>& dist) {
  dist.assign(static_cast<std::size_t>(g.vertex_count()), kInfDist);
  using Item = std::pair<Weight, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[static_cast<std::size_t>(s)] = 0;
  pq.push({0, s});
  while (!pq.empty()) {
    auto [d, x] = pq.top();
    pq.pop();
    if (d > dist[static_cast<std::size_t>(x)]) continue;
    for (auto [y, pos] : g.adjacency()[static_cast<std::size_t>(x)]) {
      bool alive = true;
      for (ColorId c : g.damage_set(pos))
        if (failed[static_cast<std::size_t>(c)]) {
          alive = false;
          break;
        }
      if (!alive) continue;
      Weight nd = d + g.edge_at(pos).weight;
      if (nd < dist[static_cast<std::size_t>(y)]) {
        dist[static_cast<std::size_t>(y)] = nd;
        pq.push({nd, y});
      }
    }
  }
}

void components_of(const ColoredGraph& g, const std::vector<char>& failed, std::vector<int>& comp) {
  comp.assign(static_cast<std::size_t>(g.vertex_count()), -1);
  int next = 0;
  std::deque<VertexId> q;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    comp[static_cast<std::size_t>(s)] = next;
    q.push_back(s);
    while (!q.empty()) {
      VertexId x = q.front();
      q.pop_front();
      for (auto [y, pos] : g.adjacency()[static_cast<std::size_t>(x)]) {
        bool alive = true;
        for (ColorId c : g.damage_set(pos))
          if (failed[static_cast<std::size_t>(c)]) {
            alive = false;
            break;
          }
        if (alive && comp[static_cast<std::size_t>(y)] < 0) {
          comp[static_cast<std::size_t>(y)] = comp[static_cast<std::size_t>(x)];
          q.push_back(y);
        }
      }
    }
    ++next;
  }
}

void ensure_budget(const ColoredGraph& g, int max_faults, std::uint64_t budget) {
  const std::uint64_t n = static_cast<std::uint64_t>(g.vertex_count());
  const std::uint64_t pairs = n * n;
  if (pairs == 0) return;
  std::uint64_t sets = count_fault_sets(g.palette_size(), max_faults, budget);
  if (sets > budget || sets > budget / (pairs == 0 ? 1 : pairs))
    throw BudgetExceeded("verification budget exceeded: " + std::to_string(sets) +
                         " fault sets x " + std::to_string(pairs) + " pairs");
}

}  // namespace

VerifyOutcome verify_ft_spanner(const ColoredGraph& g, const ColoredGraph& h, int k, int f,
                                std::uint64_t budget) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (f < 0) throw std::invalid_argument("f must be non-negative");
  ColoredGraph hs = rebase_subgraph(g, h);
  ensure_budget(g, f, budget);

  const int n = g.vertex_count();
  const Weight stretch = static_cast<Weight>(2 * k - 1);
  VerifyOutcome outcome;
  std::vector<char> failed(static_cast<std::size_t>(g.palette_size()), 0);
  std::vector<Weight> dg, dh;
  for_each_fault_set(g.palette_size(), f, [&](const FaultSet& fs) {
    for (ColorId c : fs) failed[static_cast<std::size_t>(c)] = 1;
    for (VertexId u = 0; u < n; ++u) {
      dijkstra_from(g, u, failed, dg);
      dijkstra_from(hs, u, failed, dh);
      for (VertexId v = u + 1; v < n; ++v) {
        Weight bound = stretch * dg[static_cast<std::size_t>(v)];
        if (dg[static_cast<std::size_t>(v)] == kInfDist) continue;  // both sides disconnected
        if (dh[static_cast<std::size_t>(v)] > bound) {
          outcome.ok = false;
          outcome.counterexample = {fs, u, v, dh[static_cast<std::size_t>(v)],
                                    dg[static_cast<std::size_t>(v)]};
          break;
        }
      }
      if (!outcome.ok) break;
    }
    for (ColorId c : fs) failed[static_cast<std::size_t>(c)] = 0;
    return outcome.ok;
  });
  return outcome;
}

VerifyOutcome verify_certificate(const ColoredGraph& g, const ColoredGraph& h, int lambda,
                                 std::uint64_t budget) {
  if (lambda < 0) throw std::invalid_argument("lambda must be non-negative");
  ColoredGraph hs = rebase_subgraph(g, h);
  ensure_budget(g, lambda, budget);

  const int n = g.vertex_count();
  VerifyOutcome outcome;
  std::vector<char> failed(static_cast<std::size_t>(g.palette_size()), 0);
  std::vector<int> cg, ch;
  for_each_fault_set(g.palette_size(), lambda, [&](const FaultSet& fs) {
    for (ColorId c : fs) failed[static_cast<std::size_t>(c)] = 1;
    components_of(g, failed, cg);
    components_of(hs, failed, ch);
    for (VertexId u = 0; u < n && outcome.ok; ++u) {
      for (VertexId v = u + 1; v < n; ++v) {
        bool conn_g = cg[static_cast<std::size_t>(u)] == cg[static_cast<std::size_t>(v)];
        bool conn_h = ch[static_cast<std::size_t>(u)] == ch[static_cast<std::size_t>(v)];
        if (conn_g && !conn_h) {
          // replayable distances for the report
          std::vector<Weight> dg;
          dijkstra_from(g, u, failed, dg);
          outcome.ok = false;
          outcome.counterexample = {fs, u, v, kInfDist, dg[static_cast<std::size_t>(v)]};
          break;
        }
      }
    }
    for (ColorId c : fs) failed[static_cast<std::size_t>(c)] = 0;
    return outcome.ok;
  });
  return outcome;
}

int certificate_stretch_parameter(int n) {
  int k = 0;
  while ((1LL << k) < n) ++k;  // ceil(log2 n)
  return std::max(1, k);
}

BuildReport build_certificate(const ColoredGraph& g, int lambda) {
  if (lambda < 1) throw std::invalid_argument("lambda must be at least 1");
  return build_modified_greedy(g, certificate_stretch_parameter(g.vertex_count()), lambda);
}

ColoredGraph sample_blocked_subgraph(const ColoredGraph& h, const BlockingSet& b, double p,
                                     std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must be in [0,1]");
  Rng rng(seed);
  FaultSet sampled;
  for (ColorId c = 0; c < h.palette_size(); ++c)
    if (rng.bernoulli(p)) sampled.push_back(c);

  ColoredGraph hs = h.restrict_to(sampled);
  std::vector<EdgeId> keep;
  for (const Edge& e : hs.edges()) {
    bool blocked = false;
    for (const BlockingPair& pair : b.pairs) {
      if (pair.edge == e.id && fault_set_contains(sampled, pair.fault)) {
        blocked = true;
        break;
      }
    }
    if (!blocked) keep.push_back(e.id);
  }
  return hs.subgraph(keep);
}

}  // namespace cftspan
