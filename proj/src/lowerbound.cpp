#include "cftspan/lowerbound.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "cftspan/rng.hpp"

namespace cftspan {

namespace {

constexpr int kRetryCap = 200;

using Pair = std::pair<VertexId, VertexId>;

Pair norm(VertexId a, VertexId b) { return a < b ? Pair{a, b} : Pair{b, a}; }

ColoredGraph uncolored(int n, const std::vector<Pair>& edges) {
  std::vector<EdgeSpec> specs;
  EdgeId id = 0;
  for (auto [u, v] : edges) specs.push_back({id++, u, v, 1.0, {}});
  return ColoredGraph(Setting::Lists, n, {}, std::move(specs));
}

// Hop distance on a plain adjacency structure; -1 when disconnected.
int hops(const std::vector<std::vector<VertexId>>& adj, VertexId s, VertexId t) {
  if (s == t) return 0;
  std::vector<int> dist(adj.size(), -1);
  std::deque<VertexId> q{s};
  dist[static_cast<std::size_t>(s)] = 0;
  while (!q.empty()) {
    VertexId x = q.front();
    q.pop_front();
    for (VertexId y : adj[static_cast<std::size_t>(x)]) {
      if (dist[static_cast<std::size_t>(y)] < 0) {
        dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
        if (y == t) return dist[static_cast<std::size_t>(y)];
        q.push_back(y);
      }
    }
  }
  return -1;
}

std::vector<Pair> random_greedy_edges(int n, int k, Rng& rng) {
  std::vector<Pair> pairs;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) pairs.push_back({u, v});
  std::vector<std::vector<VertexId>> adj(static_cast<std::size_t>(n));
  std::set<Pair> present;
  std::vector<Pair> edges;
  // Keep inserting shuffled candidates until a whole pass adds nothing; an
  // edge is admissible iff its endpoints are >= 2k+1 hops apart, so every
  // created cycle has >= 2k+2 edges.
  while (true) {
    rng.shuffle(pairs);
    int added = 0;
    for (auto [u, v] : pairs) {
      if (present.count({u, v})) continue;
      int d = hops(adj, u, v);
      if (d >= 0 && d < 2 * k + 1) continue;
      present.insert({u, v});
      adj[static_cast<std::size_t>(u)].push_back(v);
      adj[static_cast<std::size_t>(v)].push_back(u);
      edges.push_back({u, v});
      ++added;
    }
    if (added == 0) break;
  }
  return edges;
}

// Overlay `layers` permuted copies of the base edge set; layer t edges get
// tag t. A permutation is accepted only when at least half the base edges
// land on non-edges of the current union.
struct PackedEdge {
  VertexId u, v;
  int layer;
};

std::vector<PackedEdge> pack_layers(int n, const std::vector<Pair>& base, int layers, Rng& rng) {
  std::vector<PackedEdge> out;
  std::set<Pair> present;
  for (auto [u, v] : base) {
    present.insert(norm(u, v));
    out.push_back({u, v, 0});
  }
  const std::size_t need = (base.size() + 1) / 2;
  for (int t = 1; t < layers; ++t) {
    bool done = false;
    for (int attempt = 0; attempt < kRetryCap && !done; ++attempt) {
      auto pi = rng.permutation(n);
      std::vector<Pair> fresh;
      for (auto [u, v] : base) {
        Pair img = norm(pi[static_cast<std::size_t>(u)], pi[static_cast<std::size_t>(v)]);
        if (!present.count(img)) fresh.push_back(img);
      }
      if (fresh.size() < need) continue;
      for (auto [u, v] : fresh) {
        present.insert({u, v});
        out.push_back({u, v, t});
      }
      done = true;
    }
    if (!done)
      throw DensityExhausted(
          "no permutation maps half the base edges to non-edges after " +
          std::to_string(kRetryCap) + " attempts at layer " + std::to_string(t + 1) +
          "; the instance is too dense for this many packed copies - use a smaller f");
  }
  return out;
}

// Random bipartition keeping at least half the edges crossing.
struct Bipartition {
  std::vector<char> right;           // side flag per vertex
  std::vector<int> crossing;         // edge positions with endpoints split
};

Bipartition bipartize(const ColoredGraph& g, Rng& rng) {
  for (int attempt = 0; attempt < kRetryCap; ++attempt) {
    Bipartition bi;
    bi.right.resize(static_cast<std::size_t>(g.vertex_count()));
    for (auto& side : bi.right) side = rng.bernoulli(0.5) ? 1 : 0;
    for (int pos = 0; pos < g.edge_count(); ++pos) {
      const Edge& e = g.edge_at(pos);
      if (bi.right[static_cast<std::size_t>(e.u)] != bi.right[static_cast<std::size_t>(e.v)])
        bi.crossing.push_back(pos);
    }
    if (2 * bi.crossing.size() >= static_cast<std::size_t>(g.edge_count())) return bi;
  }
  throw DensityExhausted("no bipartition keeps half the edges after " +
                         std::to_string(kRetryCap) + " attempts");
}

std::vector<std::vector<long long>> combinations(long long first_label, int pool, int choose) {
  std::vector<std::vector<long long>> out;
  if (choose == 0) {
    out.push_back({});
    return out;
  }
  std::vector<int> idx(static_cast<std::size_t>(choose));
  for (int i = 0; i < choose; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    std::vector<long long> subset;
    for (int i : idx) subset.push_back(first_label + i);
    out.push_back(std::move(subset));
    int i = choose - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == pool - choose + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < choose; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

}  // namespace

ColoredGraph lcf_graph(int n, const std::vector<int>& pattern) {
  std::set<Pair> present;
  std::vector<Pair> edges;
  auto push = [&](VertexId a, VertexId b) {
    Pair p = norm(a, b);
    if (present.insert(p).second) edges.push_back(p);
  };
  for (int i = 0; i < n; ++i) push(i, (i + 1) % n);
  for (int i = 0; i < n; ++i) {
    int d = pattern[static_cast<std::size_t>(i) % pattern.size()];
    push(i, ((i + d) % n + n) % n);
  }
  return uncolored(n, edges);
}

GirthBase girth_base(int n_hint, int k, std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  GirthBase base;
  base.girth = 2 * k + 2;
  if (k == 1) {
    int a = std::max(3, n_hint / 2);
    std::vector<Pair> edges;
    for (VertexId u = 0; u < a; ++u)
      for (VertexId v = 0; v < a; ++v) edges.push_back({u, a + v});
    base.graph = uncolored(2 * a, edges);
    base.source = GirthBase::Source::HardcodedCage;
  } else if (k == 2 && n_hint <= 14) {
    base.graph = lcf_graph(14, {5, -5});  // Heawood
    base.source = GirthBase::Source::HardcodedCage;
  } else if (k == 3 && n_hint <= 30) {
    base.graph = lcf_graph(30, {-13, -9, 7, -7, 9, 13});  // Tutte-Coxeter
    base.source = GirthBase::Source::HardcodedCage;
  } else {
    int n = std::max(n_hint, 2 * k + 2);
    Rng rng(seed);
    base.graph = uncolored(n, random_greedy_edges(n, k, rng));
    base.source = GirthBase::Source::RandomGreedy;
  }
  auto g = base.graph.girth();
  if (g && *g < base.girth) throw std::logic_error("girth base construction broke its guarantee");
  return base;
}

ColoredGraph gen_ecft_lower(const GirthBase& base, int f, int k, std::uint64_t seed) {
  if (f < 1) throw std::invalid_argument("f must be at least 1");
  if (base.girth < 2 * k + 2) throw std::invalid_argument("base girth too small for this k");
  std::vector<Pair> base_edges;
  for (const Edge& e : base.graph.edges()) base_edges.push_back({e.u, e.v});
  Rng rng(seed);
  auto packed = pack_layers(base.graph.vertex_count(), base_edges, f, rng);
  std::vector<EdgeSpec> specs;
  EdgeId id = 0;
  for (const auto& pe : packed) specs.push_back({id++, pe.u, pe.v, 1.0, {pe.layer + 1}});
  return ColoredGraph(Setting::ECFT, base.graph.vertex_count(), {}, std::move(specs));
}

ColoredGraph gen_mcft_lower(const ColoredGraph& base_ec, int f, std::uint64_t seed) {
  if (f < 1) throw std::invalid_argument("f must be at least 1");
  if (base_ec.setting() != Setting::ECFT)
    throw std::invalid_argument("base must be an edge-colored (ecft) instance");
  Rng rng(seed);
  Bipartition bi = bipartize(base_ec, rng);

  const int n = base_ec.vertex_count();
  long long max_edge_label = 0;
  for (ColorId c = 0; c < base_ec.palette_size(); ++c)
    max_edge_label = std::max(max_edge_label, base_ec.color_label(c));
  auto left_label = [&](int i) { return max_edge_label + 1 + i; };
  auto right_label = [&](int j) { return max_edge_label + 1 + f + j; };

  // Vertex (w, c) of copy-layer c has id c*n + w.
  std::vector<std::vector<long long>> vlists(static_cast<std::size_t>(f) *
                                             static_cast<std::size_t>(n));
  for (int c = 0; c < f; ++c)
    for (int w = 0; w < n; ++w)
      vlists[static_cast<std::size_t>(c * n + w)] = {
          bi.right[static_cast<std::size_t>(w)] ? right_label(c) : left_label(c)};

  std::vector<EdgeSpec> specs;
  EdgeId id = 0;
  for (int i = 0; i < f; ++i) {
    for (int j = 0; j < f; ++j) {
      for (int pos : bi.crossing) {
        const Edge& e = base_ec.edge_at(pos);
        VertexId lu = bi.right[static_cast<std::size_t>(e.u)] ? e.v : e.u;  // left endpoint
        VertexId rv = bi.right[static_cast<std::size_t>(e.u)] ? e.u : e.v;
        specs.push_back({id++, i * n + lu, j * n + rv, e.weight,
                         {base_ec.color_label(e.colors.front())}});
      }
    }
  }
  return ColoredGraph(Setting::MCFT, f * n, std::move(vlists), std::move(specs));
}

ColoredGraph gen_list_lower(const GirthBase& base, int f, int k, int mu, int nu,
                            std::uint64_t seed) {
  if (f < 1) throw std::invalid_argument("f must be at least 1");
  if (mu < 0 || nu < 0) throw std::invalid_argument("mu and nu must be non-negative");
  if (base.girth < 2 * k + 2) throw std::invalid_argument("base girth too small for this k");

  Rng rng(seed);
  const int n = base.graph.vertex_count();
  std::vector<Pair> base_edges;
  for (const Edge& e : base.graph.edges()) base_edges.push_back({e.u, e.v});

  // Stage 1: pack one copy per mu-subset of the f+mu edge colors.
  auto edge_subsets = combinations(1, f + mu, mu);
  auto packed = pack_layers(n, base_edges, static_cast<int>(edge_subsets.size()), rng);

  if (nu == 0) {
    std::vector<EdgeSpec> specs;
    EdgeId id = 0;
    for (const auto& pe : packed)
      specs.push_back({id++, pe.u, pe.v, 1.0, edge_subsets[static_cast<std::size_t>(pe.layer)]});
    return ColoredGraph(Setting::Lists, n, {}, std::move(specs));
  }

  // Stage 2: bipartize the packed graph, then the vertex-list product.
  std::vector<Pair> packed_pairs;
  for (const auto& pe : packed) packed_pairs.push_back({pe.u, pe.v});
  ColoredGraph packed_graph = uncolored(n, packed_pairs);
  Bipartition bi = bipartize(packed_graph, rng);

  auto left_subsets = combinations(f + mu + 1, f + nu, nu);
  auto right_subsets = combinations(f + mu + 1 + (f + nu), f + nu, nu);
  const int copies = static_cast<int>(left_subsets.size());

  std::vector<std::vector<long long>> vlists(static_cast<std::size_t>(copies) *
                                             static_cast<std::size_t>(n));
  for (int c = 0; c < copies; ++c)
    for (int w = 0; w < n; ++w)
      vlists[static_cast<std::size_t>(c * n + w)] =
          bi.right[static_cast<std::size_t>(w)] ? right_subsets[static_cast<std::size_t>(c)]
                                                : left_subsets[static_cast<std::size_t>(c)];

  std::vector<EdgeSpec> specs;
  EdgeId id = 0;
  for (int a = 0; a < copies; ++a) {
    for (int b = 0; b < copies; ++b) {
      for (int pos : bi.crossing) {
        const auto& pe = packed[static_cast<std::size_t>(pos)];
        VertexId lu = bi.right[static_cast<std::size_t>(pe.u)] ? pe.v : pe.u;
        VertexId rv = bi.right[static_cast<std::size_t>(pe.u)] ? pe.u : pe.v;
        specs.push_back({id++, a * n + lu, b * n + rv, 1.0,
                         edge_subsets[static_cast<std::size_t>(pe.layer)]});
      }
    }
  }
  return ColoredGraph(Setting::Lists, copies * n, std::move(vlists), std::move(specs));
}

}  // namespace cftspan
