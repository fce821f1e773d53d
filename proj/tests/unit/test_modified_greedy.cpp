#include <doctest.h>

#include <algorithm>

#include "cftspan/fault_enum.hpp"
#include "cftspan/modified_greedy.hpp"
#include "cftspan/oracle.hpp"
#include "support/test_helpers.hpp"

using namespace cftspan;
using testsupport::make;

namespace {

Edge dense_edge(const ColoredGraph& host, EdgeId id, VertexId u, VertexId v, Weight w,
                std::vector<long long> labels) {
  Edge e{id, u, v, w, {}};
  for (long long l : labels) {
    ColorId c = host.color_from_label(l);
    REQUIRE(c >= 0);
    e.colors.push_back(c);
  }
  std::sort(e.colors.begin(), e.colors.end());
  return e;
}

}  // namespace

TEST_CASE("no path at all halts immediately with empty blame") {
  auto h = make(Setting::ECFT, 4, {}, {{0, 1, 1.0, {1}}, {2, 3, 1.0, {9}}});
  h = h.subgraph({0});
  auto res = is_replaceable(h, dense_edge(h, 5, 2, 3, 1.0, {9}), 2, 3);
  CHECK_FALSE(res.replaceable);
  CHECK(res.blame.empty());
  CHECK(res.paths_found == 0);
}

TEST_CASE("one short path, f=1: both colors blamed") {
  // one u-v path of 2 unit edges colored {1},{2}
  auto h = make(Setting::ECFT, 3, {}, {{0, 1, 1.0, {1}}, {1, 2, 1.0, {2}}, {0, 2, 1.0, {9}}});
  h = h.subgraph({0, 1});
  auto res = is_replaceable(h, dense_edge(h, 5, 0, 2, 1.0, {9}), 2, 1);
  CHECK_FALSE(res.replaceable);
  CHECK(res.paths_found == 1);
  CHECK(res.blame == FaultSet{h.color_from_label(1), h.color_from_label(2)});

  // cross-check against exhaustive path enumeration: no second disjoint path
  auto paths = testsupport::all_simple_paths(h, 0, 2);
  CHECK(paths.size() == 1);
}

TEST_CASE("two color-disjoint short paths make the edge replaceable") {
  auto h = make(Setting::ECFT, 4, {},
                {{0, 1, 1.0, {1}}, {1, 3, 1.0, {2}}, {0, 2, 1.0, {3}}, {2, 3, 1.0, {4}},
                 {0, 3, 1.0, {9}}});
  h = h.subgraph({0, 1, 2, 3});
  Edge cand = dense_edge(h, 9, 0, 3, 1.0, {9});
  auto res = is_replaceable(h, cand, 2, 1);
  CHECK(res.replaceable);
  CHECK(res.blame.empty());
  CHECK(res.paths_found == 2);

  // exhaustive: no single non-damaging color kills every <=2k-1 hop path
  for (ColorId c = 0; c < h.palette_size(); ++c) {
    if (fault_set_contains(cand.colors, c)) continue;
    auto sub = h.subtract({c});
    bool has_short = false;
    for (const auto& p : testsupport::all_simple_paths(sub, 0, 3))
      if (p.hops <= 3) has_short = true;
    CHECK(has_short);
  }
}

TEST_CASE("f=0 on unit weights matches the exact greedy") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Setting setting = seed % 2 ? Setting::ECFT : Setting::VCFT;
    auto g = testsupport::random_multigraph(7, 5, setting, seed);
    for (int k : {1, 2}) {
      auto exact = build_ft_greedy(g, k, 0);
      auto fast = build_modified_greedy(g, k, 0);
      CHECK(exact.spanner.edge_ids() == fast.spanner.edge_ids());
    }
  }
}

TEST_CASE("f=1 distinct 4-cycle keeps all edges, matching the exact greedy") {
  auto g = make(Setting::ECFT, 4, {},
                {{0, 1, 1.0, {1}}, {1, 2, 1.0, {2}}, {2, 3, 1.0, {3}}, {3, 0, 1.0, {4}}});
  auto report = build_modified_greedy(g, 2, 1);
  CHECK(report.spanner.edge_count() == 4);
  CHECK(verify_ft_spanner(g, report.spanner, 2, 1).ok);
  CHECK(report.spanner.edge_ids() == build_ft_greedy(g, 2, 1).spanner.edge_ids());
}

TEST_CASE("weighted triangle: hop test keeps the heavy edge the exact greedy drops") {
  auto g = make(Setting::ECFT, 3, {}, {{0, 1, 1.0, {1}}, {1, 2, 1.0, {2}}, {0, 2, 10.0, {3}}});
  auto fast = build_modified_greedy(g, 1, 0);
  CHECK(fast.spanner.edge_count() == 3);  // 2-hop detour fails the k=1 hop test
  auto exact = build_ft_greedy(g, 1, 0);
  CHECK(exact.spanner.edge_count() == 2);  // detour weight 2 <= 10
  CHECK(verify_ft_spanner(g, fast.spanner, 1, 0).ok);
  CHECK(verify_ft_spanner(g, exact.spanner, 1, 0).ok);
}

TEST_CASE("blame sets respect the 4kf bound") {
  // adversarial: 3-edge path, every edge one color, every vertex two colors
  auto h = make(Setting::Lists, 4,
                {{10, 11}, {12, 13}, {14, 15}, {16, 17}},
                {{0, 1, 1.0, {1}}, {1, 2, 1.0, {2}}, {2, 3, 1.0, {3}}, {0, 3, 1.0, {9}}});
  h = h.subgraph({0, 1, 2});
  auto res = is_replaceable(h, dense_edge(h, 7, 0, 3, 1.0, {9}), 2, 1);
  CHECK_FALSE(res.replaceable);
  CHECK(res.blame.size() <= 8);  // 4kf with k=2, f=1
  // endpoint colors damage the candidate, so exactly 3+4 colors are blamed
  CHECK(res.blame.size() == 7);

  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto g = testsupport::random_multigraph(8, 6, Setting::Lists, seed);
    int k = 1 + static_cast<int>(seed % 2);
    int f = static_cast<int>(seed % 3);
    auto report = build_modified_greedy(g, k, f);
    CHECK(blame_bound_check(report, k, f));
  }
}

TEST_CASE("blame colors never damage their edge and come from real detours") {
  for (std::uint64_t seed = 20; seed <= 26; ++seed) {
    auto g = testsupport::random_multigraph(7, 6, Setting::MCFT, seed);
    auto report = build_modified_greedy(g, 2, 2);
    for (const auto& [id, blame] : report.witness)
      for (ColorId c : blame) CHECK_FALSE(g.damages(c, id));
  }
}

TEST_CASE("replaceable edges survive every small fault set (discard safety)") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    auto g = testsupport::random_multigraph(6, 6, Setting::ECFT, seed);
    const int k = 2, f = 1;
    auto report = build_modified_greedy(g, k, f);
    for (const Edge& e : g.edges()) {
      if (report.spanner.find_edge(e.id) >= 0) continue;  // kept
      // discarded => for every small non-damaging fault set the spanner
      // still has a short detour
      for_each_fault_set(g.palette_size(), f, [&](const FaultSet& fs) {
        for (ColorId c : fs)
          if (g.damages(c, e.id)) return true;
        auto sub = report.spanner.subtract(fs);
        auto hops = sub.hop_dist(e.u, e.v);
        REQUIRE(hops.has_value());
        CHECK(*hops <= 2 * k - 1);
        return true;
      });
    }
  }
}

TEST_CASE("path query counter stays within (f+1) per edge") {
  auto g = testsupport::random_multigraph(9, 8, Setting::ECFT, 77);
  for (int f : {0, 1, 3}) {
    auto report = build_modified_greedy(g, 2, f);
    CHECK(report.stats.path_queries <=
          static_cast<std::uint64_t>(g.edge_count()) * static_cast<std::uint64_t>(f + 1));
  }
}

TEST_CASE("weighted build: discarded edges had light all-earlier detours") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    Rng rng(seed);
    auto base = testsupport::random_multigraph(7, 5, Setting::ECFT, seed);
    // reweight deterministically
    std::vector<EdgeSpec> specs;
    for (const Edge& e : base.edges()) {
      std::vector<long long> labels;
      for (ColorId c : e.colors) labels.push_back(base.color_label(c));
      specs.push_back({e.id, e.u, e.v, 0.5 + rng.unit() * 3.5, labels});
    }
    ColoredGraph g(Setting::ECFT, base.vertex_count(), {}, specs);
    const int k = 2, f = 1;
    auto report = build_modified_greedy(g, k, f);
    CHECK(verify_ft_spanner(g, report.spanner, k, f).ok);

    // replay in processing order
    std::vector<int> order;
    for (int pos = 0; pos < g.edge_count(); ++pos) order.push_back(pos);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      const Edge& ea = g.edge_at(a);
      const Edge& eb = g.edge_at(b);
      return ea.weight != eb.weight ? ea.weight < eb.weight : ea.id < eb.id;
    });
    std::vector<EdgeId> kept;
    for (int pos : order) {
      const Edge& e = g.edge_at(pos);
      if (report.spanner.find_edge(e.id) >= 0) {
        kept.push_back(e.id);
        continue;
      }
      auto h = g.subgraph(kept);
      auto hops = h.hop_dist(e.u, e.v);
      REQUIRE(hops.has_value());
      CHECK(*hops <= 2 * k - 1);
      CHECK(h.shortest_dist(e.u, e.v) <= static_cast<Weight>(2 * k - 1) * e.weight);
    }
  }
}

TEST_CASE("parameter validation") {
  auto g = testsupport::cycle_graph(4);
  CHECK_THROWS_AS(build_modified_greedy(g, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_modified_greedy(g, 2, -1), std::invalid_argument);
}
