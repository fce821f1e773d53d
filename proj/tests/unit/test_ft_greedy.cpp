#include <doctest.h>

#include <algorithm>

#include "cftspan/fault_enum.hpp"
#include "cftspan/ft_greedy.hpp"
#include "support/test_helpers.hpp"

using namespace cftspan;
using testsupport::make;

namespace {

Edge fresh_edge(const ColoredGraph& host, EdgeId id, VertexId u, VertexId v, Weight w,
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

// Validity of a witness against the library's own distance ops.
void check_witness(const ColoredGraph& h, const Edge& e, const FaultSet& w, int f,
                   Weight threshold) {
  CHECK(static_cast<int>(w.size()) <= f);
  for (ColorId c : w) {
    bool damaging = fault_set_contains(e.colors, c) ||
                    fault_set_contains(h.vertex_colors(e.u), c) ||
                    fault_set_contains(h.vertex_colors(e.v), c);
    CHECK_FALSE(damaging);
  }
  CHECK(h.subtract(w).shortest_dist(e.u, e.v) > threshold);
}

ColoredGraph unit_four_cycle_ecft() {
  return make(Setting::ECFT, 4, {},
              {{0, 1, 1.0, {1}}, {1, 2, 1.0, {2}}, {2, 3, 1.0, {3}}, {3, 0, 1.0, {4}}});
}

}  // namespace

TEST_CASE("f=0 witness search degenerates to a distance test") {
  auto h = make(Setting::ECFT, 3, {}, {{0, 1, 1.0, {1}}, {1, 2, 1.0, {2}}});
  auto close = find_separating_fault_set(h, fresh_edge(h, 99, 0, 2, 1.0, {}), 0, 3.0);
  CHECK_FALSE(close.has_value());  // dist 2 <= 3
  auto far = find_separating_fault_set(h, fresh_edge(h, 99, 0, 2, 1.0, {}), 0, 1.5);
  REQUIRE(far.has_value());
  CHECK(far->empty());
}

TEST_CASE("single path of three colors yields a one-color witness") {
  // u-x-y-v path colored {1},{2},{3}; candidate carries fresh color 9
  auto h = make(Setting::ECFT, 4, {}, {{0, 1, 1.0, {1}}, {1, 2, 1.0, {2}}, {2, 3, 1.0, {3}},
                                       {0, 3, 5.0, {9}}});
  h = h.subgraph({0, 1, 2});  // keep the path only; palette still has color 9
  Edge cand = fresh_edge(h, 17, 0, 3, 1.0, {9});
  auto w = find_separating_fault_set(h, cand, 1, 3.0);
  REQUIRE(w.has_value());
  check_witness(h, cand, *w, 1, 3.0);
  // branching explores colors in ascending order, so {1} comes first
  CHECK(*w == FaultSet{h.color_from_label(1)});
  auto exhaustive = find_separating_fault_set(h, cand, 1, 3.0, WitnessSearch::Exhaustive);
  REQUIRE(exhaustive.has_value());
  check_witness(h, cand, *exhaustive, 1, 3.0);
}

TEST_CASE("two color-disjoint short paths admit no single-fault witness") {
  auto h = make(Setting::ECFT, 4, {},
                {{0, 1, 1.0, {1}}, {1, 3, 1.0, {2}}, {0, 2, 1.0, {3}}, {2, 3, 1.0, {4}},
                 {0, 3, 5.0, {9}}});
  h = h.subgraph({0, 1, 2, 3});
  Edge cand = fresh_edge(h, 17, 0, 3, 1.0, {9});
  CHECK_FALSE(find_separating_fault_set(h, cand, 1, 3.0).has_value());
  CHECK_FALSE(find_separating_fault_set(h, cand, 1, 3.0, WitnessSearch::Exhaustive).has_value());
}

TEST_CASE("f=0 equals an independent classic greedy") {
  // textbook route: sort by (weight, id), keep iff the current spanner's
  // distance exceeds (2k-1)w; built on core ops only
  auto classic = [](const ColoredGraph& g, int k) {
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
      if (g.subgraph(kept).shortest_dist(e.u, e.v) > static_cast<Weight>(2 * k - 1) * e.weight)
        kept.push_back(e.id);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
  };
  for (std::uint64_t seed = 40; seed <= 52; ++seed) {
    auto base = testsupport::random_multigraph(8, 6, Setting::MCFT, seed);
    Rng rng(seed);
    std::vector<EdgeSpec> specs;
    for (const Edge& e : base.edges()) {
      std::vector<long long> labels;
      for (ColorId c : e.colors) labels.push_back(base.color_label(c));
      specs.push_back({e.id, e.u, e.v, 0.5 * static_cast<Weight>(1 + rng.below(6)), labels});
    }
    std::vector<std::vector<long long>> vlists;
    for (int v = 0; v < base.vertex_count(); ++v) {
      std::vector<long long> lst;
      for (ColorId c : base.vertex_colors(v)) lst.push_back(base.color_label(c));
      vlists.push_back(std::move(lst));
    }
    ColoredGraph g(Setting::MCFT, base.vertex_count(), vlists, specs);
    for (int k : {1, 2}) {
      auto ids = build_ft_greedy(g, k, 0).spanner.edge_ids();
      std::sort(ids.begin(), ids.end());
      CHECK(ids == classic(g, k));
    }
  }
}

TEST_CASE("classic greedy at f=0 sparsifies the unit 4-cycle") {
  auto report = build_ft_greedy(unit_four_cycle_ecft(), 2, 0);
  CHECK(report.spanner.edge_count() == 3);
  CHECK(report.spanner.find_edge(3) == -1);  // last edge has a 3-edge detour
  CHECK(report.stats.edges_examined == 4);
}

TEST_CASE("f=1 keeps the whole distinctly-colored 4-cycle") {
  auto report = build_ft_greedy(unit_four_cycle_ecft(), 2, 1);
  CHECK(report.spanner.edge_count() == 4);
  for (const auto& [id, w] : report.witness) CHECK(w.size() <= 1);
}

TEST_CASE("parallel edges survive under k=1 f=1") {
  auto g = make(Setting::ECFT, 2, {}, {{0, 1, 1.0, {1}}, {0, 1, 1.0, {2}}});
  auto report = build_ft_greedy(g, 1, 1);
  CHECK(report.spanner.edge_count() == 2);
}

TEST_CASE("witnesses replay at their insertion point") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    Setting setting = seed % 2 ? Setting::ECFT : Setting::MCFT;
    auto g = testsupport::random_multigraph(7, 5, setting, seed);
    int k = 1 + static_cast<int>(seed % 2);
    auto report = build_ft_greedy(g, k, 2);
    // rebuild the spanner in insertion order, re-checking each witness
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
      auto it = report.witness.find(e.id);
      if (it == report.witness.end()) continue;
      auto h = g.subgraph(kept);
      Weight threshold = static_cast<Weight>(2 * k - 1) * e.weight;
      check_witness(h, e, it->second, 2, threshold);
      kept.push_back(e.id);
    }
    CHECK(static_cast<int>(kept.size()) == report.spanner.edge_count());
  }
}

TEST_CASE("branching agrees with exhaustive enumeration") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Setting setting = seed % 3 == 0 ? Setting::Lists : (seed % 3 == 1 ? Setting::ECFT : Setting::MCFT);
    auto g = testsupport::random_multigraph(6, 5, setting, seed);
    if (g.palette_size() > 12 || g.edge_count() < 2) continue;
    // drop one edge and probe it against the rest
    EdgeId probe_id = g.edge_at(g.edge_count() - 1).id;
    const Edge probe = g.edge_by_id(probe_id);
    std::vector<EdgeId> rest;
    for (const Edge& e : g.edges())
      if (e.id != probe_id) rest.push_back(e.id);
    auto h = g.subgraph(rest);
    for (int f = 0; f <= 2; ++f) {
      for (Weight threshold : {1.0, 3.0}) {
        auto a = find_separating_fault_set(h, probe, f, threshold, WitnessSearch::Branching);
        auto b = find_separating_fault_set(h, probe, f, threshold, WitnessSearch::Exhaustive);
        CHECK(a.has_value() == b.has_value());
        if (a) check_witness(h, probe, *a, f, threshold);
        if (b) check_witness(h, probe, *b, f, threshold);
      }
    }
  }
}

TEST_CASE("search budget aborts loudly") {
  auto g = testsupport::random_multigraph(8, 10, Setting::ECFT, 5);
  SearchBudget tiny{2};
  CHECK_THROWS_AS(build_ft_greedy(g, 2, 2, WitnessSearch::Branching, tiny), BudgetExceeded);
}

TEST_CASE("blocking set extraction and bounds") {
  auto g0 = build_ft_greedy(unit_four_cycle_ecft(), 2, 0);
  CHECK(extract_blocking_set(g0, 2).pairs.empty());

  auto g1 = build_ft_greedy(unit_four_cycle_ecft(), 2, 1);
  auto b = extract_blocking_set(g1, 2);
  auto check = verify_blocking_set(g1.spanner, b, 2);
  CHECK(check.ok);

  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto g = testsupport::random_multigraph(7, 6, Setting::ECFT, seed);
    int f = static_cast<int>(seed % 3);
    auto report = build_ft_greedy(g, 2, f);
    auto bs = extract_blocking_set(report, 2);
    CHECK(bs.pairs.size() <= static_cast<std::size_t>(f) *
                                 static_cast<std::size_t>(report.spanner.edge_count()));
    std::map<EdgeId, int> per_edge;
    for (const auto& p : bs.pairs) ++per_edge[p.edge];
    for (const auto& [id, cnt] : per_edge) CHECK(cnt <= f);
    CHECK(verify_blocking_set(report.spanner, bs, 2).ok);
  }

  // missing provenance is a contract error
  BuildReport broken = build_ft_greedy(unit_four_cycle_ecft(), 2, 1);
  broken.witness.erase(broken.witness.begin());
  CHECK_THROWS_AS(extract_blocking_set(broken, 2), std::logic_error);
}

TEST_CASE("verify_blocking_set answers and counterexamples") {
  auto tree = make(Setting::ECFT, 4, {}, {{0, 1, 1.0, {1}}, {1, 2, 1.0, {2}}, {1, 3, 1.0, {3}}});
  CHECK(verify_blocking_set(tree, BlockingSet{}, 2).ok);

  auto cyc = unit_four_cycle_ecft();
  auto empty = verify_blocking_set(cyc, BlockingSet{}, 2);
  CHECK_FALSE(empty.ok);
  REQUIRE(empty.unblocked_cycle.has_value());
  CHECK(empty.unblocked_cycle->size() == 4);

  // condition (i): a pair damaging its own edge is rejected
  BlockingSet bad;
  bad.pairs.push_back({0, cyc.color_from_label(1)});
  auto res = verify_blocking_set(cyc, bad, 2);
  CHECK_FALSE(res.ok);
  CHECK(res.bad_pair.has_value());
}

TEST_CASE("short cycle enumeration counts") {
  auto k4 = make(Setting::Lists, 4, {},
                 {{0, 1, 1.0, {}}, {0, 2, 1.0, {}}, {0, 3, 1.0, {}}, {1, 2, 1.0, {}},
                  {1, 3, 1.0, {}}, {2, 3, 1.0, {}}});
  CHECK(enumerate_short_cycles(k4, 3).size() == 4);
  CHECK(enumerate_short_cycles(k4, 4).size() == 7);  // 4 triangles + 3 quads
  auto par = make(Setting::Lists, 2, {}, {{0, 1, 1.0, {}}, {0, 1, 1.0, {}}, {0, 1, 1.0, {}}});
  CHECK(enumerate_short_cycles(par, 2).size() == 3);  // three 2-cycles
}

TEST_CASE("build rejects bad parameters") {
  auto g = unit_four_cycle_ecft();
  CHECK_THROWS_AS(build_ft_greedy(g, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_ft_greedy(g, 2, -1), std::invalid_argument);
}
