#include <doctest.h>

#include "cftspan/fault_enum.hpp"
#include "cftspan/graph_io.hpp"
#include "cftspan/modified_greedy.hpp"
#include "cftspan/oracle.hpp"
#include "support/test_helpers.hpp"

using namespace cftspan;
using testsupport::make;

TEST_CASE("fault set enumeration order is sizes-ascending colex") {
  std::vector<FaultSet> seen;
  for_each_fault_set(3, 2, [&](const FaultSet& fs) {
    seen.push_back(fs);
    return true;
  });
  std::vector<FaultSet> expected = {{}, {0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}};
  CHECK(seen == expected);
  CHECK(count_fault_sets(3, 2, 1000) == 7);
  CHECK(count_fault_sets(30, 4, 1000) == 1001);  // saturates
}

TEST_CASE("a graph is its own spanner") {
  auto g = testsupport::random_multigraph(6, 4, Setting::MCFT, 3);
  CHECK(verify_ft_spanner(g, g, 2, 2).ok);
  CHECK(verify_certificate(g, g, 2).ok);
}

TEST_CASE("4-cycle minus an edge fails the f=1 check with a replayable counterexample") {
  auto g = make(Setting::ECFT, 4, {},
                {{0, 1, 1.0, {1}}, {1, 2, 1.0, {2}}, {2, 3, 1.0, {3}}, {3, 0, 1.0, {4}}});
  auto h = g.subgraph({0, 1, 2});
  auto outcome = verify_ft_spanner(g, h, 2, 1);
  REQUIRE_FALSE(outcome.ok);
  const auto& ce = *outcome.counterexample;
  CHECK(ce.faults.size() == 1);
  // replay against the core operations
  auto gs = g.subtract(ce.faults);
  auto hs = h.subtract(ce.faults);
  CHECK(hs.shortest_dist(ce.u, ce.v) == ce.dist_in_h);
  CHECK(gs.shortest_dist(ce.u, ce.v) == ce.dist_in_g);
  CHECK(ce.dist_in_h > 3.0 * ce.dist_in_g);
}

TEST_CASE("f=0 is the classic spanner check") {
  auto g = testsupport::cycle_graph(6);
  auto path = g.subgraph({0, 1, 2, 3, 4});
  CHECK(verify_ft_spanner(g, path, 3, 0).ok);       // 5-edge detour, stretch 5
  CHECK_FALSE(verify_ft_spanner(g, path, 2, 0).ok); // stretch 3 is too small
}

TEST_CASE("verifier rejects non-subgraphs") {
  auto g = testsupport::cycle_graph(4);
  auto other = make(Setting::Lists, 4, {}, {{0, 2, 1.0, {}}});
  CHECK_THROWS_AS(verify_ft_spanner(g, other, 2, 0), std::invalid_argument);
}

TEST_CASE("budget pre-check raises instead of guessing") {
  auto g = testsupport::random_multigraph(8, 6, Setting::ECFT, 9);
  CHECK_THROWS_AS(verify_ft_spanner(g, g, 2, 2, 10), BudgetExceeded);
  CHECK_THROWS_AS(verify_certificate(g, g, 2, 10), BudgetExceeded);
}

TEST_CASE("certificate verification catches a tree over a 2-color-connected ring") {
  auto g = make(Setting::ECFT, 6, {},
                {{0, 1, 1.0, {1}}, {1, 2, 1.0, {2}}, {2, 3, 1.0, {3}}, {3, 4, 1.0, {4}},
                 {4, 5, 1.0, {5}}, {5, 0, 1.0, {6}}});
  auto tree = g.subgraph({0, 1, 2, 3, 4});
  auto outcome = verify_certificate(g, tree, 1);
  REQUIRE_FALSE(outcome.ok);
  CHECK(outcome.counterexample->dist_in_h == kInfDist);
  CHECK(outcome.counterexample->dist_in_g < kInfDist);
}

TEST_CASE("lambda=0 only asks H to span components") {
  auto g = make(Setting::ECFT, 5, {},
                {{0, 1, 1.0, {1}}, {1, 2, 1.0, {1}}, {0, 2, 1.0, {2}}, {3, 4, 1.0, {2}}});
  CHECK(verify_certificate(g, g.subgraph({0, 1, 3}), 0).ok);
  CHECK_FALSE(verify_certificate(g, g.subgraph({0, 3}), 0).ok);
  CHECK_FALSE(verify_certificate(g, g.subgraph({0, 1}), 0).ok);
}

TEST_CASE("build_certificate") {
  // a tree has no replaceable edges
  auto tree = make(Setting::ECFT, 5, {},
                   {{0, 1, 1.0, {1}}, {1, 2, 1.0, {2}}, {1, 3, 1.0, {1}}, {3, 4, 1.0, {3}}});
  auto report = build_certificate(tree, 1);
  CHECK(identical_graphs(report.spanner, tree));

  CHECK(certificate_stretch_parameter(1) == 1);
  CHECK(certificate_stretch_parameter(2) == 1);
  CHECK(certificate_stretch_parameter(10) == 4);
  CHECK(certificate_stretch_parameter(60) == 6);

  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    auto g = testsupport::random_multigraph(8, 7, Setting::ECFT, seed);
    for (int lambda : {1, 2}) {
      auto cert = build_certificate(g, lambda);
      CHECK(verify_certificate(g, cert.spanner, lambda).ok);
    }
  }
}

TEST_CASE("any f-CFT spanner is a lambda=f certificate") {
  for (std::uint64_t seed = 30; seed <= 36; ++seed) {
    auto g = testsupport::random_multigraph(7, 5, Setting::MCFT, seed);
    auto report = build_ft_greedy(g, 2, 1);
    CHECK(verify_ft_spanner(g, report.spanner, 2, 1).ok);
    CHECK(verify_certificate(g, report.spanner, 1).ok);
  }
}

TEST_CASE("sample_blocked_subgraph endpoints of the p range") {
  auto g = testsupport::random_multigraph(6, 4, Setting::MCFT, 11);
  auto report = build_ft_greedy(g, 2, 1);
  auto b = extract_blocking_set(report, 2);

  auto none = sample_blocked_subgraph(report.spanner, b, 0.0, 5);
  CHECK(none.edge_count() == 0);  // every edge has a colored endpoint

  auto all = sample_blocked_subgraph(report.spanner, b, 1.0, 5);
  std::set<EdgeId> blocked;
  for (const auto& p : b.pairs) blocked.insert(p.edge);
  CHECK(all.edge_count() == report.spanner.edge_count() - static_cast<int>(blocked.size()));
  for (const Edge& e : report.spanner.edges())
    CHECK((all.find_edge(e.id) >= 0) == !blocked.count(e.id));

  CHECK_THROWS_AS(sample_blocked_subgraph(report.spanner, b, 1.5, 5), std::invalid_argument);
}

TEST_CASE("sampled subgraphs of a blocked spanner keep high girth") {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    auto g = testsupport::random_multigraph(7, 7, Setting::ECFT, seed);
    for (int k : {1, 2}) {
      auto report = build_ft_greedy(g, k, 1);
      auto b = extract_blocking_set(report, k);
      REQUIRE(verify_blocking_set(report.spanner, b, k).ok);
      for (double p : {0.3, 0.7})
        for (std::uint64_t s = 0; s < 25; ++s) {
          auto sample = sample_blocked_subgraph(report.spanner, b, p, seed * 100 + s);
          auto girth = sample.girth();
          CHECK((!girth || *girth >= 2 * k + 1));
        }
    }
  }
}

TEST_CASE("sampling is deterministic per seed") {
  auto g = testsupport::random_multigraph(8, 6, Setting::ECFT, 21);
  auto report = build_ft_greedy(g, 2, 1);
  auto b = extract_blocking_set(report, 2);
  auto a1 = sample_blocked_subgraph(report.spanner, b, 0.5, 42);
  auto a2 = sample_blocked_subgraph(report.spanner, b, 0.5, 42);
  auto a3 = sample_blocked_subgraph(report.spanner, b, 0.5, 43);
  CHECK(identical_graphs(a1, a2));
  CHECK(serialize_graph(a1) == serialize_graph(a2));
  (void)a3;  // different seed may differ; only determinism is asserted
}
