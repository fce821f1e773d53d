"""Smoke tests for the python bindings against the CMake-built extension."""

import math

import pytest

import cftspan


def four_cycle():
    return cftspan.ColoredGraph(
        "ecft",
        4,
        [],
        [(0, 0, 1, 1.0, [1]), (1, 1, 2, 1.0, [2]), (2, 2, 3, 1.0, [3]), (3, 3, 0, 1.0, [4])],
    )


def test_parse_and_serialize_round_trip():
    text = "graph 3\nsetting ecft\ne 0 0 1 1 5\ne 1 1 2 2.5 6\n"
    g = cftspan.parse_graph(text)
    assert g.n == 3 and g.m == 2 and g.setting == "ecft"
    back = cftspan.parse_graph(cftspan.serialize_graph(g))
    assert cftspan.identical_graphs(g, back)


def test_parse_error_reports_line():
    with pytest.raises(ValueError, match="line 3"):
        cftspan.parse_graph("graph 2\nsetting lists\ne 0 0 5 1\n")


def test_core_operations():
    g = four_cycle()
    c1 = g.color_from_label(1)
    assert g.damages(c1, 0) and not g.damages(c1, 1)
    assert g.subtract([c1]).m == 3
    assert g.restrict_to([c1]).m == 1
    assert g.shortest_dist(0, 2) == 2.0
    assert g.girth() == 4
    assert math.isinf(g.subtract([c1]).shortest_dist(0, 1) + 0) is False  # path survives
    tree = cftspan.ColoredGraph("lists", 3, [], [(0, 0, 1, 1.0), (1, 1, 2, 1.0)])
    assert tree.girth() is None


def test_builds_verify_and_blocking():
    g = four_cycle()
    greedy = cftspan.build_greedy(g, k=2, f=1)
    assert greedy.spanner.m == 4
    assert cftspan.verify_spanner(g, greedy.spanner, 2, 1)["ok"]

    blocking = cftspan.extract_blocking_set(greedy, 2)
    assert cftspan.verify_blocking_set(greedy.spanner, blocking, 2)["ok"]

    modified = cftspan.build_modified(g, k=2, f=1)
    assert modified.spanner.m == 4
    assert cftspan.blame_bound_check(modified, 2, 1)

    path = g.subgraph([0, 1, 2])
    outcome = cftspan.verify_spanner(g, path, 2, 1)
    assert not outcome["ok"]
    ce = outcome["counterexample"]
    assert len(ce["faults"]) == 1 and math.isinf(ce["dist_in_h"])


def test_budget_is_loud():
    g = cftspan.random_instance(8, 2, "ecft", seed=5)
    with pytest.raises(RuntimeError, match="budget"):
        cftspan.verify_spanner(g, g, 2, 2, budget=10)


def test_generators_and_girth_invariant():
    base = cftspan.girth_base(0, 2, seed=1)
    assert base.graph.n == 14 and base.graph.girth() == 6
    assert base.source == "hardcoded-cage"

    packed = cftspan.gen_ecft_lower(base, f=2, k=2, seed=5)
    assert packed.palette_size == 2 and packed.m >= 32

    product = cftspan.gen_mcft_lower(packed, f=2, seed=6)
    assert product.n == 2 * packed.n and product.m % 4 == 0

    lists = cftspan.gen_list_lower(base, f=1, k=2, mu=2, nu=0, seed=7)
    assert lists.palette_size == 3
    assert all(len(e.colors) == 2 for e in lists.edges())

    report = cftspan.build_greedy(packed, k=2, f=1)
    blocking = cftspan.extract_blocking_set(report, 2)
    for seed in range(10):
        sample = cftspan.sample_blocked_subgraph(report.spanner, blocking, 0.5, seed)
        assert sample.girth() is None or sample.girth() >= 5


def test_certificate():
    g = cftspan.random_instance(8, 2, "mcft", seed=9)
    cert = cftspan.build_certificate(g, lam=1)
    assert cftspan.verify_certificate(g, cert.spanner, 1)["ok"]
