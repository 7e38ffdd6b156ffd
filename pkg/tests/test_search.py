import random
from itertools import combinations
from math import comb

import pytest

from expansions import (Graph, TripleSystem, audit_forest_bound, audit_sigma_jump,
                        contains, contains_expansion, crosscut_number, expand,
                        graph_contains, lower_bound_construction, turan_number)

from helpers import brute_contains, brute_turan, random_graph, random_system


PATH2 = Graph.from_edges(3, [(0, 1), (1, 2)])


# ------------------------------------------------------------- containment

def test_contains_rejects_pair_sharing_host():
    # expansion of a 2-edge path needs two triples meeting in one vertex
    host = TripleSystem.from_edges(4, [(0, 1, 2), (0, 1, 3)])
    assert contains(host, expand(PATH2).system) is None


def test_contains_finds_center_at_shared_vertex():
    host = TripleSystem.from_edges(5, [(0, 1, 2), (0, 3, 4)])
    cert = contains(host, expand(PATH2).system)
    assert cert is not None
    assert cert.check(host, expand(PATH2).system)
    assert cert.mapping[1] == 0  # the path center must land on the shared vertex


def test_contains_empty_pattern_and_oversized_pattern():
    host = TripleSystem.from_edges(4, [(0, 1, 2)])
    empty = TripleSystem(2, frozenset())
    cert = contains(host, empty)
    assert cert is not None and cert.check(host, empty)
    big = TripleSystem(6, frozenset())
    assert contains(host, big) is None


def test_contains_matches_permutation_oracle_sweep():
    rng = random.Random(71)
    for _ in range(50):
        host = random_system(rng, rng.randint(4, 7), rng.randint(0, 9))
        pattern = random_system(rng, rng.randint(3, 5), rng.randint(0, 3))
        got = contains(host, pattern)
        want = brute_contains(host, pattern)
        assert (got is not None) == want
        if got is not None:
            assert got.check(host, pattern)


def test_contains_expansion_agrees_with_generic_search():
    rng = random.Random(73)
    for _ in range(40):
        base = random_graph(rng, rng.randint(2, 4), 0.6)
        host = random_system(rng, rng.randint(5, 8), rng.randint(4, 16))
        via_expansion = contains_expansion(host, base)
        via_generic = contains(host, expand(base).system)
        assert (via_expansion is None) == (via_generic is None)
        if via_expansion is not None:
            assert via_expansion.check(host, expand(base).system)
            assert via_expansion.kind == "expansion"


def test_contains_expansion_needs_distinct_enlargement_vertices():
    # two triples through pair (0,1) plus one through (1,2): the expansion of
    # the path embeds only if the two path edges get distinct third vertices
    host = TripleSystem.from_edges(5, [(0, 1, 3), (1, 2, 3)])
    assert contains_expansion(host, PATH2) is None
    host2 = TripleSystem.from_edges(6, [(0, 1, 3), (1, 2, 3), (1, 2, 5)])
    cert = contains_expansion(host2, PATH2)
    assert cert is not None
    assert cert.check(host2, expand(PATH2).system)


def test_graph_contains_basics():
    path3 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert graph_contains(path3, PATH2)
    assert graph_contains(star, Graph.from_edges(3, [(0, 1), (0, 2)]))
    assert not graph_contains(path3, star)
    assert graph_contains(star, Graph(2, frozenset()))


# ------------------------------------------------------------ construction

def test_construction_count_formula():
    for n in range(0, 11):
        for core in range(0, n + 1):
            system = lower_bound_construction(n, core)
            assert len(system.edges) == core * comb(n - core, 2)
            # every triple meets the core exactly once
            for e in system.edges:
                assert sum(1 for v in e if v < core) == 1
    with pytest.raises(ValueError):
        lower_bound_construction(3, 4)


def test_construction_avoids_high_crosscut_patterns():
    # path with 4 edges has crosscut number 2, so the single-vertex core
    # construction must contain no copy of its expansion
    p4 = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    assert crosscut_number(p4) == 2
    host = lower_bound_construction(9, 1)
    assert contains_expansion(host, p4) is None
    # but the path with 2 edges (crosscut number 1) embeds once n is large
    assert contains_expansion(host, PATH2) is not None


# ------------------------------------------------------------------ turan

def test_turan_small_host_cannot_fit_pattern():
    result = turan_number(4, expand(PATH2).system)
    assert result.value == 4 and result.exact
    assert len(result.witness) == 4


def test_turan_on_five_vertices_matches_exhaustive_oracle():
    result = turan_number(5, expand(PATH2).system)
    value, witnesses = brute_turan(5, expand(PATH2).system)
    assert result.exact
    assert result.value == value == 4
    assert result.witness == min(witnesses)  # lexicographically smallest family


def test_turan_witness_is_free_and_maximal_random_patterns():
    rng = random.Random(79)
    for _ in range(10):
        pattern = random_system(rng, 4, rng.randint(1, 3))
        result = turan_number(5, pattern)
        assert result.exact
        host = TripleSystem(5, frozenset(result.witness))
        assert contains(host, pattern) is None
        value, _ = brute_turan(5, pattern)
        assert result.value == value


def test_turan_rejects_edgeless_pattern_that_fits():
    with pytest.raises(ValueError):
        turan_number(4, TripleSystem(3, frozenset()))
    # an edgeless pattern too large to fit is a benign trivial instance
    result = turan_number(4, TripleSystem(9, frozenset()))
    assert result.value == 4 and result.exact


def test_turan_budget_exhaustion_gives_flagged_lower_bound():
    result = turan_number(7, expand(PATH2).system, budget_nodes=30)
    assert not result.exact
    exact = turan_number(7, expand(PATH2).system)
    assert exact.exact
    assert result.value <= exact.value
    host = TripleSystem(7, frozenset(result.witness))
    assert contains(host, expand(PATH2).system) is None


def test_turan_as_dict_round_trips_fields():
    result = turan_number(4, expand(PATH2).system)
    d = result.as_dict()
    assert d["n"] == 4 and d["value"] == 4 and d["exact"] is True
    assert d["method"] == "branch-and-bound"


# ------------------------------------------------------------------ audits

def test_audit_forest_bound_reports_descriptive_rows():
    report = audit_forest_bound(PATH2, [4, 5, 6, 9])
    assert report["sigma"] == 1
    assert report["core_size"] == 0
    assert "no asymptotic claim" in report["note"]
    by_n = {row["n"]: row for row in report["rows"]}
    assert set(by_n) == {4, 5, 6, 9}
    for n, row in by_n.items():
        assert row["count_matches"]
        assert row["free"]
        if n <= 6:
            assert row["turan"]["exact"]
        else:
            assert row["turan"] is None


def test_audit_forest_bound_nontrivial_core():
    p4 = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    report = audit_forest_bound(p4, [6], exact_max_n=6)
    row = report["rows"][0]
    assert report["core_size"] == 1
    assert row["bound"] == comb(5, 2)
    assert row["free"]
    assert row["turan"]["value"] >= row["bound"]


def test_audit_sigma_jump_star_case():
    report = audit_sigma_jump(PATH2, 8)
    assert report["sigma"] == 1
    assert report["construction"] is None

    p4 = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    report = audit_sigma_jump(p4, 8)
    assert report["sigma"] == 2
    assert report["construction"] == "one-vertex core (star of triples)"
    assert report["edges"] == report["expected_edges"] == comb(7, 2)
    assert report["free"]
    assert "shape" in report


def test_audit_sigma_jump_two_vertex_core():
    # two disjoint paths with 4 edges each: crosscut number 4
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (5, 6), (6, 7), (7, 8), (8, 9)]
    forest = Graph.from_edges(10, edges)
    assert crosscut_number(forest) == 4
    report = audit_sigma_jump(forest, 9)
    assert report["construction"] == "two-vertex core"
    assert report["edges"] == 2 * comb(7, 2)
    assert report["free"]
