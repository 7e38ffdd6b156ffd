from collections import Counter
from itertools import combinations, permutations

import pytest

from expansions import Graph, TripleSystem, forests, trees, triple_trees

from helpers import ahu_form, labeled_trees


# counts frozen after cross-checking the n <= 8 values against the labeled
# enumeration below; n = 9 confirmed once by the same oracle offline
TREE_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47}
FOREST_COUNTS = {1: 1, 2: 2, 3: 3, 4: 6, 5: 10, 6: 20, 7: 37, 8: 76, 9: 153}


def test_tree_counts_match_frozen_table():
    for n, want in TREE_COUNTS.items():
        assert len(trees(n)) == want, n
    assert trees(0) == ()


def test_trees_are_trees_and_pairwise_nonisomorphic():
    for n in range(1, 10):
        forms = set()
        for t in trees(n):
            assert t.n == n and t.is_tree()
            forms.add(ahu_form(n, t.sorted_edges()))
        assert len(forms) == len(trees(n))


def test_tree_enumeration_complete_against_labeled_oracle():
    # every labeled tree's shape appears in the unlabeled enumeration
    for n in range(2, 8):
        enumerated = {ahu_form(n, t.sorted_edges()) for t in trees(n)}
        seen = {ahu_form(n, edges) for edges in labeled_trees(n)}
        assert seen == enumerated


def test_forest_counts_match_frozen_table():
    for n, want in FOREST_COUNTS.items():
        assert len(forests(n)) == want, n


def forest_shape(f: Graph) -> tuple:
    # multiset of component shapes, each relabeled onto 0..size-1
    parts = []
    for comp in f.components():
        order = {v: i for i, v in enumerate(sorted(comp))}
        edges = [(order[u], order[v]) for u, v in f.edges if u in comp]
        parts.append(ahu_form(len(comp), edges))
    return tuple(sorted(parts))


def test_forests_are_forests_and_distinct():
    for n in range(1, 9):
        shapes = set()
        for f in forests(n):
            assert f.n == n and f.is_forest()
            shapes.add(forest_shape(f))
        assert len(shapes) == len(forests(n))


def test_forest_shape_is_label_independent():
    a = Graph.from_edges(5, [(3, 4), (0, 1), (1, 2)])
    b = Graph.from_edges(5, [(0, 3), (1, 3), (2, 4)])
    assert forest_shape(a) == forest_shape(b)


def test_forests_include_edgeless_and_full_tree_extremes():
    for n in range(1, 8):
        edge_counts = Counter(len(f.edges) for f in forests(n))
        assert edge_counts[0] == 1  # the edgeless forest
        assert edge_counts[n - 1] == TREE_COUNTS[n]  # spanning trees


def test_generators_reject_negative():
    with pytest.raises(ValueError):
        trees(-1)
    with pytest.raises(ValueError):
        forests(-2)


# ------------------------------------------------------------ triple trees

def is_triple_tree(system: TripleSystem) -> bool:
    # some ordering glues each edge onto a covered pair with one new vertex
    edges = list(system.edges)
    if not edges:
        return False

    def grow(placed, covered):
        if len(placed) == len(edges):
            return len(covered) == system.n
        for e in edges:
            if e in placed:
                continue
            inter = covered.intersection(e)
            if len(inter) == 2 and any(
                    inter <= set(p) for p in placed):
                if grow(placed | {e}, covered | set(e)):
                    return True
        return False

    for first in edges:
        if grow({first}, set(first)):
            return True
    return False


def canonical_by_permutation(system: TripleSystem):
    best = None
    for perm in permutations(range(system.n)):
        img = tuple(sorted(tuple(sorted((perm[a], perm[b], perm[c])))
                           for a, b, c in system.edges))
        if best is None or img < best:
            best = img
    return best


def test_triple_tree_counts_and_validity():
    assert [len(triple_trees(v)) for v in (3, 4, 5)] == [1, 1, 2]
    assert triple_trees(2) == ()
    for v in (3, 4, 5):
        forms = set()
        for t in triple_trees(v):
            assert t.n == v
            assert len(t.edges) == v - 2
            assert is_triple_tree(t)
            forms.add(canonical_by_permutation(t))
        assert len(forms) == len(triple_trees(v))


def test_triple_tree_enumeration_complete_by_exhaustion():
    for v in (3, 4, 5):
        q = v - 2
        pool = list(combinations(range(v), 3))
        found = set()
        for subset in combinations(pool, q):
            system = TripleSystem(v, frozenset(subset))
            if is_triple_tree(system):
                found.add(canonical_by_permutation(system))
        assert found == {canonical_by_permutation(t) for t in triple_trees(v)}
