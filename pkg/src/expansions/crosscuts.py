"""Expansions of graphs and exact crosscut computations.

The expansion of a graph G is the triple system with one triple per edge,
obtained by adding a fresh enlargement vertex to that edge.  A crosscut of
a triple system is a vertex set meeting every edge exactly once; the
crosscut number of an expansion decomposes over the base graph as

    min over independent sets I of  |I| + #{edges disjoint from I},

so crosscut searches on expansions run on the base graph directly.  Both
the hypergraph search and the base-graph search here are exact and
deterministic; the hypergraph one doubles as the oracle for the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .core import Edge, Graph, TripleSystem, canonical_edge


@dataclass(frozen=True)
class Expansion:
    """A graph together with its expansion triple system.

    Enlargement vertices are assigned in sorted edge order: the i-th edge
    receives vertex base.n + i, so the layout is reproducible.
    """

    base: Graph
    system: TripleSystem
    enlargement: dict[Edge, int]


def expand(graph: Graph) -> Expansion:
    edges = graph.sorted_edges()
    enlargement = {e: graph.n + i for i, e in enumerate(edges)}
    triples = frozenset((u, v, enlargement[(u, v)]) for u, v in edges)
    return Expansion(graph, TripleSystem(graph.n + len(edges), triples), enlargement)


def min_crosscut(system: TripleSystem) -> tuple[int, frozenset[int]] | None:
    """Smallest vertex set meeting every edge exactly once, or None.

    Exact backtracking: branch on the first uncovered edge; choosing a
    vertex covers its edges and permanently forbids their other vertices
    (a second chosen vertex in a covered edge would break exactness).
    """
    edges = system.sorted_edges()
    if not edges:
        return (0, frozenset())
    m = len(edges)
    edges_at: dict[int, list[int]] = {}
    for i, e in enumerate(edges):
        for v in e:
            edges_at.setdefault(v, []).append(i)

    covered = [False] * m
    forbidden: dict[int, int] = {}
    chosen: list[int] = []
    best: list[tuple[int, tuple[int, ...]] | None] = [None]

    def walk(num_covered: int):
        if num_covered == m:
            # keep the first witness found at each size; later equal-size
            # solutions must not displace it
            if best[0] is None or len(chosen) < best[0][0]:
                best[0] = (len(chosen), tuple(chosen))
            return
        if best[0] is not None and len(chosen) + 1 >= best[0][0]:
            return
        target = next(i for i in range(m) if not covered[i])
        for v in edges[target]:
            if forbidden.get(v, 0):
                continue
            newly = [i for i in edges_at[v] if not covered[i]]
            for i in newly:
                covered[i] = True
                for u in edges[i]:
                    if u != v:
                        forbidden[u] = forbidden.get(u, 0) + 1
            chosen.append(v)
            walk(num_covered + len(newly))
            chosen.pop()
            for i in newly:
                covered[i] = False
                for u in edges[i]:
                    if u != v:
                        forbidden[u] -= 1

    walk(0)
    if best[0] is None:
        return None
    size, witness = best[0]
    return (size, frozenset(witness))


@dataclass(frozen=True)
class CrosscutPair:
    """An independent set I with the edges R the base graph leaves disjoint from it.

    The pair weight |I| + |R| equals the crosscut number of the expansion
    when the pair is optimal.
    """

    independent: frozenset[int]
    uncovered: frozenset[Edge]

    @property
    def weight(self) -> int:
        return len(self.independent) + len(self.uncovered)

    @staticmethod
    def of(graph: Graph, independent: Iterable[int]) -> "CrosscutPair":
        ind = frozenset(independent)
        for u, v in graph.edges:
            if u in ind and v in ind:
                raise ValueError(f"set is not independent: contains edge {(u, v)}")
        uncovered = frozenset(e for e in graph.edges if e[0] not in ind and e[1] not in ind)
        return CrosscutPair(ind, uncovered)


def best_crosscut_pair(graph: Graph) -> CrosscutPair:
    """Optimal crosscut pair of a graph: minimum weight, then maximum |I|,
    then lexicographically smallest I.

    Branches vertex-by-vertex in descending degree order over the support
    (an optimal I never uses isolated vertices; they would add weight).
    Partial weight |I| + #edges-with-both-endpoints-excluded only grows, so
    branches strictly above the incumbent weight are cut; ties continue so
    the |I| and lexicographic preferences stay exact.
    """
    adj = graph.adjacency
    support = [v for v in range(graph.n) if adj[v]]
    order = sorted(support, key=lambda v: (-len(adj[v]), v))
    UNDECIDED, IN, OUT = 0, 1, 2
    state = [UNDECIDED] * graph.n
    taken: list[int] = []
    best_key: list[tuple] = [(len(graph.edges) + 1, 0, ())]
    best_set: list[frozenset[int]] = [frozenset()]

    def walk(idx: int, rcount: int):
        if len(taken) + rcount > best_key[0][0]:
            return
        if idx == len(order):
            key = (len(taken) + rcount, -len(taken), tuple(sorted(taken)))
            if key < best_key[0]:
                best_key[0] = key
                best_set[0] = frozenset(taken)
            return
        v = order[idx]
        if all(state[u] != IN for u in adj[v]):
            state[v] = IN
            taken.append(v)
            walk(idx + 1, rcount)
            taken.pop()
        state[v] = OUT
        newly = sum(1 for u in adj[v] if state[u] == OUT)
        walk(idx + 1, rcount + newly)
        state[v] = UNDECIDED

    walk(0, 0)
    return CrosscutPair.of(graph, best_set[0])


def crosscut_number(graph: Graph) -> int:
    """Crosscut number of the expansion of a graph."""
    return best_crosscut_pair(graph).weight


def tree_crosscut_number(tree: Graph) -> int:
    """Crosscut number of a tree's expansion by a linear two-state scan.

    Per vertex: cost of the subtree with the vertex inside or outside the
    independent set; an edge to an excluded child either gets covered by
    the parent or pays one uncovered edge.  Value only; the branching
    search supplies witnesses.
    """
    if not tree.is_tree():
        raise ValueError("input must be a tree")
    if tree.n == 1:
        return 0
    adj = tree.adjacency
    root = 0
    parent = {root: None}
    postorder = []
    stack = [root]
    while stack:
        v = stack.pop()
        postorder.append(v)
        for u in adj[v]:
            if u not in parent:
                parent[u] = v
                stack.append(u)
    cost_in = {}
    cost_out = {}
    for v in reversed(postorder):
        kids = [u for u in adj[v] if parent.get(u) == v]
        cost_in[v] = 1 + sum(cost_out[u] for u in kids)
        cost_out[v] = sum(min(cost_in[u], cost_out[u] + 1) for u in kids)
    return min(cost_in[root], cost_out[root])


def _component_lambda(graph: Graph, comp: frozenset[int]) -> int:
    if len(comp) == 1:
        return 0
    adj = graph.adjacency
    start = min(comp)
    color = {start: 0}
    queue = [start]
    while queue:
        v = queue.pop()
        for u in adj[v]:
            if u not in color:
                color[u] = 1 - color[v]
                queue.append(u)
    sides = (frozenset(v for v in comp if color[v] == 0),
             frozenset(v for v in comp if color[v] == 1))
    leaves = {v for v in comp if len(adj[v]) == 1}
    if len(sides[0]) == len(sides[1]):
        # both parts of an evenly split tree contain a leaf, so the
        # discount applies no matter which part is called smaller
        if not (sides[0] & leaves and sides[1] & leaves):
            raise RuntimeError("evenly split tree bipartition missing a leaf on one side")
        return len(sides[0]) - 1
    small = min(sides, key=len)
    return len(small) - 1 if small & leaves else len(small)


def tree_lambda(tree: Graph) -> int:
    """Size of the smaller bipartition part, discounted by one if it has a leaf."""
    if not tree.is_tree():
        raise ValueError("input must be a tree")
    return _component_lambda(tree, frozenset(range(tree.n)))


def forest_lambda(forest: Graph) -> int:
    """Sum of the tree values over components; isolated vertices add zero."""
    if not forest.is_forest():
        raise ValueError("input must be a forest")
    return sum(_component_lambda(forest, comp) for comp in forest.components())


def complete_forest_to_tree(forest: Graph) -> Graph:
    """Extend a forest to a tree on the same vertices, preserving the
    crosscut number of the expansion.

    Consecutive edge-bearing components are joined by an edge from a
    non-independent vertex of one into the independent set of the next, so
    every joining edge is already covered.  Isolated vertices then attach
    to an independent vertex for the same reason.  A forest with two or
    more vertices but no edges has crosscut number 0, which no tree on
    those vertices can match, so that case is rejected.
    """
    if not forest.is_forest():
        raise ValueError("input must be a forest")
    if forest.n <= 1 or forest.is_tree():
        return forest
    comps = sorted(forest.components(), key=min)
    edge_comps = [c for c in comps if len(c) >= 2]
    singles = sorted(v for c in comps if len(c) == 1 for v in c)
    if not edge_comps:
        raise ValueError(
            "an edgeless forest on 2+ vertices cannot extend to a tree "
            "with the same crosscut number")

    pairs = []
    for comp in edge_comps:
        sub = Graph(forest.n, frozenset(e for e in forest.edges if e[0] in comp))
        pair = best_crosscut_pair(sub)
        if not pair.independent:
            raise RuntimeError("optimal pair of an edge-bearing tree has empty independent set")
        pairs.append((comp, pair))

    new_edges = set(forest.edges)
    for (comp_a, pair_a), (_, pair_b) in zip(pairs, pairs[1:]):
        u = min(comp_a - pair_a.independent)
        v = min(pair_b.independent)
        new_edges.add(canonical_edge(u, v))
    anchor = min(min(pair.independent) for _, pair in pairs)
    for z in singles:
        new_edges.add(canonical_edge(anchor, z))

    tree = Graph(forest.n, frozenset(new_edges))
    if not tree.is_tree():
        raise RuntimeError("completion did not produce a tree")
    before, after = crosscut_number(forest), crosscut_number(tree)
    if before != after:
        raise RuntimeError(f"completion changed the crosscut number: {before} -> {after}")
    return tree


def crosscut_audit(tree: Graph) -> dict:
    """Structural report on the optimal max-|I| crosscut pair of a tree.

    Writing the crosscut number as ell + 1, the audited facts are: at most
    ell/2 uncovered edges, no pendant edge uncovered, and every vertex of
    an uncovered edge has tree-degree at most ell minus the bipartition
    weight of the uncovered forest.
    """
    if not tree.is_tree() or not tree.edges:
        raise ValueError("audit requires a tree with at least one edge")
    pair = best_crosscut_pair(tree)
    sigma = pair.weight
    ell = sigma - 1
    r_edges = sorted(pair.uncovered)
    r_graph = Graph(tree.n, pair.uncovered)
    lam = forest_lambda(r_graph)

    checks = []
    checks.append({
        "name": "uncovered_edge_count",
        "pass": len(r_edges) <= ell / 2,
        "detail": f"|R| = {len(r_edges)}, bound ell/2 = {ell / 2}",
    })
    pendant_hits = sorted(pair.uncovered & tree.pendant_edges())
    checks.append({
        "name": "no_pendant_uncovered",
        "pass": not pendant_hits,
        "detail": "R avoids all pendant edges" if not pendant_hits
                  else f"pendant edges uncovered: {pendant_hits}",
    })
    r_vertices = sorted({v for e in r_edges for v in e})
    degree_bound = ell - lam
    offenders = [v for v in r_vertices if tree.degree(v) > degree_bound]
    checks.append({
        "name": "uncovered_degree_bound",
        "pass": not offenders,
        "detail": f"max tree-degree on R vertices "
                  f"{max((tree.degree(v) for v in r_vertices), default=0)}, "
                  f"bound ell - lambda = {degree_bound}" if r_vertices
                  else "R is empty; bound is vacuous",
    })
    return {
        "sigma": sigma,
        "I": sorted(pair.independent),
        "R": [list(e) for e in r_edges],
        "lambda": lam,
        "checks": checks,
    }
