"""Simple graphs and 3-uniform triple systems on integer vertices.

Vertices are always 0..n-1 with n stored explicitly, so isolated vertices
are representable.  Graph edges are canonical pairs (u, v) with u < v and
triples are canonical sorted 3-tuples.  Both containers are immutable;
derived structures (adjacency, codegree tables) are cached on first use.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable

Edge = tuple[int, int]
Triple = tuple[int, int, int]


def canonical_edge(u: int, v: int) -> Edge:
    if u == v:
        raise ValueError(f"loop edge on vertex {u}")
    return (u, v) if u < v else (v, u)


def canonical_triple(u: int, v: int, w: int) -> Triple:
    if u == v or u == w or v == w:
        raise ValueError(f"triple with repeated vertex: {(u, v, w)}")
    a, b, c = sorted((u, v, w))
    return (a, b, c)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; edges are canonical (u, v) pairs with u < v."""

    n: int
    edges: frozenset[Edge]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        for e in self.edges:
            if len(e) != 2 or not (0 <= e[0] < e[1] < self.n):
                raise ValueError(f"bad edge {e} for n={self.n}")

    @staticmethod
    def from_edges(n: int, pairs: Iterable[Iterable[int]]) -> "Graph":
        return Graph(n, frozenset(canonical_edge(*pair) for pair in pairs))

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        adj: dict[int, set[int]] = {v: set() for v in range(self.n)}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(nb) for v, nb in adj.items()}

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def components(self) -> list[frozenset[int]]:
        """Connected components, ordered by smallest member."""
        seen: set[int] = set()
        comps = []
        for start in range(self.n):
            if start in seen:
                continue
            stack, comp = [start], {start}
            seen.add(start)
            while stack:
                v = stack.pop()
                for u in self.adjacency[v]:
                    if u not in comp:
                        comp.add(u)
                        seen.add(u)
                        stack.append(u)
            comps.append(frozenset(comp))
        return comps

    def is_forest(self) -> bool:
        return len(self.edges) == self.n - len(self.components())

    def is_tree(self) -> bool:
        return self.n > 0 and len(self.edges) == self.n - 1 and len(self.components()) == 1

    def leaves(self) -> frozenset[int]:
        return frozenset(v for v in range(self.n) if self.degree(v) == 1)

    def pendant_edges(self) -> frozenset[Edge]:
        """Edges with at least one endpoint of degree 1."""
        return frozenset(e for e in self.edges if self.degree(e[0]) == 1 or self.degree(e[1]) == 1)


@dataclass(frozen=True)
class TripleSystem:
    """3-uniform set system; edges are canonical sorted triples."""

    n: int
    edges: frozenset[Triple]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        for e in self.edges:
            if len(e) != 3 or not (0 <= e[0] < e[1] < e[2] < self.n):
                raise ValueError(f"bad triple {e} for n={self.n}")

    @staticmethod
    def from_edges(n: int, triples: Iterable[Iterable[int]]) -> "TripleSystem":
        return TripleSystem(n, frozenset(canonical_triple(*t) for t in triples))

    @cached_property
    def pair_counts(self) -> dict[Edge, int]:
        # codegree of every pair that lies in at least one triple
        counts: dict[Edge, int] = {}
        for e in self.edges:
            for pair in combinations(e, 2):
                counts[pair] = counts.get(pair, 0) + 1
        return counts

    @cached_property
    def pair_neighborhoods(self) -> dict[Edge, frozenset[int]]:
        hoods: dict[Edge, set[int]] = {}
        for a, b, c in self.edges:
            hoods.setdefault((a, b), set()).add(c)
            hoods.setdefault((a, c), set()).add(b)
            hoods.setdefault((b, c), set()).add(a)
        return {pair: frozenset(s) for pair, s in hoods.items()}

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def sorted_edges(self) -> list[Triple]:
        return sorted(self.edges)


def shadow(system: TripleSystem) -> Graph:
    """The graph of pairs covered by at least one triple."""
    return Graph(system.n, frozenset(system.pair_counts))


def codegree(system: TripleSystem, x: int, y: int) -> int:
    """Number of triples containing both x and y.  Rejects x == y."""
    if x == y:
        raise ValueError("codegree requires two distinct vertices")
    for v in (x, y):
        if not (0 <= v < system.n):
            raise ValueError(f"vertex {v} out of range for n={system.n}")
    return system.pair_counts.get(canonical_edge(x, y), 0)


def neighborhood(system: TripleSystem, pair: Iterable[int]) -> frozenset[int]:
    """Third vertices completing the pair to a triple of the system."""
    pair = tuple(pair)
    if len(set(pair)) != 2:
        raise ValueError(f"neighborhood requires a set of exactly two vertices, got {pair}")
    return system.pair_neighborhoods.get(canonical_edge(*pair), frozenset())


def edge_codegree_extremes(system: TripleSystem, edge: Iterable[int]) -> tuple[int, int]:
    """(min, max) codegree over the three vertex pairs of an edge of the system."""
    e = canonical_triple(*edge)
    if e not in system.edges:
        raise ValueError(f"{e} is not an edge of the system")
    degs = [system.pair_counts[pair] for pair in combinations(e, 2)]
    return (min(degs), max(degs))


def remove_vertices(system: TripleSystem, xs: Iterable[int]) -> TripleSystem:
    """Subsystem of edges disjoint from xs; the vertex range is kept."""
    mark = set(xs)
    for v in mark:
        if not (0 <= v < system.n):
            raise ValueError(f"vertex {v} out of range for n={system.n}")
    return TripleSystem(system.n, frozenset(e for e in system.edges if not mark.intersection(e)))


def is_linear(system: TripleSystem) -> bool:
    """True when every pair of vertices lies in at most one triple."""
    return all(c <= 1 for c in system.pair_counts.values())
