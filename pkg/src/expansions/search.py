"""Exact containment search and small-instance Turan numbers.

Containment means a copy: an injective vertex map sending every edge of
the pattern onto an edge of the host.  The Turan routine maximizes the
edge count of a host on n vertices avoiding such a copy, by lexicographic
include/exclude branching over all triples with an optimistic-count
prune.  Budgets turn the answer into a flagged lower bound, never a
silently wrong exact value.

The audit helpers compare the guaranteed construction (all triples
meeting a small core exactly once) against exact counts where feasible.
Every ratio they emit is a finite-n observation, deliberately so; nothing
here extrapolates to asymptotics.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable

from .core import Graph, Triple, TripleSystem, canonical_triple
from .crosscuts import crosscut_number, expand


@dataclass(frozen=True)
class EmbeddingCertificate:
    """Injective vertex map witnessing a copy of a pattern in a host."""

    mapping: dict[int, int]
    kind: str

    def check(self, host: TripleSystem, pattern: TripleSystem) -> bool:
        values = list(self.mapping.values())
        if len(set(values)) != len(values):
            return False
        if set(self.mapping) != set(range(pattern.n)):
            return False
        if not all(0 <= h < host.n for h in values):
            return False
        return all(
            canonical_triple(*(self.mapping[v] for v in e)) in host.edges
            for e in pattern.edges
        )


def contains(host: TripleSystem, pattern: TripleSystem) -> EmbeddingCertificate | None:
    """First copy of the pattern in the host, or None (exact).

    Support vertices are placed in descending pattern-degree order; a
    pattern edge is checked the moment its last vertex is placed, and
    host vertices of insufficient degree are never tried.  Pattern
    vertices outside any edge only need distinct images, assigned at the
    end from the smallest unused host vertices.
    """
    if pattern.n > host.n:
        return None
    pattern_edges = pattern.sorted_edges()
    if not pattern_edges:
        return EmbeddingCertificate({v: v for v in range(pattern.n)}, "generic")

    pat_degree = {v: 0 for v in range(pattern.n)}
    for e in pattern_edges:
        for v in e:
            pat_degree[v] += 1
    support = sorted((v for v in range(pattern.n) if pat_degree[v]),
                     key=lambda v: (-pat_degree[v], v))
    position = {v: i for i, v in enumerate(support)}
    check_at: list[list[Triple]] = [[] for _ in support]
    for e in pattern_edges:
        check_at[max(position[v] for v in e)].append(e)
    host_degree = {h: host.degree(h) for h in range(host.n)}

    mapping: dict[int, int] = {}
    used: set[int] = set()

    def walk(i: int) -> bool:
        if i == len(support):
            return True
        v = support[i]
        for h in range(host.n):
            if h in used or host_degree[h] < pat_degree[v]:
                continue
            mapping[v] = h
            used.add(h)
            if all(canonical_triple(*(mapping[x] for x in e)) in host.edges
                   for e in check_at[i]) and walk(i + 1):
                return True
            used.remove(h)
            del mapping[v]
        return False

    if not walk(0):
        return None
    spare = (h for h in range(host.n) if h not in used)
    for v in range(pattern.n):
        if v not in mapping:
            mapping[v] = next(spare)
    return EmbeddingCertificate(mapping, "generic")


def contains_expansion(host: TripleSystem, base: Graph) -> EmbeddingCertificate | None:
    """Copy of the expansion of a graph in the host, or None (exact).

    Equivalent to contains(host, expand(base).system) but exploits the
    expansion shape: first embed the base graph into the host shadow,
    pruning on empty third-vertex pools, then assign distinct enlargement
    vertices by augmenting-path matching between base edges and pools.
    """
    exp = expand(base)
    if exp.system.n > host.n:
        return None
    base_edges = base.sorted_edges()
    if not base_edges:
        cert = contains(host, exp.system)
        return None if cert is None else EmbeddingCertificate(cert.mapping, "expansion")

    hoods = host.pair_neighborhoods
    support = sorted((v for v in range(base.n) if base.degree(v)),
                     key=lambda v: (-base.degree(v), v))
    position = {v: i for i, v in enumerate(support)}
    check_at: list[list[tuple[int, int]]] = [[] for _ in support]
    for e in base_edges:
        check_at[max(position[v] for v in e)].append(e)

    mapping: dict[int, int] = {}
    used: set[int] = set()

    def pool(e) -> frozenset[int]:
        u, v = mapping[e[0]], mapping[e[1]]
        key = (u, v) if u < v else (v, u)
        return hoods.get(key, frozenset())

    def match_thirds() -> dict[tuple[int, int], int] | None:
        owner: dict[int, tuple[int, int]] = {}

        def augment(e, visited: set[int]) -> bool:
            for w in sorted(pool(e) - used):
                if w not in visited:
                    visited.add(w)
                    if w not in owner or augment(owner[w], visited):
                        owner[w] = e
                        return True
            return False

        for e in base_edges:
            if not augment(e, set()):
                return None
        return {e: w for w, e in owner.items()}

    def walk(i: int) -> bool:
        if i == len(support):
            return match_thirds() is not None
        v = support[i]
        for h in range(host.n):
            if h in used:
                continue
            mapping[v] = h
            used.add(h)
            if all(pool(e) - used for e in check_at[i]) and walk(i + 1):
                return True
            used.remove(h)
            del mapping[v]
        return False

    if not walk(0):
        return None
    thirds = match_thirds()
    full = dict(mapping)
    for e, w in thirds.items():
        full[exp.enlargement[e]] = w
    taken = set(full.values())
    spare = (h for h in range(host.n) if h not in taken)
    for v in range(base.n):
        if v not in full:
            full[v] = next(spare)
    return EmbeddingCertificate(full, "expansion")


def graph_contains(host: Graph, pattern: Graph) -> bool:
    """Copy of a graph pattern inside a graph host (exact, boolean)."""
    if pattern.n > host.n:
        return False
    pattern_edges = pattern.sorted_edges()
    if not pattern_edges:
        return True
    support = sorted((v for v in range(pattern.n) if pattern.degree(v)),
                     key=lambda v: (-pattern.degree(v), v))
    position = {v: i for i, v in enumerate(support)}
    check_at: list[list[tuple[int, int]]] = [[] for _ in support]
    for e in pattern_edges:
        check_at[max(position[v] for v in e)].append(e)
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def walk(i: int) -> bool:
        if i == len(support):
            return True
        v = support[i]
        for h in range(host.n):
            if h in used or host.degree(h) < pattern.degree(v):
                continue
            mapping[v] = h
            used.add(h)
            if all(mapping[b] in host.adjacency[mapping[a]] for a, b in check_at[i]) \
                    and walk(i + 1):
                return True
            used.remove(h)
            del mapping[v]
        return False

    return walk(0)


def lower_bound_construction(n: int, core_size: int) -> TripleSystem:
    """All triples meeting the core {0..core_size-1} in exactly one vertex.

    Any copy of a pattern inside it yields a crosscut of the pattern of
    size at most the core, so patterns whose expansions have a larger
    crosscut number never embed.  Edge count: core_size * C(n-core_size, 2).
    """
    if not (0 <= core_size <= n):
        raise ValueError("core size must be between 0 and n")
    triples = []
    for c in range(core_size):
        for x, y in combinations(range(core_size, n), 2):
            triples.append(canonical_triple(c, x, y))
    return TripleSystem(n, frozenset(triples))


@dataclass(frozen=True)
class TuranResult:
    """Outcome of the forbidden-pattern edge-maximization search."""

    n: int
    value: int
    exact: bool
    witness: tuple[Triple, ...]
    method: str
    nodes: int

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "value": self.value,
            "exact": self.exact,
            "witness": [list(e) for e in self.witness],
            "method": self.method,
            "nodes": self.nodes,
        }


def _pattern_copies(pattern: TripleSystem, n: int) -> list[frozenset[Triple]]:
    """Edge sets of all copies of the pattern inside the complete triple
    system on n vertices (deduplicated over automorphisms)."""
    if pattern.n > n:
        return []
    pattern_edges = pattern.sorted_edges()
    if not pattern_edges:
        return [frozenset()]
    support = sorted({v for e in pattern_edges for v in e})
    position = {v: i for i, v in enumerate(support)}
    check_order: list[list[Triple]] = [[] for _ in support]
    for e in pattern_edges:
        check_order[max(position[v] for v in e)].append(e)

    copies: set[frozenset[Triple]] = set()
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def walk(i: int):
        if i == len(support):
            copies.add(frozenset(
                canonical_triple(*(mapping[v] for v in e)) for e in pattern_edges))
            return
        v = support[i]
        for h in range(n):
            if h not in used:
                mapping[v] = h
                used.add(h)
                walk(i + 1)
                used.remove(h)
                del mapping[v]

    walk(0)
    return sorted(copies, key=sorted)


class _SearchBudget:
    def __init__(self, budget_ms: int | None, budget_nodes: int | None):
        self.deadline = None if budget_ms is None else time.monotonic() + budget_ms / 1000.0
        self.node_cap = budget_nodes
        self.nodes = 0

    def spend(self) -> bool:
        """Count a node; False once the budget is gone."""
        self.nodes += 1
        if self.node_cap is not None and self.nodes > self.node_cap:
            return False
        if self.deadline is not None and self.nodes % 1024 == 0 \
                and time.monotonic() > self.deadline:
            return False
        return True


def turan_number(
    n: int,
    forbidden: TripleSystem,
    budget_ms: int | None = None,
    budget_nodes: int | None = None,
) -> TuranResult:
    """Maximum edges of a triple system on n vertices with no copy of the
    forbidden pattern.

    Lexicographic include-first branching over all C(n, 3) triples.  A
    branch dies when even taking every remaining triple cannot beat the
    incumbent, and a triple is never included if it completes a copy.  On
    budget exhaustion the incumbent is returned with exact=False: a valid
    lower bound, witnessed, but possibly not maximal.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    all_triples = list(combinations(range(n), 3))
    copies = _pattern_copies(forbidden, n)
    if any(len(c) == 0 for c in copies):
        raise ValueError("an edgeless pattern that fits is contained in every host")
    if not copies:
        witness = tuple(all_triples)
        return TuranResult(n, len(witness), True, witness, "branch-and-bound", 0)

    copies_at: dict[Triple, list[int]] = {t: [] for t in all_triples}
    for idx, copy in enumerate(copies):
        for t in copy:
            copies_at[t].append(idx)
    copy_sizes = [len(c) for c in copies]
    hits = [0] * len(copies)
    budget = _SearchBudget(budget_ms, budget_nodes)
    chosen: list[Triple] = []
    best: list[tuple[int, tuple[Triple, ...]]] = [(-1, ())]
    aborted = [False]

    def walk(idx: int):
        if aborted[0]:
            return
        if not budget.spend():
            aborted[0] = True
            return
        if len(chosen) > best[0][0]:
            best[0] = (len(chosen), tuple(chosen))
        if idx == len(all_triples):
            return
        if len(chosen) + (len(all_triples) - idx) <= best[0][0]:
            return
        t = all_triples[idx]
        if all(hits[c] < copy_sizes[c] - 1 for c in copies_at[t]):
            for c in copies_at[t]:
                hits[c] += 1
            chosen.append(t)
            walk(idx + 1)
            chosen.pop()
            for c in copies_at[t]:
                hits[c] -= 1
        walk(idx + 1)

    walk(0)
    value, witness = best[0]
    system = TripleSystem(n, frozenset(witness))
    if contains(system, forbidden) is not None:
        raise RuntimeError("search produced a witness containing the forbidden pattern")
    return TuranResult(n, value, not aborted[0], witness, "branch-and-bound", budget.nodes)


def audit_forest_bound(
    forest: Graph,
    ns: Iterable[int],
    budget_ms: int | None = None,
    budget_nodes: int | None = None,
    exact_max_n: int = 6,
) -> dict:
    """Compare the one-core-vertex construction against exact counts.

    Per n: the guaranteed edge count (sigma - 1) * C(n - sigma + 1, 2),
    the construction itself with an exact freeness check, and, for n up
    to exact_max_n, the exact maximum with the ratio to C(n, 2) scaled by
    sigma - 1.  Ratios are finite-n observations only.
    """
    if not forest.is_forest():
        raise ValueError("audit expects a forest")
    sigma = crosscut_number(forest)
    core = sigma - 1
    rows = []
    for n in sorted(set(ns)):
        row: dict = {"n": n}
        if core > n:
            row["note"] = "core exceeds n; construction undefined"
            rows.append(row)
            continue
        bound = core * comb(n - core, 2)
        construction = lower_bound_construction(n, core)
        row["bound"] = bound
        row["construction_edges"] = len(construction.edges)
        row["count_matches"] = len(construction.edges) == bound
        row["free"] = contains_expansion(construction, forest) is None
        if n <= exact_max_n:
            result = turan_number(n, expand(forest).system, budget_ms, budget_nodes)
            row["turan"] = {"value": result.value, "exact": result.exact}
            denom = core * comb(n, 2)
            row["ratio"] = result.value / denom if denom else None
        else:
            row["turan"] = None
            row["ratio"] = None
        rows.append(row)
    return {
        "sigma": sigma,
        "core_size": core,
        "note": "descriptive finite-n ratios; no asymptotic claim",
        "rows": rows,
    }


def _star_plus_edge(k: int) -> Graph:
    edges = [(0, i) for i in range(1, k)]
    if k >= 3:
        edges.append((1, 2))
    return Graph.from_edges(k, edges)


def _complete_bipartite_two(k: int) -> Graph:
    edges = [(a, b) for a in (0, 1) for b in range(2, k)]
    return Graph.from_edges(k, edges)


def audit_sigma_jump(graph: Graph, n: int) -> dict:
    """Construction dictated by the crosscut number of the expansion.

    Crosscut number at least 3 activates the two-vertex core; exactly 2
    activates the one-vertex core (a full star of triples).  In the
    latter case the report also records, as plain containment data,
    whether the graph sits inside the star-plus-one-edge graph or inside
    the complete bipartite graph with a side of two.
    """
    sigma = crosscut_number(graph)
    report: dict = {
        "sigma": sigma,
        "n": n,
        "note": "descriptive finite-n report; no asymptotic claim",
    }
    if sigma >= 3:
        construction = lower_bound_construction(n, 2)
        report["construction"] = "two-vertex core"
        report["edges"] = len(construction.edges)
        report["expected_edges"] = 2 * comb(n - 2, 2)
        report["free"] = contains_expansion(construction, graph) is None
    elif sigma == 2:
        construction = lower_bound_construction(n, 1)
        report["construction"] = "one-vertex core (star of triples)"
        report["edges"] = len(construction.edges)
        report["expected_edges"] = comb(n - 1, 2)
        report["free"] = contains_expansion(construction, graph) is None
        k = graph.n
        report["shape"] = {
            "in_star_plus_edge": graph_contains(_star_plus_edge(k), graph),
            "in_complete_bipartite_two": graph_contains(_complete_bipartite_two(k), graph)
            if k >= 2 else False,
        }
    else:
        report["construction"] = None
        report["detail"] = "expansion has a crosscut of size at most 1; no core construction"
    return report
