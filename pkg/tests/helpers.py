"""Independent oracles used across the test suite.

Everything here recomputes results from definitions by brute force, with
no calls into the package's search code, so agreement is meaningful.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations

from expansions import Graph, TripleSystem


# ------------------------------------------------------------ labeled trees

def labeled_trees(n: int):
    """All labeled trees on 0..n-1, decoded from their sequences (n >= 2)."""
    if n == 2:
        yield ((0, 1),)
        return
    for seq in permutations_with_repetition(range(n), n - 2):
        yield prufer_decode(n, seq)


def permutations_with_repetition(pool, length):
    if length == 0:
        yield ()
        return
    for head in pool:
        for tail in permutations_with_repetition(pool, length - 1):
            yield (head,) + tail


def prufer_decode(n: int, seq) -> tuple:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(v for v in range(n) if degree[v] == 1)
        edges.append((min(leaf, x), max(leaf, x)))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [w for w in range(n) if degree[w] == 1]
    edges.append((u, v))
    return tuple(sorted(edges))


def ahu_form(n: int, edges) -> str:
    """Canonical string of an unlabeled tree: encode rooted at each center,
    take the smaller."""
    if n == 1:
        return "()"
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    # strip leaves layer by layer; survivors are the 1 or 2 centers
    degree = {v: len(adj[v]) for v in range(n)}
    alive = set(range(n))
    layer = [v for v in alive if degree[v] <= 1]
    while len(alive) > 2:
        nxt = []
        for v in layer:
            alive.discard(v)
            for u in adj[v]:
                if u in alive:
                    degree[u] -= 1
                    if degree[u] == 1:
                        nxt.append(u)
        layer = nxt

    def encode(v, parent):
        kids = sorted(encode(u, v) for u in adj[v] if u != parent)
        return "(" + "".join(kids) + ")"

    return min(encode(c, None) for c in alive)


# ------------------------------------------------------- crosscut oracles

def brute_sigma(graph: Graph) -> int:
    """min |I| + #edges-disjoint-from-I over all independent I, by subsets."""
    best = len(graph.edges)  # I empty leaves every edge uncovered
    vertices = list(range(graph.n))
    for r in range(1, graph.n + 1):
        for subset in combinations(vertices, r):
            inside = set(subset)
            if any(u in inside and v in inside for u, v in graph.edges):
                continue
            uncovered = sum(1 for u, v in graph.edges if u not in inside and v not in inside)
            best = min(best, len(subset) + uncovered)
    return best


def brute_optimal_pairs(graph: Graph):
    """All (I, weight) with minimum weight, for tie-break checks."""
    sigma = brute_sigma(graph)
    out = []
    for r in range(0, graph.n + 1):
        for subset in combinations(range(graph.n), r):
            inside = set(subset)
            if any(u in inside and v in inside for u, v in graph.edges):
                continue
            uncovered = sum(1 for u, v in graph.edges if u not in inside and v not in inside)
            if len(subset) + uncovered == sigma:
                out.append(frozenset(subset))
    return sigma, out


def brute_min_crosscut(system: TripleSystem):
    """Smallest set meeting every triple exactly once, by subset scan."""
    edges = sorted(system.edges)
    if not edges:
        return (0, frozenset())
    for r in range(1, system.n + 1):
        for subset in combinations(range(system.n), r):
            inside = set(subset)
            if all(len(inside.intersection(e)) == 1 for e in edges):
                return (r, frozenset(subset))
    return None


def brute_lambda_tree(graph: Graph, component) -> int:
    """Definition restated: smaller bipartition part, minus one if it holds a leaf."""
    comp = sorted(component)
    if len(comp) == 1:
        return 0
    side = {comp[0]: 0}
    frontier = [comp[0]]
    while frontier:
        v = frontier.pop()
        for u in graph.adjacency[v]:
            if u not in side:
                side[u] = 1 - side[v]
                frontier.append(u)
    parts = [sorted(v for v in comp if side[v] == i) for i in (0, 1)]
    parts.sort(key=len)
    candidates = [parts[0]] if len(parts[0]) < len(parts[1]) else parts
    best = None
    for part in candidates:
        has_leaf = any(graph.degree(v) == 1 for v in part)
        value = len(part) - 1 if has_leaf else len(part)
        best = value if best is None else min(best, value)
    return best


# ---------------------------------------------------- containment oracles

def brute_contains(host: TripleSystem, pattern: TripleSystem) -> bool:
    """Injective map over all vertex arrangements; no pruning."""
    if pattern.n > host.n:
        return False
    pat_edges = sorted(pattern.edges)
    for image in permutations(range(host.n), pattern.n):
        if all(tuple(sorted((image[a], image[b], image[c]))) in host.edges
               for a, b, c in pat_edges):
            return True
    return False


def brute_turan(n: int, pattern: TripleSystem):
    """Exhaust every subfamily of the complete triple system; returns
    (value, all maximum witnesses as sorted tuples)."""
    triples = list(combinations(range(n), 3))
    best, witnesses = 0, [()]
    for r in range(1, len(triples) + 1):
        found = []
        for subset in combinations(triples, r):
            host = TripleSystem(n, frozenset(subset))
            if not brute_contains(host, pattern):
                found.append(subset)
        if found:
            best, witnesses = r, found
    return best, witnesses


# ------------------------------------------------------------ grid oracle

def brute_subgrid_labels(colors, xs, ys):
    """Labels recomputed from scratch on the cell matrix."""
    matrix = [[colors[(x, y)] for y in ys] for x in xs]
    flat = [c for row in matrix for c in row]
    labels = set()
    if len(set(flat)) == 1:
        labels.add("monochromatic")
    if len(set(flat)) == len(flat):
        labels.add("rainbow")
    if all(len(set(row)) == 1 for row in matrix):
        firsts = [row[0] for row in matrix]
        if len(set(firsts)) == len(firsts):
            labels.add("row-canonical")
    columns = [[matrix[i][j] for i in range(len(xs))] for j in range(len(ys))]
    if all(len(set(col)) == 1 for col in columns):
        firsts = [col[0] for col in columns]
        if len(set(firsts)) == len(firsts):
            labels.add("column-canonical")
    return frozenset(labels)


# --------------------------------------------------------- random inputs

def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_system(rng: random.Random, n: int, m: int) -> TripleSystem:
    pool = list(combinations(range(n), 3))
    m = min(m, len(pool))
    return TripleSystem(n, frozenset(rng.sample(pool, m)))


def random_forest(rng: random.Random, n: int) -> Graph:
    # random spanning forest: each non-root vertex may attach to an earlier one
    edges = []
    for v in range(1, n):
        if rng.random() < 0.7:
            edges.append((rng.randrange(v), v))
    return Graph.from_edges(n, edges)
