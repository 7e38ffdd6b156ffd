"""Forbidden-pattern edge maximization: containment certificates, the
core construction, exact small-n maxima, and the audits tying them to
crosscut numbers."""

from expansions import (Graph, TripleSystem, audit_forest_bound,
                        audit_sigma_jump, contains, contains_expansion,
                        crosscut_number, expand, lower_bound_construction,
                        triple_trees, turan_number)

# containment of one triple system in another, with a checkable witness
host = TripleSystem.from_edges(5, [(0, 1, 2), (0, 3, 4), (1, 3, 4)])
loose_pair = TripleSystem.from_edges(5, [(0, 1, 2), (2, 3, 4)])
cert = contains(host, loose_pair)
print("loose pair of triples embeds:", cert.mapping, "valid:", cert.check(host, loose_pair))

# expansions of a graph embed more freely: enlargement vertices only need
# to be distinct and outside the image of the base
path2 = Graph.from_edges(3, [(0, 1), (1, 2)])
cert = contains_expansion(host, path2)
print("expansion of the 2-edge path:", cert.mapping if cert else None)

# the core construction: every triple meets {0..core-1} in one vertex;
# a pattern whose expansion needs a bigger crosscut cannot appear
p4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
print("\ncrosscut number of the 3-edge path:", crosscut_number(p4))
construction = lower_bound_construction(9, core_size=1)
print("one-core construction on 9 vertices has", len(construction.sorted_edges()), "triples")
print("contains expansion of 3-edge path:", contains_expansion(construction, p4) is not None)
print("contains expansion of 2-edge path:", contains_expansion(construction, path2) is not None)

# exact maxima for small hosts
forbidden = expand(path2).system
for n in (4, 5, 6):
    result = turan_number(n, forbidden)
    print(f"\nmax triples on {n} vertices avoiding the expanded 2-edge path:",
          result.value, "exact:", result.exact)
    print("  witness:", result.witness)

# a starved budget still returns a usable lower bound, flagged inexact
partial = turan_number(6, forbidden, budget_nodes=10)
print("\nbudget_nodes=10 run:", partial.value, "exact:", partial.exact,
      "nodes:", partial.nodes)

# the audit compares the construction's guarantee with the observed exact
# values over a range of n
report = audit_forest_bound(path2, ns=range(4, 8))
print("\nforest bound audit: sigma =", report["sigma"], " core =", report["core_size"])
for row in report["rows"]:
    exact = row["turan"]["value"] if row["turan"] else "-"
    print(f"  n={row['n']}: bound {row['bound']}, construction free: {row['free']}, exact: {exact}")
print(" ", report["note"])

# how the construction changes as the crosscut number steps up
star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
two_paths = Graph.from_edges(8, [(0, 1), (1, 2), (2, 3), (4, 5), (5, 6), (6, 7)])
for g, name in ((star, "3-leaf star"), (p4, "3-edge path"), (two_paths, "two disjoint paths")):
    rep = audit_sigma_jump(g, n=8)
    print(f"\n{name}: sigma={rep['sigma']}, construction: {rep['construction']}")
    if "shape" in rep:
        print("  shape data:", rep["shape"])

# triple trees: grown one gluing at a time from a single triple; the edge
# count divided by pairs gives a clean per-size ceiling
print("\ntriple trees by vertex count:", {v: len(triple_trees(v)) for v in (3, 4, 5, 6)})
pattern = triple_trees(4)[0]
for n in (4, 5, 6):
    result = turan_number(n, pattern)
    bound = (pattern.n - 3) * n * (n - 1) // 6
    print(f"  4-vertex triple tree, n={n}: max {result.value}, conjectured ceiling {bound}")
