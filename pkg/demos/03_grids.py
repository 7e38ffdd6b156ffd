"""Colored bipartite grids: the four structured labels, finding labeled
subgrids, and list colorings pulled from a triple system."""

from itertools import combinations

from expansions import (GridColoring, TripleSystem, build_list_assignment,
                        classify, extract_multicoloring,
                        find_classified_subgrid,
                        find_structured_multicoloring)

# the labels on a 2x2 grid, one example each
rows, cols = (0, 1), (2, 3)
examples = {
    "constant":      {(0, 2): 5, (0, 3): 5, (1, 2): 5, (1, 3): 5},
    "all distinct":  {(0, 2): 5, (0, 3): 6, (1, 2): 7, (1, 3): 8},
    "constant rows": {(0, 2): 5, (0, 3): 5, (1, 2): 6, (1, 3): 6},
    "constant cols": {(0, 2): 5, (0, 3): 6, (1, 2): 5, (1, 3): 6},
    "unstructured":  {(0, 2): 5, (0, 3): 5, (1, 2): 5, (1, 3): 6},
}
for name, colors in examples.items():
    labels = classify(GridColoring(rows, cols, colors))
    print(f"{name:14s} -> {sorted(labels)}")

# a 3x3 two-coloring with no labeled 2x2 subgrid at all; at 4x4 every
# two-coloring carries one
bits = [[0, 0, 1], [0, 1, 0], [1, 0, 0]]
colors = {(x, y + 3): bits[x][y] for x in range(3) for y in range(3)}
grid3 = GridColoring((0, 1, 2), (3, 4, 5), colors)
print("\n3x3 evasive coloring, labeled 2x2 subgrid:",
      find_classified_subgrid(grid3, s=2))

# on a 4x4 grid every 2-coloring has one; spot check a few
hit = 0
for mask in range(0, 2 ** 16, 997):
    colors = {(x, y + 4): (mask >> (4 * x + y)) & 1 for x in range(4) for y in range(4)}
    grid4 = GridColoring((0, 1, 2, 3), (4, 5, 6, 7), colors)
    if find_classified_subgrid(grid4, s=2) is not None:
        hit += 1
print("4x4 colorings sampled:", hit, "of", len(range(0, 2 ** 16, 997)), "had a labeled subgrid")

# list assignments read colors off a host system: the list of a grid pair
# is its set of completing third vertices, minus the grid itself
host = TripleSystem.from_edges(8, [tuple(t) for t in combinations(range(8), 3)])
assignment = build_list_assignment(host, rows=(0, 1), cols=(2, 3))
print("\nlists over the complete host on 8 vertices:")
for cell in assignment.cells():
    print(" ", cell, "->", sorted(assignment.lists[cell]))

multi = extract_multicoloring(assignment, m=2)
print("two rounds, distinct colors per cell:", multi.check(assignment))
for i, chi in enumerate(multi.colorings):
    print(f"  round {i}:", {c: chi[c] for c in sorted(chi)})

# the structured search prefers a rainbow subgrid; these lists have four
# colors per cell, enough for one
out = find_structured_multicoloring(assignment, m=2, s=2)
print("\nstructured search:", out.status, "labels:", out.labels, "nodes:", out.nodes)

# starve the lists down to a single shared color and only stacked
# monochromatic rounds remain, so asking for m = 2 disjoint rounds fails
slim = TripleSystem.from_edges(5, [(0, 2, 4), (0, 3, 4), (1, 2, 4), (1, 3, 4)])
tight = build_list_assignment(slim, rows=(0, 1), cols=(2, 3))
print("single-color lists, m=1:",
      find_structured_multicoloring(tight, m=1, s=2).status)
print("single-color lists, m=2:",
      find_structured_multicoloring(tight, m=2, s=2).status)

# a tiny node budget reports exhaustion instead of a wrong "absent"
out = find_structured_multicoloring(tight, m=2, s=2, budget_nodes=2)
print("with budget_nodes=2:", out.status, "after", out.nodes, "nodes")
