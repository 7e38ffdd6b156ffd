"""Cleaning steps used before any counting argument: dense full subgraphs,
sunflowers, greedy selection from augmented families, and biclique mining
under list constraints."""

from itertools import combinations

from expansions import (AugmentedFamily, Graph, SetFamily, TripleSystem,
                        find_biclique_avoiding_lists, find_sunflower,
                        full_subgraph, sunflower_threshold,
                        select_disjoint_augmented)

# a dense core (all triples on five vertices) plus three stray triples;
# with d = 2 every stray pair appears once, so the strays are peeled off
# while the core keeps every pair in exactly three triples
core = [tuple(t) for t in combinations(range(5), 3)]
strays = [(0, 5, 6), (1, 5, 7), (2, 6, 7)]
host = TripleSystem.from_edges(8, core + strays)
kept = full_subgraph(host, d=2)
print("host size:", len(host.sorted_edges()))
print("3-full subgraph size:", len(kept.sorted_edges()))
print("minimum surviving pair count:", min(kept.pair_counts.values()))

# enough distinct sets of bounded size always contain a sunflower
print("\nsunflower thresholds (set size k, petals) -> family size:")
for k in (2, 3):
    for s in (2, 3):
        print(f"  ({k}, {s}) ->", sunflower_threshold(k, s))

family = SetFamily.from_sets(
    [{0, 1}, {0, 2}, {0, 3}, {1, 2}, {4, 5}, {6, 7}, {8, 9}, {2, 3}])
flower = find_sunflower(family, petal_count=3)
print("sunflower petals (indices):", flower.petals, "core:", sorted(flower.core))
print("petal sets:", [sorted(family.sets[i]) for i in flower.petals])

# pairwise disjoint base sets, each tagged with an anchor element; the
# anchors here chain into the next base set, so the conflict graph is a path
pairs = [({i, i + 1}, i + 2) for i in range(0, 18, 2)]
fam = AugmentedFamily.from_pairs(pairs)
chosen = select_disjoint_augmented(fam)
print("\naugmented family of", len(fam), "members; kept indices:", chosen)
print("a third of the family is always reachable:", 3 * len(chosen) >= len(fam))

# biclique whose grid pairs all carry lists, with every list forced to
# avoid the biclique itself
grid = Graph.from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
host2 = TripleSystem.from_edges(8, [(0, 2, 4), (0, 3, 5), (1, 2, 6), (1, 3, 7)])
lists = {e: frozenset({4, 5}) for e in grid.sorted_edges()}
found = find_biclique_avoiding_lists(grid, lists, t=2, host=host2)
print("\nbiclique sides:", tuple(sorted(s) for s in found))

# putting a grid vertex into one list blocks that column
lists[(0, 2)] = frozenset({2, 4})
print("after poisoning one list:", find_biclique_avoiding_lists(grid, lists, t=2, host=host2))
