"""Tour of expansions and crosscuts: from a graph to its triple system,
then down to the numbers that control extremal counts."""

from expansions import (Graph, best_crosscut_pair, complete_forest_to_tree,
                        crosscut_audit, crosscut_number, expand, forest_lambda,
                        min_crosscut, tree_lambda, trees)

# a path with four edges
path = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
exp = expand(path)
print("base edges:", path.sorted_edges())
print("expansion triples:", exp.system.sorted_edges())
print("enlargement vertices:", exp.enlargement)

# the crosscut number measured two ways: once on the triple system, once
# through the independent-set formula on the base graph
size, witness = min_crosscut(exp.system)
print("\nhypergraph crosscut:", size, "witness", sorted(witness))
pair = best_crosscut_pair(path)
print("graph-side optimal pair: I =", sorted(pair.independent),
      "uncovered =", sorted(pair.uncovered), "weight =", pair.weight)

print("\nsigma for stars is always 1 (the center covers everything):")
for k in (2, 3, 4, 5):
    star = Graph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])
    print(f"  star with {k} leaves:", crosscut_number(star))

# lambda weighs the smaller bipartition side, with a discount for leaves
star3 = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
print("\nlambda of the 3-leaf star:", tree_lambda(star3))
print("lambda of the 4-edge path:", tree_lambda(path))

forest = Graph.from_edges(7, [(0, 1), (2, 3), (3, 4)])
print("\nforest lambda (componentwise):", forest_lambda(forest))
tree = complete_forest_to_tree(forest)
print("completed to a tree:", tree.sorted_edges())
print("sigma before and after:", crosscut_number(forest), crosscut_number(tree))

# the audit bundles the structural facts about an optimal pair of a tree
print("\naudit of a 6-vertex caterpillar:")
caterpillar = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (1, 4), (2, 5)])
report = crosscut_audit(caterpillar)
print("  sigma =", report["sigma"], " I =", report["I"], " R =", report["R"])
for check in report["checks"]:
    print(f"  {check['name']}: {'ok' if check['pass'] else 'VIOLATED'} -", check["detail"])

print("\ncrosscut numbers across all trees on 7 vertices:")
for t in trees(7):
    print(" ", t.sorted_edges(), "->", crosscut_number(t))
