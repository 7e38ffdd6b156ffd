"""Command line interface.

Every capability is exposed as a subcommand; run with no arguments for
the list.  Graph and triple-system files use the text format ("n m"
header plus edge lines) or the JSON mirror when the filename ends in
.json; families, lists, and colorings are JSON only (schemas in the
README).

Common flags: --json for machine output (the human output renders the
same dictionary), --seed (default 0), --budget-ms / --budget-nodes for
the budgeted searches, and --workers (accepted for interface stability;
execution is sequential and results never depend on it).  Environment
variables EXPANSIONS_SEED, EXPANSIONS_BUDGET_MS, EXPANSIONS_BUDGET_NODES
and EXPANSIONS_WORKERS supply defaults when the flag is absent.

Exit codes: 0 success, 1 unknown subcommand (usage printed), 2 invalid
input, 3 budget exhausted (the flagged partial result is still printed).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .core import Graph, TripleSystem, canonical_edge
from .crosscuts import (best_crosscut_pair, complete_forest_to_tree, crosscut_audit,
                        crosscut_number, expand, forest_lambda, min_crosscut)
from .extraction import (AugmentedFamily, SetFamily, find_biclique_avoiding_lists,
                         find_sunflower, full_subgraph, random_list_filter,
                         select_disjoint_augmented)
from .io import graph_to_json_dict, load_graph, load_triples, triples_to_json_dict
from .ramsey import (GridColoring, build_list_assignment, classify,
                     extract_multicoloring, find_classified_subgrid,
                     find_structured_multicoloring)
from .search import (audit_forest_bound, audit_sigma_jump, contains,
                     contains_expansion, lower_bound_construction, turan_number)

ENV_PREFIX = "EXPANSIONS_"
DEFAULT_SEED = 0


def _env_int(name: str) -> int | None:
    raw = os.environ.get(ENV_PREFIX + name)
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{ENV_PREFIX + name} must be an integer, got {raw!r}") from None


def _settings(args) -> dict:
    def pick(flag_value, env_name, fallback):
        if flag_value is not None:
            return flag_value
        env = _env_int(env_name)
        return env if env is not None else fallback

    return {
        "seed": pick(args.seed, "SEED", DEFAULT_SEED),
        "budget_ms": pick(args.budget_ms, "BUDGET_MS", None),
        "budget_nodes": pick(args.budget_nodes, "BUDGET_NODES", None),
        "workers": pick(args.workers, "WORKERS", 1),
    }


def _int_list(raw: str) -> list[int]:
    try:
        return [int(p) for p in raw.split(",") if p.strip() != ""]
    except ValueError:
        raise ValueError(f"expected comma-separated integers, got {raw!r}") from None


def _load_json(path: str):
    with open(path) as fh:
        return json.load(fh)


def _load_set_family(path: str) -> SetFamily:
    obj = _load_json(path)
    if not isinstance(obj, dict) or "sets" not in obj:
        raise ValueError("set family JSON must be an object with 'sets'")
    return SetFamily.from_sets(obj["sets"])


def _load_augmented(path: str) -> AugmentedFamily:
    obj = _load_json(path)
    if not isinstance(obj, dict) or "pairs" not in obj:
        raise ValueError("augmented family JSON must be an object with 'pairs'")
    pairs = []
    for row in obj["pairs"]:
        if not isinstance(row, dict) or "set" not in row or "element" not in row:
            raise ValueError("each pair must be an object with 'set' and 'element'")
        pairs.append((row["set"], row["element"]))
    return AugmentedFamily.from_pairs(pairs)


def _load_lists(path: str) -> dict:
    obj = _load_json(path)
    if not isinstance(obj, dict) or "lists" not in obj:
        raise ValueError("lists JSON must be an object with 'lists'")
    out = {}
    for row in obj["lists"]:
        if not isinstance(row, dict) or "edge" not in row or "set" not in row:
            raise ValueError("each list entry must be an object with 'edge' and 'set'")
        u, v = row["edge"]
        out[canonical_edge(u, v)] = frozenset(row["set"])
    return out


def _load_coloring(path: str) -> GridColoring:
    obj = _load_json(path)
    if not isinstance(obj, dict) or not {"X", "Y", "edges"} <= set(obj):
        raise ValueError("coloring JSON must be an object with 'X', 'Y', 'edges'")
    colors = {}
    for row in obj["edges"]:
        x, y, c = row
        colors[(x, y)] = c
    return GridColoring(tuple(obj["X"]), tuple(obj["Y"]), colors)


# ---------------------------------------------------------------- handlers

def _cmd_expand(args, settings):
    graph = load_graph(args.graph)
    exp = expand(graph)
    out = triples_to_json_dict(exp.system)
    out["enlargement"] = [[u, v, w] for (u, v), w in sorted(exp.enlargement.items())]
    return out, False


def _cmd_sigma(args, settings):
    if (args.graph is None) == (args.triples is None):
        raise ValueError("give exactly one of --graph or --triples")
    if args.graph:
        pair = best_crosscut_pair(load_graph(args.graph))
        return {
            "sigma": pair.weight,
            "I": sorted(pair.independent),
            "R": [list(e) for e in sorted(pair.uncovered)],
        }, False
    found = min_crosscut(load_triples(args.triples))
    if found is None:
        return {"sigma": None, "witness": None}, False
    size, witness = found
    return {"sigma": size, "witness": sorted(witness)}, False


def _cmd_crosscut_audit(args, settings):
    return crosscut_audit(load_graph(args.graph)), False


def _cmd_lambda(args, settings):
    return {"lambda": forest_lambda(load_graph(args.graph))}, False


def _cmd_complete_tree(args, settings):
    tree = complete_forest_to_tree(load_graph(args.graph))
    out = graph_to_json_dict(tree)
    out["sigma"] = crosscut_number(tree)
    return out, False


def _cmd_full_subgraph(args, settings):
    system = load_triples(args.triples)
    result = full_subgraph(system, args.d)
    out = triples_to_json_dict(result)
    out["removed"] = len(system.edges) - len(result.edges)
    return out, False


def _cmd_sunflower(args, settings):
    family = _load_set_family(args.family)
    flower = find_sunflower(family, args.petals)
    if flower is None:
        return {"found": False, "petals": None, "core": None}, False
    return {"found": True, "petals": list(flower.petals), "core": sorted(flower.core)}, False


def _cmd_trim_select(args, settings):
    family = _load_augmented(args.family)
    picked = select_disjoint_augmented(family)
    return {"m": len(family), "selected": picked, "count": len(picked)}, False


def _cmd_biclique(args, settings):
    grid = load_graph(args.grid)
    lists = _load_lists(args.lists)
    host = load_triples(args.host)
    found = None
    if args.prefilter:
        kept, filtered = random_list_filter(grid, lists, settings["seed"])
        if filtered.edges:
            found = find_biclique_avoiding_lists(filtered, lists, args.t, host)
    if found is None:
        found = find_biclique_avoiding_lists(grid, lists, args.t, host)
    if found is None:
        return {"found": False, "X": None, "Y": None}, False
    xs, ys = found
    return {"found": True, "X": sorted(xs), "Y": sorted(ys)}, False


def _cmd_classify(args, settings):
    labels = classify(_load_coloring(args.coloring))
    return {"labels": sorted(labels) if labels else ["none"]}, False


def _cmd_ramsey_subgrid(args, settings):
    coloring = _load_coloring(args.coloring)
    found = find_classified_subgrid(coloring, args.s)
    if found is None:
        return {"found": False, "X": None, "Y": None, "labels": None}, False
    xs, ys, labels = found
    return {"found": True, "X": list(xs), "Y": list(ys), "labels": sorted(labels)}, False


def _lists_payload(assignment):
    return [
        {"edge": [x, y], "set": sorted(assignment.lists[(x, y)])}
        for x in assignment.rows for y in assignment.cols
    ]


def _cmd_lists(args, settings):
    host = load_triples(args.host)
    assignment = build_list_assignment(host, _int_list(args.x), _int_list(args.y))
    return {"X": list(assignment.rows), "Y": list(assignment.cols),
            "lists": _lists_payload(assignment)}, False


def _cmd_multicolor(args, settings):
    host = load_triples(args.host)
    assignment = build_list_assignment(host, _int_list(args.x), _int_list(args.y))
    if args.structured:
        budget = settings["budget_nodes"] if settings["budget_nodes"] is not None else 500_000
        result = find_structured_multicoloring(assignment, args.m, args.s, budget)
        out = {
            "status": result.status,
            "X": list(result.rows) if result.rows else None,
            "Y": list(result.cols) if result.cols else None,
            "labels": list(result.labels) if result.labels else None,
            "colorings": [
                [[x, y, chi[(x, y)]] for (x, y) in sorted(chi)]
                for chi in result.result.colorings
            ] if result.result else None,
            "nodes": result.nodes,
        }
        return out, result.status == "budget-exhausted"
    found = extract_multicoloring(assignment, args.m)
    if found is None:
        return {"found": False, "colorings": None}, False
    return {"found": True, "colorings": [
        [[x, y, chi[(x, y)]] for (x, y) in sorted(chi)] for chi in found.colorings
    ]}, False


def _cmd_contains(args, settings):
    host = load_triples(args.host)
    if (args.pattern is None) == (args.expansion_of is None):
        raise ValueError("give exactly one of --pattern or --expansion-of")
    if args.pattern:
        cert = contains(host, load_triples(args.pattern))
    else:
        cert = contains_expansion(host, load_graph(args.expansion_of))
    if cert is None:
        return {"found": False, "map": None, "kind": None}, False
    return {"found": True,
            "map": [[a, b] for a, b in sorted(cert.mapping.items())],
            "kind": cert.kind}, False


def _cmd_construct(args, settings):
    system = lower_bound_construction(args.n, args.core)
    out = triples_to_json_dict(system)
    out["core_size"] = args.core
    return out, False


def _cmd_turan(args, settings):
    if (args.pattern is None) == (args.expansion_of is None):
        raise ValueError("give exactly one of --pattern or --expansion-of")
    if args.pattern:
        forbidden = load_triples(args.pattern)
    else:
        forbidden = expand(load_graph(args.expansion_of)).system
    result = turan_number(args.n, forbidden,
                          settings["budget_ms"], settings["budget_nodes"])
    return result.as_dict(), not result.exact


def _cmd_audit_theorem1(args, settings):
    forest = load_graph(args.graph)
    report = audit_forest_bound(forest, _int_list(args.n_list),
                                settings["budget_ms"], settings["budget_nodes"])
    return report, False


def _cmd_audit_jump(args, settings):
    return audit_sigma_jump(load_graph(args.graph), args.n), False


# ------------------------------------------------------------------ wiring

def _add_common(parser):
    parser.add_argument("--json", action="store_true", help="emit JSON instead of text")
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--budget-ms", type=int, default=None)
    parser.add_argument("--budget-nodes", type=int, default=None)
    parser.add_argument("--workers", type=int, default=None)


COMMANDS: dict[str, tuple] = {}


def _register(name, help_text, configure, handler):
    COMMANDS[name] = (help_text, configure, handler)


_register("expand", "expansion triple system of a graph",
          lambda p: p.add_argument("--graph", required=True), _cmd_expand)
_register("sigma", "minimum crosscut of a triple system or of a graph expansion",
          lambda p: (p.add_argument("--graph"), p.add_argument("--triples")), _cmd_sigma)
_register("crosscut-audit", "structural checks on the optimal crosscut pair of a tree",
          lambda p: p.add_argument("--graph", required=True), _cmd_crosscut_audit)
_register("lambda", "bipartition weight of a forest",
          lambda p: p.add_argument("--graph", required=True), _cmd_lambda)
_register("complete-tree", "extend a forest to a tree preserving the crosscut number",
          lambda p: p.add_argument("--graph", required=True), _cmd_complete_tree)
_register("full-subgraph", "trim a triple system until every shadow pair is rich",
          lambda p: (p.add_argument("--triples", required=True),
                     p.add_argument("--d", type=int, required=True)), _cmd_full_subgraph)
_register("sunflower", "find a sunflower in a set family",
          lambda p: (p.add_argument("--family", required=True),
                     p.add_argument("--petals", type=int, required=True)), _cmd_sunflower)
_register("trim-select", "pairwise-disjoint augmented subfamily of at least a third",
          lambda p: p.add_argument("--family", required=True), _cmd_trim_select)
_register("biclique", "complete bipartite subgrid avoiding its edge lists",
          lambda p: (p.add_argument("--grid", required=True),
                     p.add_argument("--lists", required=True),
                     p.add_argument("--t", type=int, required=True),
                     p.add_argument("--host", required=True),
                     p.add_argument("--prefilter", action="store_true")), _cmd_biclique)
_register("classify", "structured labels of a grid coloring",
          lambda p: p.add_argument("--coloring", required=True), _cmd_classify)
_register("ramsey-subgrid", "first classified s-by-s subgrid of a coloring",
          lambda p: (p.add_argument("--coloring", required=True),
                     p.add_argument("--s", type=int, required=True)), _cmd_ramsey_subgrid)
_register("lists", "third-vertex lists of a grid inside a triple system",
          lambda p: (p.add_argument("--host", required=True),
                     p.add_argument("--x", required=True),
                     p.add_argument("--y", required=True)), _cmd_lists)
_register("multicolor", "multicoloring from lists, or the structured subgrid search",
          lambda p: (p.add_argument("--host", required=True),
                     p.add_argument("--x", required=True),
                     p.add_argument("--y", required=True),
                     p.add_argument("--m", type=int, required=True),
                     p.add_argument("--structured", action="store_true"),
                     p.add_argument("--s", type=int, default=1)), _cmd_multicolor)
_register("contains", "copy of a pattern (or of a graph expansion) in a host",
          lambda p: (p.add_argument("--host", required=True),
                     p.add_argument("--pattern"),
                     p.add_argument("--expansion-of")), _cmd_contains)
_register("construct", "all triples meeting a core in exactly one vertex",
          lambda p: (p.add_argument("--n", type=int, required=True),
                     p.add_argument("--core", type=int, required=True)), _cmd_construct)
_register("turan", "maximum edges avoiding a copy of the pattern",
          lambda p: (p.add_argument("--n", type=int, required=True),
                     p.add_argument("--pattern"),
                     p.add_argument("--expansion-of")), _cmd_turan)
_register("audit-theorem1", "construction versus exact counts for a forest expansion",
          lambda p: (p.add_argument("--graph", required=True),
                     p.add_argument("--n-list", required=True)), _cmd_audit_theorem1)
_register("audit-jump", "core construction dictated by the crosscut number",
          lambda p: (p.add_argument("--graph", required=True),
                     p.add_argument("--n", type=int, required=True)), _cmd_audit_jump)


def _usage() -> str:
    lines = ["usage: expansions <subcommand> [options]", "", "subcommands:"]
    width = max(len(name) for name in COMMANDS)
    for name, (help_text, _, _) in COMMANDS.items():
        lines.append(f"  {name:<{width}}  {help_text}")
    lines.append("")
    lines.append("run 'expansions <subcommand> --help' for options")
    return "\n".join(lines)


def _flat(value) -> str:
    return json.dumps(value)


def _render(obj, indent=0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for key, value in obj.items():
            if isinstance(value, dict) and value:
                lines.append(f"{pad}{key}:")
                lines += _render(value, indent + 1)
            elif isinstance(value, list) and value and isinstance(value[0], dict):
                lines.append(f"{pad}{key}:")
                for item in value:
                    lines.append(f"{pad}  -")
                    lines += _render(item, indent + 2)
            else:
                lines.append(f"{pad}{key}: {_flat(value)}")
    else:
        lines.append(f"{pad}{_flat(obj)}")
    return lines


def _emit(result: dict, as_json: bool):
    if as_json:
        print(json.dumps(result, indent=2))
    else:
        print("\n".join(_render(result)))


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if not argv or argv[0] in ("-h", "--help"):
        print(_usage())
        return 0
    name = argv[0]
    if name not in COMMANDS:
        print(f"unknown subcommand: {name}", file=sys.stderr)
        print(_usage(), file=sys.stderr)
        return 1
    help_text, configure, handler = COMMANDS[name]
    parser = argparse.ArgumentParser(prog=f"expansions {name}", description=help_text)
    configure(parser)
    _add_common(parser)
    try:
        args = parser.parse_args(argv[1:])
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        settings = _settings(args)
        result, exhausted = handler(args, settings)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except json.JSONDecodeError as exc:
        print(f"error: invalid JSON input ({exc})", file=sys.stderr)
        return 2
    _emit(result, args.json)
    return 3 if exhausted else 0


def console_main():
    sys.exit(main())


if __name__ == "__main__":
    console_main()
