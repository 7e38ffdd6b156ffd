"""Text and JSON serialization for graphs and triple systems.

Text format: a header line "n m" followed by m edge lines, "u v" for graphs
and "u v w" for triple systems.  Blank lines and trailing whitespace are
tolerated.  The JSON mirror is {"n": n, "edges": [[u, v], ...]} with inner
lists of length 3 for triple systems.
"""

from __future__ import annotations

import json

from .core import Graph, TripleSystem


def _parse_rows(text: str, width: int, kind: str) -> tuple[int, list[list[int]]]:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise ValueError(f"empty {kind} input")
    header = lines[0].split()
    if len(header) != 2:
        raise ValueError(f"{kind} header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise ValueError(f"{kind} header must be 'n m', got {lines[0]!r}") from None
    if len(lines) - 1 != m:
        raise ValueError(f"{kind} header promises {m} edges, found {len(lines) - 1}")
    rows = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != width:
            raise ValueError(f"{kind} edge line must have {width} vertices, got {ln!r}")
        rows.append([int(p) for p in parts])
    return n, rows


def parse_graph_text(text: str) -> Graph:
    n, rows = _parse_rows(text, 2, "graph")
    return Graph.from_edges(n, rows)


def parse_triples_text(text: str) -> TripleSystem:
    n, rows = _parse_rows(text, 3, "triple system")
    return TripleSystem.from_edges(n, rows)


def graph_to_text(graph: Graph) -> str:
    lines = [f"{graph.n} {len(graph.edges)}"]
    lines += [f"{u} {v}" for u, v in graph.sorted_edges()]
    return "\n".join(lines) + "\n"


def triples_to_text(system: TripleSystem) -> str:
    lines = [f"{system.n} {len(system.edges)}"]
    lines += [f"{u} {v} {w}" for u, v, w in system.sorted_edges()]
    return "\n".join(lines) + "\n"


def graph_to_json_dict(graph: Graph) -> dict:
    return {"n": graph.n, "edges": [list(e) for e in graph.sorted_edges()]}


def triples_to_json_dict(system: TripleSystem) -> dict:
    return {"n": system.n, "edges": [list(e) for e in system.sorted_edges()]}


def graph_from_json_dict(obj: dict) -> Graph:
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise ValueError("graph JSON must be an object with 'n' and 'edges'")
    return Graph.from_edges(obj["n"], obj["edges"])


def triples_from_json_dict(obj: dict) -> TripleSystem:
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise ValueError("triple-system JSON must be an object with 'n' and 'edges'")
    return TripleSystem.from_edges(obj["n"], obj["edges"])


def load_graph(path: str) -> Graph:
    """Read a graph file, JSON when the name ends in .json, text otherwise."""
    with open(path) as fh:
        text = fh.read()
    if path.endswith(".json"):
        return graph_from_json_dict(json.loads(text))
    return parse_graph_text(text)


def load_triples(path: str) -> TripleSystem:
    with open(path) as fh:
        text = fh.read()
    if path.endswith(".json"):
        return triples_from_json_dict(json.loads(text))
    return parse_triples_text(text)
