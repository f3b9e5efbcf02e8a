"""
Graph export.

JSON layout (all braids written in the word grammar of :mod:`garside.words`)::

    {
      "structure": "artin" | "bkl",
      "n": 4,
      "base": "s1",
      "vertices": ["s1", "s2", "s3"],
      "arrows": [{"v": "s1", "s": "s2 s1", "w": "s2", "in_tree": true}, ...],
      "generators": ["s1", "s3", ...]
    }

Vertex and arrow order is the BFS order of :func:`garside.centralizer.build_graph`,
so re-importing rebuilds the same tree and paths.
"""

from __future__ import annotations

import json

from .artin import artin
from .bkl import bkl
from .centralizer import Arrow, SpanningTree, SummitGraph
from .words import format_simple, parse_positive_indices, parse_word


def structure_for(kind: str, n: int):
    if kind == "artin":
        return artin(n)
    if kind == "bkl":
        return bkl(n)
    raise ValueError(f"unknown structure {kind!r}")


def graph_to_dict(graph: SummitGraph, tree: SpanningTree, generators=()) -> dict:
    g = graph.structure
    in_tree = set(tree.edges)
    return {
        "structure": g.kind,
        "n": g.n,
        "base": str(graph.base),
        "vertices": [str(v) for v in graph.vertices],
        "arrows": [
            {"v": str(a.source), "s": format_simple(g, a.label), "w": str(a.target), "in_tree": a in in_tree}
            for a in graph.arrows
        ],
        "generators": [str(x) for x in generators],
    }


def graph_from_dict(data: dict):
    """Inverse of :func:`graph_to_dict`; returns ``(graph, tree, generators)``."""
    g = structure_for(data["structure"], data["n"])
    vertices = {w: parse_word(g, w) for w in data["vertices"]}
    base = parse_word(g, data["base"])
    arrows, tree = [], []
    paths = {base: ()}
    elems = {base: g.one()}
    for rec in data["arrows"]:
        label = g.word_to_simple(parse_positive_indices(g, rec["s"]))
        arrow = Arrow(vertices[rec["v"]], label, vertices[rec["w"]])
        arrows.append(arrow)
        if rec["in_tree"]:
            tree.append(arrow)
            paths[arrow.target] = paths[arrow.source] + (arrow,)
            elems[arrow.target] = elems[arrow.source] * g.simple_element(label)
    graph = SummitGraph(base, tuple(vertices[w] for w in data["vertices"]), tuple(arrows))
    gens = tuple(parse_word(g, w) for w in data.get("generators", ()))
    return graph, SpanningTree(tuple(tree), paths, elems), gens


def graph_to_json(graph, tree, generators=()) -> str:
    return json.dumps(graph_to_dict(graph, tree, generators), indent=2)


def graph_from_json(text: str):
    return graph_from_dict(json.loads(text))


def _q(text: str) -> str:
    return '"' + text.replace('"', r"\"") + '"'


def graph_to_dot(graph: SummitGraph, tree: SpanningTree) -> str:
    """Graphviz source; tree arrows are bold and blue, the base is double-circled."""
    g = graph.structure
    ids = {v: f"v{i}" for i, v in enumerate(graph.vertices)}
    in_tree = set(tree.edges)
    lines = [f"digraph summit_{g.kind}{g.n} {{", "  node [shape=ellipse];"]
    for v, name in ids.items():
        extra = ", shape=doublecircle" if v == graph.base else ""
        lines.append(f"  {name} [label={_q(str(v))}{extra}];")
    for a in graph.arrows:
        style = 'style=bold, color=blue' if a in in_tree else 'style=dashed'
        lines.append(f"  {ids[a.source]} -> {ids[a.target]} [label={_q(format_simple(g, a.label))}, {style}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
