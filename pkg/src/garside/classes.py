"""
Batch enumeration of conjugacy classes of positive braids of a fixed length.

Distinct positive elements of length ``l`` are generated level by level
(every positive word of length ``l`` spells one of them), then bucketed by
summit class: each element is cycled/decycled to a summit representative,
and the first time an unseen summit element shows up its whole minimal
summit graph is built, which also yields the class's centralizer.
"""

from __future__ import annotations

import json
import logging
import os
from dataclasses import asdict, dataclass
from typing import Iterator

from .centralizer import build_graph, centralizer_generators, reduce_generators
from .core import GarsideStructure, GroupElement
from .summit import summit_path, summit_representative

log = logging.getLogger(__name__)


@dataclass
class ClassRow:
    length: int
    representative: str
    class_size: int  # distinct positive elements of this length in the class
    summit_size: int
    raw_generators: int
    reduced_generators: int


def positive_levels(g: GarsideStructure, max_length: int) -> Iterator[tuple[int, list[GroupElement]]]:
    """Yield ``(l, sorted distinct positive elements of length l)`` for ``l = 0..max_length``."""
    level = [g.one()]
    atoms = [g.atom(i) for i in range(len(g.atoms))]
    for length in range(max_length + 1):
        yield length, level
        nxt = {x * a for x in level for a in atoms}
        level = sorted(nxt)


@dataclass
class _Class:
    rep: GroupElement
    size: int
    summit: tuple
    graph: tuple


def classify(g: GarsideStructure, elements: list[GroupElement], cap: int) -> list[_Class]:
    """Partition ``elements`` (closed under positive conjugacy) into conjugacy classes."""
    owner: dict[GroupElement, int] = {}
    found: list[_Class] = []
    for x in elements:
        path = []
        idx = None
        for w in summit_path(x):
            idx = owner.get(w)
            if idx is not None:
                break
            path.append(w)
        if idx is None:
            # the graph is rooted at the summit representative of the first
            # element seen, which fixes the tree and so the raw generators
            base = summit_representative(x).representative
            base_profile = summit_representative(base)
            graph, tree = build_graph(base_profile, cap=cap)
            idx = len(found)
            for v in graph.vertices:
                owner[v] = idx
            found.append(_Class(x, 0, graph.vertices, (base_profile, graph, tree)))
        for w in path:
            owner[w] = idx
        c = found[idx]
        c.size += 1
        if x < c.rep:
            c.rep = x
    return found


def class_rows(g: GarsideStructure, length: int, elements: list[GroupElement], cap: int) -> list[ClassRow]:
    rows = []
    for c in classify(g, elements, cap):
        raw = centralizer_generators(c.graph[0].representative, graph=c.graph)
        red = reduce_generators(raw)
        rows.append(
            ClassRow(length, str(c.rep), c.size, len(c.summit), len(raw.generators), len(red.generators))
        )
    rows.sort(key=lambda r: _row_key(g, r))
    return rows


def _row_key(g, row):
    from .words import parse_word

    return parse_word(g, row.representative).sort_key()


def conjugacy_classes(
    g: GarsideStructure,
    lengths: range,
    cap: int = 100_000,
    checkpoint: str | os.PathLike | None = None,
) -> dict[int, list[ClassRow]]:
    """
    Class tables for every length in ``lengths``.

    With ``checkpoint`` set, finished lengths are stored as JSON after each
    length and reused on the next run with the same structure.
    """
    done: dict[int, list[ClassRow]] = {}
    header = {"structure": g.kind, "n": g.n}
    if checkpoint and os.path.exists(checkpoint):
        with open(checkpoint) as fh:
            data = json.load(fh)
        if {k: data.get(k) for k in header} == header:
            done = {int(k): [ClassRow(**r) for r in v] for k, v in data["lengths"].items()}
            log.info("resuming with lengths %s", sorted(done))
    out = {}
    for length, elements in positive_levels(g, max(lengths)):
        if length not in lengths:
            continue
        if length not in done:
            log.info("length %d: %d positive elements", length, len(elements))
            done[length] = class_rows(g, length, elements, cap)
            if checkpoint:
                _save(checkpoint, header, done)
        out[length] = done[length]
    return out


def _save(path, header, done):
    data = dict(header, lengths={str(k): [asdict(r) for r in v] for k, v in sorted(done.items())})
    tmp = f"{path}.tmp"
    with open(tmp, "w") as fh:
        json.dump(data, fh, indent=1)
    os.replace(tmp, path)
