"""
Minimal summit graph, its maximal tree, and centralizer generators.

``build_graph`` explores the summit class breadth first from the summit
representative, drawing one arrow ``(v, s, s⁻¹vs)`` for every minimal simple
conjugator ``s`` of ``v``; the first arrow reaching a vertex goes into the
tree. Every arrow outside the tree closes a loop ``γ_v · s · γ_w⁻¹`` at the
base, and those loops (conjugated back to the input) generate the
centralizer.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import NamedTuple

from .core import GroupElement
from .summit import (
    InvariantBreach,
    SummitProfile,
    conjugate_by_simple,
    in_summit,
    minimal_simple_conjugators,
    summit_representative,
)

DEFAULT_VERTEX_CAP = 100_000


class ResourceCapExceeded(RuntimeError):
    """The summit class is larger than the configured vertex cap."""


class Arrow(NamedTuple):
    source: GroupElement
    label: object
    target: GroupElement


@dataclass(frozen=True)
class SummitGraph:
    base: GroupElement
    vertices: tuple[GroupElement, ...]
    arrows: tuple[Arrow, ...]

    @property
    def structure(self):
        return self.base.structure

    def out_arrows(self, v: GroupElement) -> list[Arrow]:
        return [a for a in self.arrows if a.source == v]


@dataclass(frozen=True)
class SpanningTree:
    edges: tuple[Arrow, ...]
    paths: dict  # vertex -> tuple of arrows from the base
    path_elements: dict = field(repr=False)  # vertex -> product of path labels


@dataclass(frozen=True)
class GeneratorSet:
    original: GroupElement
    generators: tuple[GroupElement, ...]
    conjugating_witness: GroupElement
    removed: tuple = ()  # (generator, reason) pairs recorded by reduce_generators


def build_graph(
    profile: SummitProfile, cap: int = DEFAULT_VERTEX_CAP, workers: int = 1
) -> tuple[SummitGraph, SpanningTree]:
    """
    Minimal summit graph of the profile's representative and its BFS tree.

    Vertices are expanded level by level; with ``workers > 1`` the minimal
    conjugators of one level are computed in a thread pool, but results are
    consumed in discovery order so the output does not depend on scheduling.
    """
    base = profile.representative
    g = base.structure
    order = [base]
    known = {base}
    arrows: list[Arrow] = []
    tree: list[Arrow] = []
    paths = {base: ()}
    elems = {base: g.one()}

    def expand(v):
        return v, minimal_simple_conjugators(v, profile)

    pool = ThreadPoolExecutor(workers) if workers > 1 else None
    try:
        level = [base]
        while level:
            results = pool.map(expand, level) if pool else map(expand, level)
            nxt = []
            for v, mins in results:
                for s in mins:
                    w = conjugate_by_simple(v, s)
                    if not in_summit(w, profile):
                        raise InvariantBreach(f"{w} left the summit class")
                    arrow = Arrow(v, s, w)
                    arrows.append(arrow)
                    if w not in known:
                        if len(known) >= cap:
                            raise ResourceCapExceeded(
                                f"summit class has more than {cap} vertices"
                            )
                        known.add(w)
                        order.append(w)
                        nxt.append(w)
                        tree.append(arrow)
                        paths[w] = paths[v] + (arrow,)
                        elems[w] = elems[v] * g.simple_element(s)
            level = nxt
    finally:
        if pool:
            pool.shutdown()

    graph = SummitGraph(base, tuple(order), tuple(arrows))
    return graph, SpanningTree(tuple(tree), paths, elems)


def check_tree(graph: SummitGraph, tree: SpanningTree) -> None:
    """Raise :class:`InvariantBreach` unless ``tree`` is a spanning tree rooted at the base."""
    vs = set(graph.vertices)
    if len(tree.edges) != len(vs) - 1:
        raise InvariantBreach("tree edge count is not |V| - 1")
    targets = [a.target for a in tree.edges]
    if len(set(targets)) != len(targets) or graph.base in targets:
        raise InvariantBreach("tree arrows must enter each non-base vertex exactly once")
    if set(targets) | {graph.base} != vs:
        raise InvariantBreach("tree does not span the summit class")
    edge_set = set(graph.arrows)
    for v in graph.vertices:
        path = tree.paths[v]
        cur = graph.base
        for a in path:
            if a.source != cur or a not in edge_set:
                raise InvariantBreach(f"path to {v} is broken")
            cur = a.target
        if cur != v:
            raise InvariantBreach(f"path to {v} ends at {cur}")
        if path and path[-1] not in tree.edges:
            raise InvariantBreach(f"path to {v} leaves the tree")


def loop_element(tree: SpanningTree, arrow: Arrow) -> GroupElement:
    """``γ_v · s · γ_w⁻¹`` for an arrow ``(v, s, w)``."""
    g = arrow.source.structure
    return tree.path_elements[arrow.source] * g.simple_element(arrow.label) * tree.path_elements[arrow.target].inverse()


def centralizer_generators(
    a: GroupElement, cap: int = DEFAULT_VERTEX_CAP, workers: int = 1, graph=None
) -> GeneratorSet:
    """
    Generators of ``Z(a)``: one per non-tree arrow, conjugated back to ``a``,
    duplicates dropped, in arrow order.

    ``graph`` may pass a precomputed ``(profile, graph, tree)`` triple for ``a``.
    """
    if graph is None:
        profile = summit_representative(a)
        gr, tree = build_graph(profile, cap=cap, workers=workers)
    else:
        profile, gr, tree = graph
    x = profile.witness
    xinv = x.inverse()
    tree_edges = set(tree.edges)
    seen = set()
    out = []
    for arrow in gr.arrows:
        if arrow in tree_edges:
            continue
        alpha = x * loop_element(tree, arrow) * xinv
        if alpha not in seen:
            seen.add(alpha)
            out.append(alpha)
    return GeneratorSet(a, tuple(out), x)


def _short_words(elements, max_len: int):
    """Products of at most ``max_len`` letters from ``elements`` and their inverses."""
    letters = list(elements) + [e.inverse() for e in elements]
    for k in range(1, max_len + 1):
        for combo in itertools.product(letters, repeat=k):
            w = combo[0]
            for c in combo[1:]:
                w = w * c
            yield w


def _explain(gen: GroupElement, kept: list[GroupElement], cache: dict) -> str | None:
    """Why ``gen`` lies in the subgroup generated by ``kept``, or ``None``."""
    if gen.is_identity():
        return "identity"
    for h in kept:
        if gen == h:
            return f"duplicate of {h}"
        if gen == h.inverse():
            return f"inverse of {h}"
    # conjugation preserves the exponent sum
    candidates = [h for h in kept if h.word_length == gen.word_length]
    if not candidates:
        return None
    words = list(_short_words(kept, 2))
    for h in candidates:
        for w in words:
            key = (h, w)
            if key not in cache:
                cache[key] = h.conjugate(w)
            if gen == cache[key]:
                return f"conjugate of {h} by {w}"
    return None


def reduce_generators(gs: GeneratorSet) -> GeneratorSet:
    """
    Drop generators that are provably redundant.

    A generator goes if it is the identity, equals another generator or its
    inverse, or equals ``w⁻¹hw`` for a kept ``h`` and a word ``w`` of length
    at most two in the kept generators. A forward pass keeps whatever cannot
    be explained by earlier survivors; a backward pass then retries each
    survivor against all the others. Each removal is recorded with the
    equality that justifies it.
    """
    kept: list[GroupElement] = []
    removed = list(gs.removed)
    cache: dict = {}
    for gen in gs.generators:
        why = _explain(gen, kept, cache)
        if why is None:
            kept.append(gen)
        else:
            removed.append((gen, why))
    for gen in list(reversed(kept)):
        others = [h for h in kept if h != gen]
        why = _explain(gen, others, cache)
        if why is not None:
            kept = others
            removed.append((gen, why))
    return GeneratorSet(gs.original, tuple(kept), gs.conjugating_witness, tuple(removed))


@dataclass(frozen=True)
class ConjugatorCoset:
    """All ``c`` with ``c⁻¹ a c = b`` are ``witness · Z(b)``; ``witness`` is ``None`` if not conjugate."""

    witness: GroupElement | None
    centralizer: GeneratorSet

    @property
    def is_conjugate(self) -> bool:
        return self.witness is not None


def conjugacy_witness(a: GroupElement, b: GroupElement, cap: int = DEFAULT_VERTEX_CAP, graph=None):
    """Some ``c`` with ``c⁻¹ a c = b``, or ``None`` when ``a`` and ``b`` are not conjugate."""
    if a.structure != b.structure:
        raise ValueError("structure mismatch")
    pb = summit_representative(b)
    if graph is None:
        pa = summit_representative(a)
        if (pa.summit_inf, pa.summit_sup) != (pb.summit_inf, pb.summit_sup):
            return None
        if a.word_length != b.word_length:
            return None
        _, tree = build_graph(pa, cap=cap)
    else:
        pa, _, tree = graph
    gamma = tree.path_elements.get(pb.representative)
    if gamma is None:
        return None
    c = pa.witness * gamma * pb.witness.inverse()
    if a.conjugate(c) != b:
        raise InvariantBreach("conjugacy witness does not conjugate")
    return c


def conjugator_coset(a: GroupElement, b: GroupElement, cap: int = DEFAULT_VERTEX_CAP) -> ConjugatorCoset:
    return ConjugatorCoset(conjugacy_witness(a, b, cap=cap), centralizer_generators(b, cap=cap))
