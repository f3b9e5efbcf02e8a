"""
Text syntax for braid words.

Grammar (whitespace separated tokens)::

    word   := token*
    token  := atom [ "^" ["-"] digits ]
    atom   := "s" digits            Artin generator σ_i
            | "a(" digits "," digits ")"   band generator a_{ts}, t > s
            | "D"                   the Garside element of the structure
            | "1"                   the identity

Both atom families are accepted by both structures: in the Artin structure
``a(t,s)`` expands to ``σ_{t-1}⋯σ_{s+1} σ_s σ_{s+1}⁻¹⋯σ_{t-1}⁻¹``, in the
BKL structure ``s<i>`` means ``a(i+1,i)``. ``D`` is Δ for Artin and δ for
BKL. Printing uses the structure's own atoms, ``D^p`` for the Δ-power and
collapses runs of a repeated atom into ``x^k``.
"""

from __future__ import annotations

import re
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .core import GarsideStructure, GroupElement

_TOKEN = re.compile(r"(s(\d+)|a\((\d+),(\d+)\)|D|1)(?:\^(-?\d+))?$")


class WordSyntaxError(ValueError):
    pass


def _tokens(g: GarsideStructure, text: str):
    """Yield ``(kind, payload, exponent)`` for each token."""
    for tok in text.replace("*", " ").split():
        m = _TOKEN.match(tok)
        if m is None:
            raise WordSyntaxError(f"cannot parse token {tok!r}")
        e = int(m.group(5)) if m.group(5) is not None else 1
        if m.group(2) is not None:
            i = int(m.group(2))
            if not 1 <= i < g.n:
                raise WordSyntaxError(f"s{i} is not a generator of B_{g.n}")
            yield "s", (i,), e
        elif m.group(3) is not None:
            t, s = int(m.group(3)), int(m.group(4))
            if not g.n >= t > s >= 1:
                raise WordSyntaxError(f"a({t},{s}) is not a generator of B_{g.n}")
            yield "a", (t, s), e
        elif m.group(1) == "D":
            yield "D", (), e
        else:
            yield "1", (), e


def _atom_word(g: GarsideStructure, kind: str, payload: tuple) -> list[tuple[int, int]]:
    if g.kind == "artin":
        if kind == "s":
            return [(payload[0] - 1, 1)]
        return g.band_word(*payload)
    if kind == "s":
        i = payload[0]
        return [(g.atom_index(i + 1, i), 1)]
    return [(g.atom_index(*payload), 1)]


def parse_word(g: GarsideStructure, text: str) -> GroupElement:
    """Normal form of the element spelled by ``text``."""
    result = g.one()
    pending: list[tuple[int, int]] = []

    def flush():
        nonlocal result
        if pending:
            result = result * g.from_atom_word(pending)
            pending.clear()

    for kind, payload, e in _tokens(g, text):
        if kind == "1":
            continue
        if kind == "D":
            flush()
            result = result * g.delta_power(e)
            continue
        w = _atom_word(g, kind, payload)
        if e < 0:
            w = [(i, -f) for i, f in reversed(w)]
        pending.extend(w * abs(e))
    flush()
    return result


def parse_positive_indices(g: GarsideStructure, text: str) -> list[int]:
    """Atom indices of a positive word written in the structure's own atoms."""
    out = []
    for kind, payload, e in _tokens(g, text):
        if e < 0 or kind in ("D", "1"):
            raise WordSyntaxError(f"{text!r} is not a positive atom word")
        w = _atom_word(g, kind, payload)
        if any(f < 0 for _, f in w):
            raise WordSyntaxError(f"{text!r} is not a positive atom word")
        out.extend(i for i, _ in w * e)
    return out


def format_atom_word(g: GarsideStructure, word) -> str:
    """Render ``(atom, exponent)`` pairs, merging runs of equal atoms."""
    runs: list[list[int]] = []
    for i, e in word:
        if runs and runs[-1][0] == i and (runs[-1][1] > 0) == (e > 0):
            runs[-1][1] += e
        else:
            runs.append([i, e])
    return " ".join(g.atom_name(i) + (f"^{e}" if e != 1 else "") for i, e in runs)


def format_simple(g: GarsideStructure, s) -> str:
    if s == g.identity:
        return "1"
    return format_atom_word(g, [(i, 1) for i in g.simple_word(s)])


def format_element(x: GroupElement) -> str:
    g = x.structure
    parts = []
    if x.inf:
        parts.append("D" if x.inf == 1 else f"D^{x.inf}")
    body = [(i, 1) for f in x.factors for i in g.simple_word(f)]
    if body:
        parts.append(format_atom_word(g, body))
    return " ".join(parts) or "1"
