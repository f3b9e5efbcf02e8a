"""
Summit classes: cycling, decycling, a summit representative with its
conjugating witness, and the minimal simple conjugators of a summit element.

The summit class of ``a`` is the set of conjugates with maximal ``inf`` and
minimal ``sup``. Cycling never lowers ``inf`` and raises it within a bounded
number of steps when it is not yet maximal, so iterating it until the
trajectory closes up without progress reaches the maximal ``inf``; decycling
does the same for ``sup``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .core import GroupElement


class NotInSummitError(ValueError):
    """A routine that requires a summit element was given something else."""


class InvariantBreach(RuntimeError):
    """An internal consistency check failed."""


@dataclass(frozen=True)
class SummitProfile:
    summit_inf: int
    summit_sup: int
    representative: GroupElement
    witness: GroupElement

    @property
    def structure(self):
        return self.representative.structure


def cycling(v: GroupElement):
    """Conjugate ``v = Δ^p s_1⋯s_k`` by ``τ^{-p}(s_1)``; returns ``(result, τ^{-p}(s_1))``."""
    g = v.structure
    if not v.factors:
        return v, g.identity
    p = v.inf
    c = g.tau(v.factors[0], -p)
    return g.element(p, v.factors[1:] + (c,)), c


def decycling(v: GroupElement):
    """
    Conjugate ``v`` by the inverse of its last factor ``s_k``.

    Returns ``(s_k · v · s_k⁻¹, s_k)``; the conjugator actually applied is
    ``s_k⁻¹``.
    """
    g = v.structure
    if not v.factors:
        return v, g.identity
    p = v.inf
    last = v.factors[-1]
    return g.element(p, (g.tau(last, p),) + v.factors[:-1]), last


def summit_representative(a: GroupElement) -> SummitProfile:
    g = a.structure
    w, x = a, g.one()

    # on a repeat, rewind to the first visit so the witness skips the closed orbit
    seen = {w: x}
    while w.factors:
        w2, c = cycling(w)
        x = x * g.simple_element(c)
        if w2.inf < w.inf or w2.sup > w.sup:
            raise InvariantBreach(f"cycling worsened {w} to {w2}")
        if w2.inf > w.inf:
            seen = {}
        elif w2 in seen:
            w, x = w2, seen[w2]
            break
        seen[w2] = x
        w = w2

    seen = {w: x}
    while w.factors:
        w2, c = decycling(w)
        x = x * g.simple_element(c).inverse()
        if w2.inf < w.inf or w2.sup > w.sup:
            raise InvariantBreach(f"decycling worsened {w} to {w2}")
        if w2.sup < w.sup:
            seen = {}
        elif w2 in seen:
            w, x = w2, seen[w2]
            break
        seen[w2] = x
        w = w2

    return SummitProfile(w.inf, w.sup, w, x)


def summit_path(a: GroupElement) -> Iterator[GroupElement]:
    """
    Yield ``a`` and the distinct conjugates visited by cycling then
    decycling, without tracking a witness. The last element yielded is in the
    summit class.
    """
    w = a
    emitted = {w}
    yield w
    for step, better in ((cycling, lambda u, v: v.inf > u.inf), (decycling, lambda u, v: v.sup < u.sup)):
        seen = {w}
        while w.factors:
            w2, _ = step(w)
            if better(w, w2):
                seen = set()
            elif w2 in seen:
                break
            seen.add(w2)
            w = w2
            if w not in emitted:
                emitted.add(w)
                yield w


def in_summit(v: GroupElement, profile: SummitProfile) -> bool:
    return v.inf == profile.summit_inf and v.sup == profile.summit_sup


def conjugate_by_simple(v: GroupElement, s) -> GroupElement:
    g = v.structure
    c = g.simple_element(s)
    return c.inverse() * v * c


def summit_conjugators(v: GroupElement, profile: SummitProfile) -> list:
    """All nontrivial simples ``s`` with ``s⁻¹vs`` in the summit class, canonical order."""
    g = v.structure
    return [s for s in g.simples() if s != g.identity and in_summit(conjugate_by_simple(v, s), profile)]


def minimal_simple_conjugators(v: GroupElement, profile: SummitProfile) -> list:
    """
    The ≺-minimal nontrivial simples conjugating ``v`` into its summit class,
    in canonical simple order. Found by enumerating every simple element.
    """
    if not in_summit(v, profile):
        raise NotInSummitError(f"{v} is not in the summit class")
    g = v.structure
    minimal: list = []
    # simples() is sorted by length, so any proper divisor is seen first
    for s in summit_conjugators(v, profile):
        if not any(g.left_divides(m, s) for m in minimal):
            minimal.append(s)
    return minimal


def chain_decompose(u: GroupElement, x: GroupElement, profile: SummitProfile, conjugators=None):
    """
    Split a positive conjugator ``x`` between two summit elements into a
    minimal chain.

    Returns ``[(s_1, u_2), …, (s_k, u_{k+1})]`` with ``s_1⋯s_k = x``,
    ``u_{i+1} = s_i⁻¹ u_i s_i`` and each ``s_i`` a minimal simple conjugator
    of ``u_i``. At each step the chosen label is the first minimal conjugator
    dividing the maximal simple prefix of what remains of ``x``.

    ``conjugators`` may map a vertex to its precomputed minimal conjugators.
    """
    g = u.structure
    if x.structure != g:
        raise ValueError("structure mismatch")
    if not in_summit(u, profile):
        raise NotInSummitError(f"{u} is not in the summit class")
    if not x.is_positive():
        raise ValueError(f"conjugator {x} is not positive")
    if not in_summit(u.conjugate(x), profile):
        raise NotInSummitError(f"{u} conjugated by {x} leaves the summit class")

    chain = []
    w, rest = u, x
    while not rest.is_identity():
        prefix = g.delta if rest.inf > 0 else rest.factors[0]
        mins = conjugators(w) if conjugators else minimal_simple_conjugators(w, profile)
        r = next((m for m in mins if g.left_divides(m, prefix)), None)
        if r is None:
            raise InvariantBreach(f"no minimal conjugator of {w} divides {prefix}")
        rs = g.simple_element(r)
        w = rs.inverse() * w * rs
        rest = rs.inverse() * rest
        chain.append((r, w))
    return chain
