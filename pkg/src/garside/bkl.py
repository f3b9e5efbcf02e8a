"""
The Birman-Ko-Lee monoid ``BKL_n⁺`` as a Garside structure.

Simple elements are in bijection with non-crossing partitions of
``{1..n}``: a block ``{b_1 < … < b_k}`` stands for the descending product
``a_{b_k b_{k-1}} ⋯ a_{b_2 b_1}`` and blocks commute. Internally each simple
also carries its permutation (same convention as :mod:`garside.artin`, with
``a_{ts}`` acting as the transposition of ``s`` and ``t``). A permutation is
simple when it lies below ``δ`` in absolute order, i.e. when reflection
lengths add up along ``π · π⁻¹δ``.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from math import comb

from . import perms
from .core import GarsideStructure, GroupElement

Blocks = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class NonCrossingSimple:
    perm: perms.Perm
    length: int = field(compare=False, default=-1)

    def __post_init__(self):
        if self.length < 0:
            object.__setattr__(self, "length", perms.reflection_length(self.perm))

    @property
    def n(self) -> int:
        return len(self.perm)

    @property
    def blocks(self) -> Blocks:
        """The partition, 1-based, blocks sorted by least element."""
        return tuple(tuple(sorted(j + 1 for j in c)) for c in perms.cycles(self.perm))

    def __repr__(self) -> str:
        return f"NonCrossingSimple({self.blocks})"


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def is_noncrossing(blocks: Blocks) -> bool:
    owner = {x: i for i, b in enumerate(blocks) for x in b}
    for i, b in enumerate(blocks):
        for a, c in zip(b, b[1:]):
            # no element strictly between a and c may share a block with one outside [a, c]
            inside = {owner[x] for x in range(a + 1, c)} - {i}
            for j in inside:
                if any(y < a or y > c for y in blocks[j]):
                    return False
    return True


class BKLStructure(GarsideStructure[NonCrossingSimple]):
    """Garside structure of ``BKL_n⁺``; atoms ``a_{ts}`` ordered by ``(t, s)``."""

    kind = "bkl"

    def __init__(self, n: int):
        if not 2 <= n <= 16:
            raise ValueError(f"strand count must be in [2, 16], got {n}")
        self.n = n
        self.tau_order = n
        self.atom_pairs = tuple((t, s) for t in range(2, n + 1) for s in range(1, t))
        self.atoms = tuple(
            NonCrossingSimple(perms.transposition(n, s - 1, t - 1), 1) for t, s in self.atom_pairs
        )
        self._atom_index = {p: i for i, p in enumerate(self.atom_pairs)}
        self.identity = NonCrossingSimple(perms.identity(n), 0)
        d = perms.identity(n)
        for t in range(n, 1, -1):
            d = perms.compose(d, self.atoms[self._atom_index[(t, t - 1)]].perm)
        self.delta = NonCrossingSimple(d, n - 1)
        self._delta_inv = perms.inverse(d)
        self._delta_pow = [perms.identity(n)]
        for _ in range(n - 1):
            self._delta_pow.append(perms.compose(self._delta_pow[-1], d))
        self._gcd: dict = {}
        self._word: dict = {}
        self._rc: dict = {}
        self._interned = {x.perm: x for x in (self.identity, self.delta, *self.atoms)}
        self._simples: list[NonCrossingSimple] | None = None

    def _mk(self, p: perms.Perm) -> NonCrossingSimple:
        s = self._interned.get(p)
        if s is None:
            s = self._interned[p] = NonCrossingSimple(p)
        return s

    def atom_index(self, t: int, s: int) -> int:
        if not (self.n >= t > s >= 1):
            raise ValueError(f"a({t},{s}) is not an atom of BKL_{self.n}")
        return self._atom_index[(t, s)]

    def _is_simple_perm(self, p: perms.Perm) -> bool:
        rest = perms.compose(perms.inverse(p), self.delta.perm)
        return perms.reflection_length(p) + perms.reflection_length(rest) == self.n - 1

    def product(self, a, b):
        c = self._mk(perms.compose(a.perm, b.perm))
        if c.length != a.length + b.length or not self._is_simple_perm(c.perm):
            return None
        return c

    def left_quotient(self, a, b):
        return self._mk(perms.compose(perms.inverse(a.perm), b.perm))

    def left_divides(self, a, b):
        if a.length > b.length:
            return False
        return self.left_quotient(a, b).length == b.length - a.length

    def right_complement(self, s):
        r = self._rc.get(s.perm)
        if r is None:
            r = self._rc[s.perm] = self._mk(perms.compose(perms.inverse(s.perm), self.delta.perm))
        return r

    def left_complement(self, s):
        return self._mk(perms.compose(self.delta.perm, perms.inverse(s.perm)))

    def tau(self, s, k: int = 1):
        k %= self.n
        if k == 0:
            return s
        dk = self._delta_pow[k]
        return self._mk(perms.compose(perms.compose(perms.inverse(dk), s.perm), dk))

    def length(self, s):
        return s.length

    def gcd(self, a, b):
        key = (a.perm, b.perm)
        r = self._gcd.get(key)
        if r is None:
            r = self.nc_meet(a, b)
            self._gcd[key] = r
        return r

    def lcm(self, a, b):
        return self.nc_join(a, b)

    # -- partition model ----------------------------------------------------

    def from_blocks(self, blocks) -> NonCrossingSimple:
        """Simple element of a non-crossing partition given as 1-based blocks."""
        blocks = tuple(tuple(sorted(b)) for b in blocks)
        if sorted(x for b in blocks for x in b) != list(range(1, self.n + 1)):
            singles = {x for b in blocks for x in b}
            blocks += tuple((x,) for x in range(1, self.n + 1) if x not in singles)
        if sorted(x for b in blocks for x in b) != list(range(1, self.n + 1)):
            raise ValueError(f"{blocks} is not a partition of 1..{self.n}")
        if not is_noncrossing(blocks):
            raise ValueError(f"{blocks} is crossing")
        p = perms.identity(self.n)
        for b in blocks:
            for hi, lo in zip(b[::-1], b[::-1][1:]):
                p = perms.compose(p, self.atoms[self._atom_index[(hi, lo)]].perm)
        return self._mk(p)

    def nc_meet(self, a: NonCrossingSimple, b: NonCrossingSimple) -> NonCrossingSimple:
        """Common refinement of the two partitions."""
        owner = {x: i for i, blk in enumerate(b.blocks) for x in blk}
        parts: dict = {}
        for i, blk in enumerate(a.blocks):
            for x in blk:
                parts.setdefault((i, owner[x]), []).append(x)
        return self.from_blocks(parts.values())

    def nc_join(self, a: NonCrossingSimple, b: NonCrossingSimple) -> NonCrossingSimple:
        """Finest non-crossing partition coarser than both."""
        parent = list(range(self.n + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x, y):
            parent[find(x)] = find(y)

        for blk in a.blocks + b.blocks:
            for x in blk[1:]:
                union(blk[0], x)
        while True:
            groups: dict = {}
            for x in range(1, self.n + 1):
                groups.setdefault(find(x), []).append(x)
            blocks = list(groups.values())
            merged = False
            for i in range(len(blocks)):
                for j in range(i + 1, len(blocks)):
                    if _cross(blocks[i], blocks[j]):
                        union(blocks[i][0], blocks[j][0])
                        merged = True
            if not merged:
                return self.from_blocks(blocks)

    def simple_word(self, s):
        w = self._word.get(s.perm)
        if w is None:
            out = []
            rest = s
            while rest.length:
                i = next(i for i, x in enumerate(self.atoms) if self.left_divides(x, rest))
                out.append(i)
                rest = self.left_quotient(self.atoms[i], rest)
            w = tuple(out)
            self._word[s.perm] = w
        return w

    def simples(self):
        if self._simples is None:
            found = {self.identity}
            frontier = [self.identity]
            while frontier:
                nxt = []
                for s in frontier:
                    for x in self.atoms:
                        t = self.product(s, x)
                        if t is not None and t not in found:
                            found.add(t)
                            nxt.append(t)
                frontier = nxt
            self._simples = sorted(found, key=self.simple_key)
        return self._simples

    def atom_name(self, i: int) -> str:
        t, s = self.atom_pairs[i]
        return f"a({t},{s})"


def _cross(b1, b2) -> bool:
    return any(
        (a < b < c < d) or (b < a < d < c)
        for a in b1 for c in b1 if a < c
        for b in b2 for d in b2 if b < d
    )


@functools.cache
def bkl(n: int) -> BKLStructure:
    """The (shared) Birman-Ko-Lee structure on ``n`` strands."""
    return BKLStructure(n)


def bkl_atom(n: int, t: int, s: int) -> NonCrossingSimple:
    g = bkl(n)
    return g.atoms[g.atom_index(t, s)]


def nc_meet(a: NonCrossingSimple, b: NonCrossingSimple) -> NonCrossingSimple:
    return bkl(a.n).nc_meet(a, b)


def nc_join(a: NonCrossingSimple, b: NonCrossingSimple) -> NonCrossingSimple:
    return bkl(a.n).nc_join(a, b)


def artin_to_bkl(x: GroupElement) -> GroupElement:
    """Translate an Artin-structure element via ``σ_i ↦ a_{i+1,i}``."""
    g = bkl(x.structure.n)
    return g.from_atom_word((g.atom_index(i + 2, i + 1), e) for i, e in x.atom_word())


def bkl_to_artin(x: GroupElement) -> GroupElement:
    """Translate a BKL element into the Artin structure via band generators."""
    from .artin import artin

    a = artin(x.structure.n)
    word = []
    for i, e in x.atom_word():
        t, s = x.structure.atom_pairs[i]
        band = a.band_word(t, s)
        if e < 0:
            band = [(j, -f) for j, f in reversed(band)]
        word.extend(band * abs(e))
    return a.from_atom_word(word)
