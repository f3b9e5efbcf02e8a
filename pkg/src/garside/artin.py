"""
The Artin braid monoid ``B_n⁺`` as a Garside structure.

Simple elements are positive braids in which any two strands cross at most
once, so each is determined by its permutation. A simple is stored as the
tuple ``w`` with ``w[j]`` the starting position of the strand that ends at
position ``j`` (positions are 0-based). Right multiplication by ``σ_i`` swaps
``w[i-1]`` and ``w[i]``; in B_3, ``σ_1σ_2`` is stored as ``(1, 2, 0)``.
Lengths add exactly when the product is still simple, which is the test used
for the partial product.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field

from . import perms
from .core import GarsideStructure

MAX_STRANDS = 16


@dataclass(frozen=True)
class PermutationSimple:
    perm: perms.Perm
    length: int = field(compare=False, default=-1)

    def __post_init__(self):
        if self.length < 0:
            object.__setattr__(self, "length", perms.inversions(self.perm))

    @property
    def n(self) -> int:
        return len(self.perm)

    def __repr__(self) -> str:
        return f"PermutationSimple({self.perm})"


class ArtinStructure(GarsideStructure[PermutationSimple]):
    """Garside structure of ``B_n⁺`` with atoms ``σ_1 < … < σ_{n-1}``."""

    kind = "artin"
    tau_order = 2

    def __init__(self, n: int):
        if not 2 <= n <= MAX_STRANDS:
            raise ValueError(f"strand count must be in [2, {MAX_STRANDS}], got {n}")
        self.n = n
        self.identity = PermutationSimple(perms.identity(n), 0)
        self.delta = PermutationSimple(tuple(range(n - 1, -1, -1)), n * (n - 1) // 2)
        self.atoms = tuple(
            PermutationSimple(perms.transposition(n, i, i + 1), 1) for i in range(n - 1)
        )
        self._gcd: dict = {}
        self._word: dict = {}
        self._rc: dict = {}
        self._interned = {s.perm: s for s in (self.identity, self.delta, *self.atoms)}
        self._simples: list[PermutationSimple] | None = None

    def _mk(self, p: perms.Perm) -> PermutationSimple:
        s = self._interned.get(p)
        if s is None:
            s = self._interned[p] = PermutationSimple(p)
        return s

    def product(self, a, b):
        c = self._mk(perms.compose(a.perm, b.perm))
        return c if c.length == a.length + b.length else None

    def left_quotient(self, a, b):
        return self._mk(perms.compose(perms.inverse(a.perm), b.perm))

    def left_divides(self, a, b):
        if a.length > b.length:
            return False
        return self.left_quotient(a, b).length == b.length - a.length

    def atom_divides(self, i: int, s: PermutationSimple) -> bool:
        # σ_{i+1} ≺ s iff the strands starting at i and i+1 cross in s
        w = s.perm
        return w.index(i) > w.index(i + 1)

    def right_complement(self, s):
        r = self._rc.get(s.perm)
        if r is None:
            r = self._rc[s.perm] = self._mk(perms.compose(perms.inverse(s.perm), self.delta.perm))
        return r

    def left_complement(self, s):
        return self._mk(perms.compose(self.delta.perm, perms.inverse(s.perm)))

    def tau(self, s, k: int = 1):
        if k % 2 == 0:
            return s
        d = self.delta.perm
        return self._mk(perms.compose(perms.compose(d, s.perm), d))

    def length(self, s):
        return s.length

    def gcd(self, a, b):
        key = (a.perm, b.perm)
        r = self._gcd.get(key)
        if r is None:
            r = self.gcd_generic(a, b)
            self._gcd[key] = r
        return r

    def simple_word(self, s):
        w = self._word.get(s.perm)
        if w is None:
            # greedy on left descents gives the lexicographically least reduced word
            out = []
            rest = s
            while rest.length:
                i = next(i for i in range(self.n - 1) if self.atom_divides(i, rest))
                out.append(i)
                rest = self.left_quotient(self.atoms[i], rest)
            w = tuple(out)
            self._word[s.perm] = w
        return w

    def simples(self):
        if self._simples is None:
            every = (self._mk(p) for p in itertools.permutations(range(self.n)))
            self._simples = sorted(every, key=self.simple_key)
        return self._simples

    def atom_name(self, i: int) -> str:
        return f"s{i + 1}"

    def band_word(self, t: int, s: int) -> list[tuple[int, int]]:
        """Artin word for the band generator ``a_{ts}`` (1-based, ``t > s``)."""
        up = [(i - 1, 1) for i in range(t - 1, s, -1)]
        down = [(i - 1, -1) for i in range(s + 1, t)]
        return up + [(s - 1, 1)] + down


@functools.cache
def artin(n: int) -> ArtinStructure:
    """The (shared) Artin structure on ``n`` strands."""
    return ArtinStructure(n)


def atom_divides(i: int, s: PermutationSimple) -> bool:
    """Whether ``σ_i`` (1-based) left-divides ``s``."""
    return artin(s.n).atom_divides(i - 1, s)


def simple_to_word(s: PermutationSimple) -> str:
    g = artin(s.n)
    return " ".join(g.atom_name(i) for i in g.simple_word(s))


def word_to_simple(n: int, word: str) -> PermutationSimple:
    """Simple element of a positive, square-free word like ``"s1 s2 s1"``."""
    from .words import parse_positive_indices

    g = artin(n)
    return g.word_to_simple(parse_positive_indices(g, word))
