"""
Generic Garside machinery.

A concrete monoid (Artin or Birman-Ko-Lee) subclasses :class:`GarsideStructure`
and supplies a handful of primitives on simple elements: the partial product,
left division, complements, the automorphism tau and a canonical atom word.
Everything else (lattice operations, left-greedy normal forms, group
arithmetic) is built here on top of those primitives.

Group elements are stored as ``Δ^inf · s_1 ⋯ s_k`` with the factors
left-weighted: for every adjacent pair, ``gcd(right_complement(s_i), s_{i+1})``
is trivial. Divisibility always means *left* divisibility.
"""

from __future__ import annotations

import abc
import functools
from dataclasses import dataclass
from typing import Generic, Hashable, Iterable, Iterator, Sequence, TypeVar

S = TypeVar("S", bound=Hashable)


class StructureMismatch(ValueError):
    """Operands belong to different Garside structures."""


class NotSimpleError(ValueError):
    """A product of atoms does not divide Δ."""


class GarsideStructure(abc.ABC, Generic[S]):
    """
    Abstract Garside monoid with a finite lattice of simple elements.

    Subclasses must set ``kind``, ``n``, ``atoms``, ``identity``, ``delta`` and
    ``tau_order`` and implement the abstract primitives. Instances are compared
    by ``(kind, n)``.
    """

    kind: str
    n: int
    atoms: tuple[S, ...]
    identity: S
    delta: S
    tau_order: int

    # -- primitives -------------------------------------------------------

    @abc.abstractmethod
    def product(self, a: S, b: S) -> S | None:
        """Return ``a·b`` if it is simple, else ``None``."""

    @abc.abstractmethod
    def left_divides(self, a: S, b: S) -> bool:
        """Return whether ``a ≺ b``."""

    @abc.abstractmethod
    def left_quotient(self, a: S, b: S) -> S:
        """Return ``a⁻¹·b``; requires ``a ≺ b``."""

    @abc.abstractmethod
    def right_complement(self, s: S) -> S:
        """The simple ``∂s`` with ``s·∂s = Δ``."""

    @abc.abstractmethod
    def left_complement(self, s: S) -> S:
        """The simple ``x`` with ``x·s = Δ``."""

    @abc.abstractmethod
    def tau(self, s: S, k: int = 1) -> S:
        """``Δ⁻ᵏ·s·Δᵏ``."""

    @abc.abstractmethod
    def length(self, s: S) -> int:
        """Number of atoms in any word for ``s``."""

    @abc.abstractmethod
    def simple_word(self, s: S) -> tuple[int, ...]:
        """Canonical atom word for ``s`` as 0-based atom indices."""

    @abc.abstractmethod
    def simples(self) -> list[S]:
        """All simple elements, in canonical order."""

    @abc.abstractmethod
    def atom_name(self, i: int) -> str:
        """Printable token for atom ``i``."""

    # -- identity ---------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GarsideStructure):
            return NotImplemented
        return (self.kind, self.n) == (other.kind, other.n)

    def __hash__(self) -> int:
        return hash((self.kind, self.n))

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n})"

    @property
    def max_simple_length(self) -> int:
        return self.length(self.delta)

    # -- derived operations on simples ------------------------------------

    def simple_key(self, s: S) -> tuple:
        """Sort key giving the canonical order on simples: by length, then word."""
        return (self.length(s), self.simple_word(s))

    def atom_divides(self, i: int, s: S) -> bool:
        return self.left_divides(self.atoms[i], s)

    def right_divides_atom(self, i: int, s: S) -> bool:
        # s = r·x  iff  x·∂s is simple
        return self.product(self.atoms[i], self.right_complement(s)) is not None

    def word_to_simple(self, word: Iterable[int]) -> S:
        s = self.identity
        for i in word:
            t = self.product(s, self.atoms[i])
            if t is None:
                raise NotSimpleError(
                    "word " + " ".join(self.atom_name(j) for j in word) + " is not simple"
                )
            s = t
        return s

    def gcd_generic(self, a: S, b: S) -> S:
        """Greedy atom absorption: ``d := d·x`` while some atom divides both residuals."""
        d = self.identity
        while True:
            for x in self.atoms:
                if self.left_divides(x, a) and self.left_divides(x, b):
                    a = self.left_quotient(x, a)
                    b = self.left_quotient(x, b)
                    d = self.product(d, x)
                    break
            else:
                return d

    def right_gcd_generic(self, a: S, b: S) -> S:
        """Largest common right divisor, by absorbing atoms from the right."""
        d = self.identity
        while True:
            for i, x in enumerate(self.atoms):
                if self.right_divides_atom(i, a) and self.right_divides_atom(i, b):
                    a = self.left_complement(self.product(x, self.right_complement(a)))
                    b = self.left_complement(self.product(x, self.right_complement(b)))
                    d = self.product(x, d)
                    break
            else:
                return d

    def lcm_generic(self, a: S, b: S) -> S:
        # a ≺ m  iff  ∂m is a right divisor of ∂a
        r = self.right_gcd_generic(self.right_complement(a), self.right_complement(b))
        return self.left_complement(r)

    def gcd(self, a: S, b: S) -> S:
        return self.gcd_generic(a, b)

    def lcm(self, a: S, b: S) -> S:
        return self.lcm_generic(a, b)

    # -- normal forms -----------------------------------------------------

    def _append(self, factors: list[S], s: S) -> None:
        """Right-multiply a left-weighted factor list by simple ``s`` in place."""
        factors.append(s)
        i = len(factors) - 2
        while i >= 0:
            a, b = factors[i], factors[i + 1]
            c = self.gcd(self.right_complement(a), b)
            if c == self.identity:
                break
            factors[i] = self.product(a, c)
            factors[i + 1] = self.left_quotient(c, b)
            i -= 1

    def _finish(self, inf: int, factors: list[S]) -> GroupElement[S]:
        lo, hi = 0, len(factors)
        while lo < hi and factors[lo] == self.delta:
            lo += 1
        while hi > lo and factors[hi - 1] == self.identity:
            hi -= 1
        return GroupElement(self, inf + lo, tuple(factors[lo:hi]))

    def element(self, inf: int = 0, factors: Sequence[S] = ()) -> GroupElement[S]:
        """Normal form of ``Δ^inf · f_1 ⋯ f_r`` for arbitrary simples ``f_i``."""
        out: list[S] = []
        for f in factors:
            self._append(out, f)
        return self._finish(inf, out)

    def one(self) -> GroupElement[S]:
        return GroupElement(self, 0, ())

    def delta_power(self, p: int) -> GroupElement[S]:
        return GroupElement(self, p, ())

    def simple_element(self, s: S) -> GroupElement[S]:
        return self.element(0, (s,))

    def atom(self, i: int) -> GroupElement[S]:
        return self.simple_element(self.atoms[i])

    def from_atom_word(self, word: Iterable[tuple[int, int]]) -> GroupElement[S]:
        """Normal form of a word of ``(atom index, exponent)`` pairs."""
        inf = 0
        factors: list[S] = []
        for i, e in word:
            x = self.atoms[i]
            if e > 0:
                for _ in range(e):
                    self._append(factors, x)
            else:
                # x⁻¹ = Δ⁻¹·L(x); moving Δ⁻¹ left twists the prefix by τ⁻¹
                lx = self.left_complement(x)
                for _ in range(-e):
                    inf -= 1
                    factors = [self.tau(f, -1) for f in factors]
                    self._append(factors, lx)
        return self._finish(inf, factors)

    def iter_positive_words(self, length: int) -> Iterator[tuple[int, ...]]:
        """All positive atom words of the given length, in lexicographic order."""
        t = len(self.atoms)

        def rec(prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
            if len(prefix) == length:
                yield prefix
                return
            for i in range(t):
                yield from rec(prefix + (i,))

        return rec(())


@functools.total_ordering
@dataclass(frozen=True)
class GroupElement(Generic[S]):
    """An element ``Δ^inf · factors`` of a Garside group, in left normal form."""

    structure: GarsideStructure[S]
    inf: int
    factors: tuple[S, ...]

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    @property
    def sup(self) -> int:
        return self.inf + len(self.factors)

    @property
    def word_length(self) -> int:
        """Signed atom count; an invariant of the element for homogeneous monoids."""
        g = self.structure
        return self.inf * g.max_simple_length + sum(g.length(f) for f in self.factors)

    def is_identity(self) -> bool:
        return self.inf == 0 and not self.factors

    def is_positive(self) -> bool:
        return self.inf >= 0

    def _check(self, other: GroupElement) -> None:
        if self.structure != other.structure:
            raise StructureMismatch(f"{self.structure!r} vs {other.structure!r}")

    def __mul__(self, other: GroupElement[S]) -> GroupElement[S]:
        self._check(other)
        g = self.structure
        # Δ^p A Δ^q B = Δ^(p+q) τ^q(A) B
        q = other.inf
        factors = [g.tau(f, q) for f in self.factors] if q % g.tau_order else list(self.factors)
        if not other.factors:
            return GroupElement(g, self.inf + q, tuple(factors))
        for f in other.factors:
            g._append(factors, f)
        return g._finish(self.inf + q, factors)

    def inverse(self) -> GroupElement[S]:
        g = self.structure
        p, k = self.inf, len(self.factors)
        # (Δ^p s_1⋯s_k)⁻¹ = Δ^(-p-k) · τ^(-p-k)(∂s_k) ⋯ τ^(-p-1)(∂s_1)
        out = [g.tau(g.right_complement(self.factors[i - 1]), -p - i) for i in range(k, 0, -1)]
        return GroupElement(g, -p - k, tuple(out))

    def __pow__(self, e: int) -> GroupElement[S]:
        base = self if e >= 0 else self.inverse()
        result = self.structure.one()
        for _ in range(abs(e)):
            result = result * base
        return result

    def conjugate(self, c: GroupElement[S]) -> GroupElement[S]:
        """``c⁻¹ · self · c``."""
        self._check(c)
        return c.inverse() * self * c

    def commutes_with(self, other: GroupElement[S]) -> bool:
        return self * other == other * self

    def atom_word(self) -> list[tuple[int, int]]:
        """Word as ``(atom index, exponent)`` pairs; Δ powers are expanded."""
        g = self.structure
        out: list[tuple[int, int]] = []
        dw = g.simple_word(g.delta)
        if self.inf >= 0:
            out.extend((i, 1) for _ in range(self.inf) for i in dw)
        else:
            out.extend((i, -1) for _ in range(-self.inf) for i in reversed(dw))
        for f in self.factors:
            out.extend((i, 1) for i in g.simple_word(f))
        return out

    def sort_key(self) -> tuple:
        g = self.structure
        return (self.inf, tuple(g.simple_word(f) for f in self.factors))

    def __lt__(self, other: GroupElement[S]) -> bool:
        self._check(other)
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        from .words import format_element

        return format_element(self)

    def __repr__(self) -> str:
        return f"<{self.structure.kind}{self.structure.n}: {self}>"


def lcm_simple(g: GarsideStructure[S], a: S, b: S) -> S:
    return g.lcm(a, b)


def gcd_simple(g: GarsideStructure[S], a: S, b: S) -> S:
    return g.gcd(a, b)


def right_complement(g: GarsideStructure[S], s: S) -> S:
    return g.right_complement(s)


def tau(g: GarsideStructure[S], s: S) -> S:
    return g.tau(s)


def normal_form(g: GarsideStructure, word: str | Iterable[tuple[int, int]]) -> GroupElement:
    """Normal form of a word, given as text or as ``(atom, exponent)`` pairs."""
    if isinstance(word, str):
        from .words import parse_word

        return parse_word(g, word)
    return g.from_atom_word(word)


def multiply(a: GroupElement, b: GroupElement) -> GroupElement:
    return a * b


def invert(a: GroupElement) -> GroupElement:
    return a.inverse()


def conjugate(a: GroupElement, c: GroupElement) -> GroupElement:
    """``c⁻¹ a c``."""
    return a.conjugate(c)
