"""Small helpers for permutations stored as image tuples of ``range(n)``."""

from __future__ import annotations

Perm = tuple[int, ...]


def compose(p: Perm, q: Perm) -> Perm:
    """Product ``p·q`` as braids: first ``p``, then ``q``."""
    return tuple(p[j] for j in q)


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def identity(n: int) -> Perm:
    return tuple(range(n))


def transposition(n: int, i: int, j: int) -> Perm:
    out = list(range(n))
    out[i], out[j] = out[j], out[i]
    return tuple(out)


def inversions(p: Perm) -> int:
    n = len(p)
    return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])


def cycles(p: Perm) -> list[tuple[int, ...]]:
    """Cycles of ``p`` (including fixed points), each starting at its least element."""
    seen = [False] * len(p)
    out = []
    for i in range(len(p)):
        if seen[i]:
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = p[j]
        out.append(tuple(cyc))
    return out


def reflection_length(p: Perm) -> int:
    """Minimal number of transpositions whose product is ``p``."""
    return len(p) - len(cycles(p))
