"""
Acceptance criteria. Each test carries a ``criterion`` marker and the
terminal summary prints one PASS/FAIL line per criterion. Run alone with
``pytest tests/test_acceptance.py``.
"""

import itertools
import random
import time
from collections import Counter

import pytest

from garside.artin import artin
from garside.bkl import artin_to_bkl
from garside.centralizer import (
    build_graph,
    centralizer_generators,
    check_tree,
    conjugacy_witness,
    reduce_generators,
)
from garside.classes import class_rows, conjugacy_classes, positive_levels
from garside.summit import chain_decompose, in_summit, minimal_simple_conjugators, summit_representative
from garside.words import parse_word

from oracles import artin_lattice, brute_gcd, brute_lcm, brute_summit, positive_class, positive_elements
from published_tables import B3_CUMULATIVE_4_20, B3_LENGTH_11, B4_LENGTH_6

criterion = pytest.mark.criterion


def nf(g, text):
    return parse_word(g, text)


class Clock:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.start


@criterion("1 lattice fidelity: 24 simples in B4, 6 in B3, gcd/lcm match exhaustive search")
def test_lattice_fidelity(request):
    with Clock() as clock:
        for n, count in ((3, 6), (4, 24)):
            g = artin(n)
            divisors, _ = artin_lattice(n)
            assert len(g.simples()) == count == len(divisors)
            for a, b in itertools.product(g.simples(), repeat=2):
                assert g.gcd(a, b).perm == brute_gcd(divisors, a.perm, b.perm)
                assert g.lcm(a, b).perm == brute_lcm(divisors, a.perm, b.perm)
    request.node.criterion_note = f"{clock.seconds:.2f} s"
    assert clock.seconds < 1


@criterion("2 minimal conjugators of s1 and s1 s2 in B4")
def test_minimal_conjugators(request):
    g = artin(4)
    with Clock() as clock:
        v = nf(g, "s1")
        got1 = set(minimal_simple_conjugators(v, summit_representative(v)))
        v = nf(g, "s1 s2")
        got2 = set(minimal_simple_conjugators(v, summit_representative(v)))
    assert got1 == {nf(g, w).factors[0] for w in ("s1", "s2 s1", "s3")}
    assert got2 == {nf(g, w).factors[0] for w in ("s1", "s3 s2 s1")}
    request.node.criterion_note = f"{clock.seconds:.3f} s"
    assert clock.seconds < 1


@criterion("3 raw and reduced centralizer of s1 in B4")
def test_centralizer_of_s1(request):
    g = artin(4)
    with Clock() as clock:
        raw = centralizer_generators(nf(g, "s1"))
        red = reduce_generators(raw)
    assert set(raw.generators) == {
        nf(g, w) for w in ("s1", "s2 s1^2 s2", "s3", "s2 s1 s3 s2^2 s3 s1^-1 s2^-1")
    }
    assert set(red.generators) == {nf(g, w) for w in ("s1", "s2 s1^2 s2", "s3")}
    request.node.criterion_note = f"{clock.seconds:.3f} s"
    assert clock.seconds < 1


def _match_table(g, length, table):
    """Classes of one length against a published table; returns (rows, seconds)."""
    with Clock() as clock:
        rows = conjugacy_classes(g, range(length, length + 1))[length]
    reps = [nf(g, r.representative) for r in rows]
    matched = []
    for text, _ in table:
        a = nf(g, text)
        hits = []
        for i, r in enumerate(reps):
            c = conjugacy_witness(r, a)
            if c is not None:
                assert r.conjugate(c) == a
                hits.append(i)
        assert len(hits) == 1, f"{text} matches classes {hits}"
        matched.append(hits[0])
    assert sorted(matched) == list(range(len(rows)))
    return rows, clock.seconds


@criterion("4a classes of positive 3-strand braids of length 11: 16, matching the published rows")
def test_classes_b3_length_11(request):
    rows, seconds = _match_table(artin(3), 11, B3_LENGTH_11)
    assert len(rows) == len(B3_LENGTH_11) == 16
    request.node.criterion_note = f"{len(rows)} classes, {seconds:.1f} s"
    assert seconds < 60


@criterion("4b classes of positive 4-strand braids of length 6: 16, matching the published rows")
def test_classes_b4_length_6(request):
    rows, seconds = _match_table(artin(4), 6, B4_LENGTH_6)
    assert len(rows) == len(B4_LENGTH_6) == 16
    request.node.criterion_note = f"{len(rows)} classes, {seconds:.1f} s"
    assert seconds < 60


@criterion("4c cumulative class count 1634 for 3 strands, lengths 4 to 20; generator counts <= 4")
def test_cumulative_b3_count(request):
    with Clock() as clock:
        tables = conjugacy_classes(artin(3), range(4, 21))
    rows = [r for length in tables for r in tables[length]]
    reduced = Counter(r.reduced_generators for r in rows)
    request.node.criterion_note = (
        f"{len(rows)} classes, {clock.seconds / 60:.1f} min, max raw "
        f"{max(r.raw_generators for r in rows)}, reduced sizes {dict(sorted(reduced.items()))}"
    )
    assert len(rows) == B3_CUMULATIVE_4_20
    assert max(reduced) <= 4
    assert clock.seconds <= 30 * 60


@criterion("5 published generators for the 3-strand length 11 rows commute, and so do ours")
def test_b3_length_11_generators(request):
    g = artin(3)
    emitted = 0
    with Clock() as clock:
        for text, gens in B3_LENGTH_11:
            a = nf(g, text)
            for w in gens:
                assert nf(g, w).commutes_with(a), f"{w} does not commute with {text}"
            raw = centralizer_generators(a)
            ours = set(raw.generators) | set(reduce_generators(raw).generators)
            assert all(x.commutes_with(a) for x in ours)
            emitted += len(ours)
    request.node.criterion_note = f"{emitted} emitted generators, {clock.seconds:.1f} s"
    assert clock.seconds < 60


def _random_positive(g, rng, length):
    return g.from_atom_word((rng.randrange(len(g.atoms)), 1) for _ in range(length))


@criterion("6a-c centralizer generators commute, |S_v| <= n-1, tree invariants, 500 random inputs")
def test_property_suite(request):
    rng = random.Random(20240)
    inputs = 0
    vertices = 0
    for n in (3, 4, 5):
        g = artin(n)
        for _ in range(170):
            a = _random_positive(g, rng, rng.randrange(1, 9))
            profile = summit_representative(a)
            graph, tree = build_graph(profile)
            check_tree(graph, tree)
            for v in graph.vertices:
                assert len(graph.out_arrows(v)) <= n - 1
            vertices += len(graph.vertices)
            gs = centralizer_generators(a, graph=(profile, graph, tree))
            for x in gs.generators:
                assert a.conjugate(x) == a
            inputs += 1
    request.node.criterion_note = f"{inputs} inputs, {vertices} vertices"
    assert inputs >= 500


@criterion("6d summit classes equal brute-force closure: B3 length <= 8, B4 length <= 6")
def test_summit_against_brute_force(request):
    checked = 0
    for n, top in ((3, 8), (4, 6)):
        g = artin(n)
        for length in range(1, top + 1):
            pool = positive_elements(g, length)
            left = set(pool)
            while left:
                a = min(left)
                cls = positive_class(g, a, pool)
                left -= cls
                graph, _ = build_graph(summit_representative(a))
                assert set(graph.vertices) == brute_summit(cls)
                checked += 1
    request.node.criterion_note = f"{checked} classes"


@criterion("6e Artin and BKL conjugacy verdicts agree on 200 pairs in B4")
def test_artin_bkl_agree(request):
    rng = random.Random(77)
    g = artin(4)
    positives = 0
    for k in range(200):
        u = [(rng.randrange(3), 1) for _ in range(rng.randrange(1, 7))]
        if k % 2:
            c = [(rng.randrange(3), rng.choice((1, -1))) for _ in range(rng.randrange(1, 6))]
            v = [(i, -e) for i, e in reversed(c)] + u + c
        else:
            v = [(rng.randrange(3), 1) for _ in range(len(u))]
        a, b = g.from_atom_word(u), g.from_atom_word(v)
        verdict = conjugacy_witness(a, b) is not None
        assert verdict == (conjugacy_witness(artin_to_bkl(a), artin_to_bkl(b)) is not None)
        positives += verdict
    request.node.criterion_note = f"{positives} conjugate, {200 - positives} not"


@criterion("7 chain decomposition on 100 random summit pairs")
def test_chain_decomposition(request):
    rng = random.Random(31)
    steps = 0
    with Clock() as clock:
        for k in range(100):
            g = artin(3 + k % 3)
            profile = summit_representative(_random_positive(g, rng, rng.randrange(2, 7)))
            graph, _ = build_graph(profile)
            u = rng.choice(graph.vertices)
            # a positive conjugator from a random walk, sometimes padded by Δ^2
            x, w = g.one(), u
            for _ in range(rng.randrange(1, 6)):
                arrow = rng.choice(graph.out_arrows(w))
                x, w = x * g.simple_element(arrow.label), arrow.target
            if k % 4 == 0:
                x = x * g.delta_power(2)
            chain = chain_decompose(u, x, profile)
            prod, cur = g.one(), u
            for s, nxt in chain:
                assert s in minimal_simple_conjugators(cur, profile)
                assert nxt == cur.conjugate(g.simple_element(s)) and in_summit(nxt, profile)
                prod, cur = prod * g.simple_element(s), nxt
            assert prod == x and cur == u.conjugate(x)
            steps += len(chain)
    request.node.criterion_note = f"{steps} steps, {clock.seconds:.1f} s"
    assert clock.seconds < 60


@criterion("8 reported only: 5 strands, lengths 4 to 6, class counts and generator maxima")
def test_reported_scaling(request):
    g = artin(5)
    parts = []
    for length, level in positive_levels(g, 6):
        if length < 4:
            continue
        with Clock() as clock:
            rows = class_rows(g, length, level, cap=100_000)
        parts.append(
            f"l={length}: {len(rows)} classes, max raw {max(r.raw_generators for r in rows)}, "
            f"max reduced {max(r.reduced_generators for r in rows)}, {clock.seconds:.1f} s"
        )
    request.node.criterion_note = "; ".join(parts)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
