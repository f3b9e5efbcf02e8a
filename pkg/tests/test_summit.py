import random

import pytest

from garside.artin import artin
from garside.bkl import bkl
from garside.summit import (
    NotInSummitError,
    chain_decompose,
    cycling,
    decycling,
    in_summit,
    minimal_simple_conjugators,
    summit_conjugators,
    summit_representative,
)
from garside.words import parse_word

from oracles import brute_summit, positive_class, positive_elements


def nf(g, text):
    return parse_word(g, text)


def simples(g, *texts):
    return [nf(g, t).factors[0] for t in texts]


def test_cycling_of_delta_power(b4):
    for p in (-2, 0, 3):
        v = b4.delta_power(p)
        assert cycling(v) == (v, b4.identity)
        assert decycling(v) == (v, b4.identity)


def test_cycling_example(b4):
    # σ2σ1 is a single simple factor, so cycling conjugates it by itself
    v = nf(b4, "s2 s1")
    w, c = cycling(v)
    assert c == v.factors[0]
    assert w == v.conjugate(b4.simple_element(c)) == v


def test_cycling_and_decycling_are_conjugations():
    rng = random.Random(5)
    for g in (artin(4), bkl(4)):
        for _ in range(100):
            v = g.from_atom_word([(rng.randrange(len(g.atoms)), rng.choice((1, 1, -1))) for _ in range(8)])
            w, c = cycling(v)
            assert w == v.conjugate(g.simple_element(c))
            w, c = decycling(v)
            assert w == v.conjugate(g.simple_element(c).inverse())


def test_summit_representative_examples(b3, b4):
    p = summit_representative(nf(b4, "s1"))
    assert (p.representative, p.summit_inf, p.summit_sup) == (nf(b4, "s1"), 0, 1)
    assert p.witness == b4.one()

    a = nf(b3, "s2 s1 s2^-1")
    p = summit_representative(a)
    assert p.representative in (nf(b3, "s1"), nf(b3, "s2"))
    assert a.conjugate(p.witness) == p.representative

    d2 = b4.delta_power(2)
    p = summit_representative(d2)
    assert p.representative == d2 and p.witness == b4.one()


def test_summit_representative_witness_random():
    rng = random.Random(11)
    for g in (artin(3), artin(4), artin(5), bkl(4)):
        for _ in range(60):
            a = g.from_atom_word([(rng.randrange(len(g.atoms)), rng.choice((1, 1, -1))) for _ in range(10)])
            p = summit_representative(a)
            assert a.conjugate(p.witness) == p.representative
            assert p.summit_inf >= a.inf and p.summit_sup <= a.sup


def test_in_summit_examples(b4):
    p = summit_representative(nf(b4, "s1"))
    assert in_summit(p.representative, p)
    assert not in_summit(nf(b4, "s2 s1 s2^-1"), p)
    assert in_summit(nf(b4, "s2"), p)


def test_minimal_conjugator_examples(b4):
    v = nf(b4, "s1")
    assert minimal_simple_conjugators(v, summit_representative(v)) == simples(b4, "s1", "s3", "s2 s1")
    v = nf(b4, "s1 s2")
    assert set(minimal_simple_conjugators(v, summit_representative(v))) == set(simples(b4, "s1", "s3 s2 s1"))


def test_minimal_conjugators_of_delta(b4):
    # the summit class of Δ is {Δ}: the conjugators are exactly the simples fixed by τ,
    # and the minimal ones among them are σ2 and σ1σ3
    v = b4.delta_power(1)
    p = summit_representative(v)
    assert set(minimal_simple_conjugators(v, p)) == set(simples(b4, "s2", "s1 s3"))
    assert all(b4.tau(s) == s for s in summit_conjugators(v, p))


def test_minimal_conjugators_require_summit(b4):
    p = summit_representative(nf(b4, "s1"))
    with pytest.raises(NotInSummitError):
        minimal_simple_conjugators(nf(b4, "s2 s1 s2^-1"), p)


@pytest.mark.parametrize("g", [artin(3), artin(4), bkl(4)], ids=["b3", "b4", "bkl4"])
def test_minimal_conjugator_properties(g):
    rng = random.Random(len(g.atoms))
    for _ in range(40):
        a = g.from_atom_word([(rng.randrange(len(g.atoms)), 1) for _ in range(rng.randrange(1, 7))])
        p = summit_representative(a)
        v = p.representative
        conj = summit_conjugators(v, p)
        mins = minimal_simple_conjugators(v, p)
        assert len(mins) <= len(g.atoms)
        for m in mins:
            # no proper nontrivial divisor of m conjugates into the summit class
            assert not any(c != m and g.left_divides(c, m) for c in conj)
        for c in conj:
            assert any(g.left_divides(m, c) for m in mins)
        # at most one per atom: an atom divides at most one minimal conjugator
        for i in range(len(g.atoms)):
            assert sum(g.atom_divides(i, m) for m in mins) <= 1


def test_summit_is_a_conjugacy_invariant():
    rng = random.Random(17)
    g = artin(4)
    for _ in range(40):
        a = g.from_atom_word([(rng.randrange(3), rng.choice((1, -1))) for _ in range(7)])
        c = g.from_atom_word([(rng.randrange(3), rng.choice((1, -1))) for _ in range(5)])
        p, q = summit_representative(a), summit_representative(a.conjugate(c))
        assert (p.summit_inf, p.summit_sup) == (q.summit_inf, q.summit_sup)


@pytest.mark.parametrize("n, length", [(3, 6), (4, 4)])
def test_summit_matches_brute_force(n, length):
    from garside.centralizer import build_graph

    g = artin(n)
    pool = positive_elements(g, length)
    left = set(pool)
    while left:
        a = min(left)
        cls = positive_class(g, a, pool)
        left -= cls
        graph, _ = build_graph(summit_representative(a))
        assert set(graph.vertices) == brute_summit(cls)


def test_chain_decompose_examples(b4):
    s1 = nf(b4, "s1")
    p = summit_representative(s1)
    assert chain_decompose(s1, s1, p) == [(s1.factors[0], s1)]

    x = nf(b4, "s2 s1 s1 s2")
    chain = chain_decompose(s1, x, p)
    _check_chain(s1, x, p, chain)
    # passes through σ2 and comes back to σ1
    assert [u for _, u in chain] == [nf(b4, "s2"), s1]

    d2 = b4.delta_power(2)
    chain = chain_decompose(s1, d2, p)
    _check_chain(s1, d2, p, chain)
    assert chain[-1][1] == s1


def _check_chain(u, x, p, chain):
    g = u.structure
    prod, w = g.one(), u
    for s, nxt in chain:
        assert s in minimal_simple_conjugators(w, p)
        assert nxt == w.conjugate(g.simple_element(s))
        assert in_summit(nxt, p)
        prod, w = prod * g.simple_element(s), nxt
    assert prod == x
    assert w == u.conjugate(x)


def test_chain_decompose_rejects_bad_input(b4):
    s1 = nf(b4, "s1")
    p = summit_representative(s1)
    with pytest.raises(ValueError):
        chain_decompose(s1, nf(b4, "s1^-1"), p)
    with pytest.raises(NotInSummitError):
        chain_decompose(s1, nf(b4, "s1 s2"), p)
    with pytest.raises(NotInSummitError):
        chain_decompose(nf(b4, "s2 s1 s2^-1"), s1, p)


def test_summit_path_ends_in_summit():
    from garside.summit import summit_path

    rng = random.Random(4)
    for g in (artin(3), artin(4), bkl(4)):
        for _ in range(50):
            a = g.from_atom_word([(rng.randrange(len(g.atoms)), rng.choice((1, 1, -1))) for _ in range(9)])
            path = list(summit_path(a))
            p = summit_representative(a)
            assert path[0] == a
            assert in_summit(path[-1], p)
            assert len(set(path)) == len(path)
