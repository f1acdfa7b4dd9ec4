import random

import pytest

from topeorth.cycles import SymmetricCycle, distinguished_cycle, find_symmetric_cycle
from topeorth.decomp import brute_force_decompose, brute_force_members, decompose
from topeorth.errors import CapExceeded
from topeorth.instances import arrangement_instance, hypercube_instance
from topeorth.signvec import SignVector, negate, reorient, tope_sum

from .oracles import brute_minimal_subset

P = SignVector.parse


def test_vertex_decomposes_as_itself(cube):
    _, c = cube(4)
    for k, v in enumerate(c.vertices):
        d = decompose(v, c)
        assert d.members == {v} and d.q_size == 1


def test_n3_example(cube):
    _, c = cube(3)
    d = decompose(P("+-+"), c)
    assert d.coefficients == (1, -1, 1)
    assert d.members == {P("+++"), P("+--"), P("--+")}
    # frozen from the independent subset enumeration in tests/oracles.py
    hits = brute_minimal_subset(P("+-+"), c.vertices)
    assert len(hits) == 1 and {c.vertices[i] for i in hits[0]} == d.members


def test_n5_example(cube):
    _, c = cube(5)
    d = decompose(P("+-+-+"), c)
    assert d.q_size == 5 and d.coefficients == (1, -1, 1, -1, 1)
    hits = brute_minimal_subset(P("+-+-+"), c.vertices)
    assert len(hits) == 1 and {c.vertices[i] for i in hits[0]} == d.members


@pytest.mark.parametrize("n", [3, 5])
def test_agrees_with_brute_force_exhaustively(cube, n):
    h, c = cube(n)
    for T in h.topes:
        assert decompose(T, c).members == brute_force_decompose(T, c).members


def test_brute_force_first_vertex(cube):
    _, c = cube(4)
    assert brute_force_members(c[0], c) == {c[0]}


def test_brute_force_cap():
    h = hypercube_instance(11)
    c = distinguished_cycle(h, SignVector.all_plus(11), list(range(1, 12)))
    with pytest.raises(CapExceeded):
        brute_force_decompose(c[0], c)


def test_not_a_tope():
    inst = arrangement_instance(3, 5, seed=0)
    c = find_symmetric_cycle(inst, inst.topes[0])
    outside = next(negate(T).flip(1) for T in hypercube_instance(5).topes
                   if negate(T).flip(1) not in inst)
    with pytest.raises(ValueError):
        decompose(outside, c)


def _cycles_for_invariants():
    rng = random.Random(11)
    out = []
    for n in (3, 4, 5, 6):
        h = hypercube_instance(n)
        base = SignVector(tuple(rng.choice((1, -1)) for _ in range(n)))
        out.append(distinguished_cycle(h, base, rng.sample(range(1, n + 1), n)))
    for d, n in [(3, 5), (3, 6), (4, 6)]:
        inst = arrangement_instance(d, n, seed=0)
        out.append(find_symmetric_cycle(inst, inst.topes[len(inst) // 3]))
    return out


@pytest.mark.parametrize("c", _cycles_for_invariants(), ids=lambda c: f"n{c.n}-{len(c.instance)}")
def test_decomposition_invariants(c):
    n = c.n
    for T in c.instance.topes:
        d = decompose(T, c)
        assert tope_sum(d.members) == tuple(T)
        assert len(d.members) == d.q_size and d.q_size % 2 == 1
        assert d.members <= set(c.vertices)
        assert decompose(negate(T), c).members == {negate(m) for m in d.members}
        for w in range(1, 2 * n):
            assert decompose(T, c, window=w).members == d.members


def test_reorientation_equivariance():
    rng = random.Random(5)
    for n in (3, 4, 5):
        h = hypercube_instance(n)
        c = distinguished_cycle(h, SignVector.all_plus(n), rng.sample(range(1, n + 1), n))
        for _ in range(4):
            W = SignVector(tuple(rng.choice((1, -1)) for _ in range(n)))
            cw = SymmetricCycle(h, tuple(reorient(v, W) for v in c.vertices))
            for T in h.topes:
                moved = decompose(reorient(T, W), cw).members
                assert moved == {reorient(m, W) for m in decompose(T, c).members}
