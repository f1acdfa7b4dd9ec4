import itertools

import pytest
from hypothesis import given, strategies as st

from topeorth.complexes import (
    SimplicialComplex,
    beta_vector,
    count_faces_inclusion_exclusion,
    lambda_complex,
    long_f_vector,
    simplex_boundary,
)
from topeorth.decomp import decompose
from topeorth.signvec import SignVector

from .oracles import faces_by_subsets

P = SignVector.parse


def test_lambda_n3(cube):
    _, c = cube(3)
    T = P("+-+")
    K = lambda_complex(T, decompose(T, c))
    assert K.sorted_facets() == [[1, 2], [1, 3], [2, 3]]


def test_lambda_n5(cube):
    _, c = cube(5)
    T = P("+-+-+")
    K = lambda_complex(T, decompose(T, c))
    assert K.sorted_facets() == sorted([[1, 3, 5], [2, 3, 5], [2, 4, 5], [1, 2, 4], [1, 3, 4]])
    assert long_f_vector(K, 5) == (1, 5, 10, 5, 0, 0)
    assert long_f_vector(K, 6) == tuple(faces_by_subsets(5, K.facets, 6)) == (1, 5, 10, 5, 0, 0, 0)


def test_lambda_n6(cube):
    _, c = cube(6)
    T = P("+-+-+-")
    K = lambda_complex(T, decompose(T, c))
    expected = [[1, 2, 4, 6], [2, 3, 5], [1, 3, 4, 6], [2, 4, 5], [1, 3, 5, 6]]
    assert K.sorted_facets() == sorted(expected)
    assert faces_by_subsets(6, expected, 6) == [1, 6, 15, 12, 3, 0, 0]
    assert long_f_vector(K, 6) == (1, 6, 15, 12, 3, 0, 0)


def test_vertex_tope_gives_full_simplex(cube):
    _, c = cube(4)
    K = lambda_complex(c[2], decompose(c[2], c))
    assert K.sorted_facets() == [[1, 2, 3, 4]]


def test_lambda_tope_mismatch(cube):
    _, c = cube(3)
    with pytest.raises(ValueError):
        lambda_complex(P("+++"), decompose(P("+-+"), c))


def test_full_simplex_f():
    assert long_f_vector(SimplicialComplex(3, (frozenset({1, 2, 3}),)), 3) == (1, 3, 3, 1)
    with pytest.raises(ValueError):
        long_f_vector(SimplicialComplex(3, (frozenset({1}),)), 2)


def test_nested_generators_collapse():
    K = SimplicialComplex.from_generators(4, [{1, 2}, {1, 2, 3}, {1, 2}, {4}])
    assert K.sorted_facets() == [[1, 2, 3], [4]]


def test_beta_vector():
    assert beta_vector(3, 3) == (1, 3, 3, 1)
    assert beta_vector(5, 6) == (1, 5, 10, 10, 5, 1, 0)
    assert all(sum(beta_vector(t, t)) == 2**t for t in range(1, 15))
    with pytest.raises(ValueError):
        beta_vector(7, 6)


def test_simplex_boundary():
    K = simplex_boundary(3, 6)
    assert K.sorted_facets() == [[1, 2], [1, 3], [2, 3]]
    assert long_f_vector(K, 6) == (1, 3, 3, 0, 0, 0, 0)
    assert long_f_vector(simplex_boundary(1, 6), 6) == (1, 0, 0, 0, 0, 0, 0)
    assert long_f_vector(simplex_boundary(2, 4), 4) == (1, 2, 0, 0, 0)
    with pytest.raises(ValueError):
        simplex_boundary(5, 4)


complexes = st.integers(1, 7).flatmap(
    lambda n: st.lists(st.frozensets(st.integers(1, n), max_size=n), min_size=1, max_size=5)
    .map(lambda fs: SimplicialComplex(n, tuple(fs))))


@given(complexes)
def test_face_count_two_ways(K):
    f = long_f_vector(K, K.n)
    assert sum(f) == len(K.faces()) == count_faces_inclusion_exclusion(K)
    assert list(f) == faces_by_subsets(K.n, K.facets, K.n)
    assert f[0] == 1


@given(complexes, st.integers(0, 4))
def test_padding_only_appends_zeros(K, extra):
    assert long_f_vector(K, K.n + extra) == long_f_vector(K, K.n) + (0,) * extra


def test_facet_count_matches_q_when_incomparable(cube):
    h, c = cube(6)
    for T in h.topes:
        d = decompose(T, c)
        gens = [frozenset(set(range(1, 7)) - {i + 1 for i in range(6) if T[i] != Q[i]}) for Q in d.members]
        if len(set(gens)) == len(gens) and not any(a < b for a, b in itertools.permutations(gens, 2)):
            assert len(lambda_complex(T, d).facets) == d.q_size
