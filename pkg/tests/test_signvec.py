import pytest
from hypothesis import given, strategies as st

from topeorth.errors import CodecError, LengthMismatch
from topeorth.signvec import SignVector, negate, reorient, separation_set, tope_sum

P = SignVector.parse


def sign_vectors(n=None):
    size = st.integers(1, 12) if n is None else st.just(n)
    return size.flatmap(lambda k: st.lists(st.sampled_from([1, -1]), min_size=k, max_size=k)
                        .map(lambda xs: SignVector(tuple(xs))))


def same_length_pair():
    return st.integers(1, 12).flatmap(lambda k: st.tuples(sign_vectors(k), sign_vectors(k)))


@pytest.mark.parametrize("src, expected", [("+++", "---"), ("+-+", "-+-")])
def test_negate(src, expected):
    assert negate(P(src)) == P(expected)


@pytest.mark.parametrize("v, w, expected", [
    ("+-+", "+-+", "+++"),
    ("+-+", "+++", "+-+"),
    ("+-", "--", "-+"),
])
def test_reorient(v, w, expected):
    assert reorient(P(v), P(w)) == P(expected)


def test_reorient_length_mismatch():
    with pytest.raises(LengthMismatch):
        reorient(P("+-"), P("+-+"))


def test_separation_set_examples():
    assert separation_set(P("+-+"), P("+++")).sorted() == [2]
    T = P("+--+-")
    assert separation_set(T, T).sorted() == []
    assert separation_set(T, negate(T)).sorted() == [1, 2, 3, 4, 5]
    with pytest.raises(LengthMismatch):
        separation_set(P("+"), P("++"))


def test_tope_sum_examples():
    assert tope_sum([P("+++"), P("+--"), P("--+")]) == (1, -1, 1)
    T = P("+-+-+-")
    assert tope_sum([T, negate(T)]) == (0,) * 6
    assert tope_sum([T]) == (1, -1, 1, -1, 1, -1)
    with pytest.raises(ValueError):
        tope_sum([])
    with pytest.raises(LengthMismatch):
        tope_sum([P("++"), P("+++")])


def test_codec():
    assert P("+-+").entries == (1, -1, 1)
    assert P("++++").entries == (1, 1, 1, 1)
    with pytest.raises(CodecError, match="position 2"):
        P("+x-")
    with pytest.raises(CodecError):
        P("")
    with pytest.raises(CodecError):
        P("1010")


def test_entries_must_be_signs():
    with pytest.raises(ValueError):
        SignVector((1, 0, -1))


@given(sign_vectors())
def test_codec_roundtrip_and_involution(v):
    assert P(str(v)) == v
    assert negate(negate(v)) == v
    assert reorient(v, v) == SignVector.all_plus(len(v))


@given(same_length_pair())
def test_separation_properties(pair):
    u, v = pair
    sep = separation_set(u, v)
    assert len(sep) == sum(a != b for a, b in zip(u, v))
    assert sep == separation_set(v, u)
    assert sep == separation_set(negate(u), negate(v))
    assert separation_set(reorient(u, v), SignVector.all_plus(len(u))) == sep


@given(st.lists(sign_vectors(5), min_size=1, max_size=6))
def test_sum_closed_under_negation_is_zero(vs):
    assert tope_sum(vs + [negate(v) for v in vs]) == (0,) * 5
