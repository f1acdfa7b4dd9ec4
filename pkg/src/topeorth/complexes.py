"""Simplicial complexes from tope decompositions, and their long f-vectors."""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from math import comb
from typing import Iterable

from .decomp import Decomposition
from .errors import CapExceeded
from .signvec import SignVector, separation_set

FACE_ENUMERATION_CAP = 20


def _maximal(sets: Iterable[frozenset[int]]) -> list[frozenset[int]]:
    uniq = set(sets)
    return [s for s in uniq if not any(s < o for o in uniq)]


@dataclass(frozen=True)
class SimplicialComplex:
    """A complex on the vertex set [n], stored by its facets."""

    n: int
    facets: tuple[frozenset[int], ...]

    def __post_init__(self):
        facets = [frozenset(f) for f in self.facets]
        for f in facets:
            if any(not 1 <= v <= self.n for v in f):
                raise ValueError(f"facet {sorted(f)} not contained in [1..{self.n}]")
        facets = sorted(_maximal(facets), key=lambda f: (len(f), sorted(f)))
        object.__setattr__(self, "facets", tuple(facets))

    @classmethod
    def from_generators(cls, n: int, generators: Iterable[Iterable[int]]) -> "SimplicialComplex":
        return cls(n, tuple(frozenset(g) for g in generators))

    def faces(self) -> set[frozenset[int]]:
        if self.n > FACE_ENUMERATION_CAP:
            raise CapExceeded(f"face enumeration capped at n <= {FACE_ENUMERATION_CAP}")
        out: set[frozenset[int]] = {frozenset()}
        for f in self.facets:
            members = sorted(f)
            for r in range(1, len(members) + 1):
                out.update(frozenset(c) for c in itertools.combinations(members, r))
        return out

    def sorted_facets(self) -> list[list[int]]:
        return sorted(sorted(f) for f in self.facets)

    def to_dict(self) -> dict:
        return {"n": self.n, "facets": self.sorted_facets()}

    def to_json(self) -> str:
        return json.dumps(self.to_dict()) + "\n"


def lambda_complex(T: SignVector, D: Decomposition) -> SimplicialComplex:
    """Facets are the inclusion-maximal complements [n] - S(T, Q), Q in D.members."""
    if D.tope != T:
        raise ValueError(f"decomposition is of {D.tope}, not {T}")
    gens = [separation_set(T, Q).complement().members for Q in D.members]
    return SimplicialComplex(len(T), tuple(gens))


def long_f_vector(K: SimplicialComplex, t: int) -> tuple[int, ...]:
    """Face counts by cardinality 0..t."""
    if t < K.n:
        raise ValueError(f"padding t={t} is smaller than the vertex count {K.n}")
    f = [0] * (t + 1)
    for face in K.faces():
        f[len(face)] += 1
    return tuple(f)


def count_faces_inclusion_exclusion(K: SimplicialComplex) -> int:
    """Number of faces, as |union of the facets' power sets|.

    Independent of ``faces``: the power sets of F_1..F_r intersect in the
    power set of their intersection.
    """
    total = 0
    for r in range(1, len(K.facets) + 1):
        for group in itertools.combinations(K.facets, r):
            common = frozenset.intersection(*group)
            total += (-1) ** (r + 1) * 2 ** len(common)
    return total


def beta_vector(m: int, t: int) -> tuple[int, ...]:
    if not 0 < m <= t:
        raise ValueError(f"beta vector needs 0 < m <= t, got m={m}, t={t}")
    return tuple(comb(m, j) for j in range(t + 1))


def simplex_boundary(k: int, t: int) -> SimplicialComplex:
    """All proper faces of the simplex on [k], as a complex on [k]."""
    if k < 1:
        raise ValueError("k must be positive")
    if k > t:
        raise ValueError(f"k={k} exceeds t={t}")
    if k == 1:
        return SimplicialComplex(1, (frozenset(),))
    return SimplicialComplex(k, tuple(frozenset(c) for c in itertools.combinations(range(1, k + 1), k - 1)))
