"""Decomposition of a tope into the vertices of a symmetric cycle.

For a symmetric cycle R with vertices R^0..R^{2n-1}, any n consecutive
vertices form a basis of Q^n.  Writing T = sum_k lambda_k R^k over such a
window gives lambda in {-1, 0, 1}^n, and the topes picked out by the
nonzero coefficients (R^k for +1, -R^k for -1) form the unique
inclusion-minimal subset of V(R) summing to T.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cycles import SymmetricCycle
from .errors import CapExceeded, InternalInconsistency
from .exact import SingularMatrix, bareiss_solve
from .signvec import SignVector, negate, tope_sum

BRUTE_FORCE_CAP = 10


@dataclass(frozen=True)
class Decomposition:
    tope: SignVector
    cycle: SymmetricCycle
    coefficients: tuple[int, ...]
    window: int = 0

    @property
    def members(self) -> frozenset[SignVector]:
        out = set()
        for k, lam in enumerate(self.coefficients):
            if lam:
                v = self.cycle[self.window + k]
                out.add(v if lam > 0 else negate(v))
        return frozenset(out)

    @property
    def q_size(self) -> int:
        return sum(1 for lam in self.coefficients if lam)

    def sorted_members(self) -> list[SignVector]:
        return sorted(self.members, key=str)

    def to_dict(self) -> dict:
        return {"tope": str(self.tope), "q_size": self.q_size,
                "lambda": list(self.coefficients),
                "members": [str(m) for m in self.sorted_members()]}


def decompose(T: SignVector, R: SymmetricCycle, window: int = 0) -> Decomposition:
    """Solve sum_k lambda_k R^{window+k} = T exactly over n consecutive vertices."""
    if T not in R.instance:
        raise ValueError(f"{T} is not a tope of the cycle's instance")
    n = R.n
    cols = [R[window + k] for k in range(n)]
    a = [[cols[k][i] for k in range(n)] for i in range(n)]
    try:
        lam = bareiss_solve(a, list(T))
    except SingularMatrix as exc:
        raise InternalInconsistency(f"window {window} of the cycle is singular: {exc}") from None
    if any(x not in (-1, 0, 1) for x in lam):
        raise InternalInconsistency(
            f"coefficients {[str(x) for x in lam]} for {T} are not in {{-1,0,1}}")
    d = Decomposition(T, R, tuple(int(x) for x in lam), window % len(R))
    if tope_sum(d.members) != tuple(T):
        raise InternalInconsistency(f"members of the decomposition of {T} do not sum to it")
    return d


def brute_force_members(T: SignVector, R: SymmetricCycle) -> frozenset[SignVector]:
    """Smallest subset of V(R) summing to T, found by enumerating all subsets.

    Also asserts that it is the only summing subset of its size and that
    every other summing subset contains it.
    """
    n = R.n
    if n > BRUTE_FORCE_CAP:
        raise CapExceeded(f"brute force over 2^{2 * n} subsets exceeds cap n <= {BRUTE_FORCE_CAP}")
    V = np.array([list(v) for v in R.vertices], dtype=np.int8)
    m = len(V)
    sums = np.zeros((1, n), dtype=np.int8)
    for k in range(m):
        # subsets of the first k+1 vertices: old ones, then old ones plus vertex k
        sums = np.concatenate([sums, sums + V[k]])
    masks = np.arange(1 << m, dtype=np.int64)
    hits = masks[np.all(sums == np.array(list(T), dtype=np.int8), axis=1)]
    if hits.size == 0:
        raise InternalInconsistency(f"no subset of the cycle sums to {T}")
    sizes = np.array([bin(int(h)).count("1") for h in hits])
    smallest = hits[sizes == sizes.min()]
    if smallest.size != 1:
        raise InternalInconsistency(f"{smallest.size} minimum summing subsets for {T}")
    q = int(smallest[0])
    if not np.all((hits & q) == q):
        raise InternalInconsistency(f"a summing subset for {T} does not contain the minimal one")
    return frozenset(R.vertices[k] for k in range(m) if q >> k & 1)


def brute_force_decompose(T: SignVector, R: SymmetricCycle) -> Decomposition:
    members = brute_force_members(T, R)
    n = R.n
    coeffs = []
    for k in range(n):
        if R[k] in members:
            coeffs.append(1)
        elif R[k + n] in members:
            coeffs.append(-1)
        else:
            coeffs.append(0)
    return Decomposition(T, R, tuple(coeffs))
