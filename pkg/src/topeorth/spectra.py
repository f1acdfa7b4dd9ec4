"""Integer transform matrices, long h-vectors and the relations they satisfy.

Vectors are row vectors (tuples of ints) and multiply matrices from the
left.  Rows and columns are indexed from 0, so matrices for a padding
parameter t have order t+1.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from operator import mul
from typing import Sequence

from .complexes import beta_vector, long_f_vector, simplex_boundary
from .errors import InternalInconsistency
from .exact import solve_in_span

Matrix = tuple[tuple[int, ...], ...]
Vector = tuple[int, ...]


class Transform(enum.Enum):
    BACK_IDENTITY = "BackIdentity"
    FORWARD_SHIFT = "ForwardShift"
    SIGNED_BINOMIAL = "SignedBinomial"
    M_KERNEL = "MKernel"


# -- small exact matrix helpers -------------------------------------------


def identity(t: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(t + 1)) for i in range(t + 1))


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if len(a[0]) != len(b):
        raise ValueError(f"cannot multiply {len(a)}x{len(a[0])} by {len(b)}x{len(b[0])}")
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def matpow(a: Matrix, k: int) -> Matrix:
    out = identity(len(a) - 1)
    for _ in range(k):
        out = matmul(out, a)
    return out


def vecmat(v: Sequence[int], a: Matrix) -> Vector:
    if len(v) != len(a):
        raise ValueError(f"vector of length {len(v)} against matrix of order {len(a)}")
    return tuple(sum(map(mul, v, col)) for col in zip(*a))


def dot(u: Sequence[int], v: Sequence[int]) -> int:
    if len(u) != len(v):
        raise ValueError(f"vectors of lengths {len(u)} and {len(v)}")
    return sum(x * y for x, y in zip(u, v))


@lru_cache(maxsize=None)
def pascal_row(m: int) -> tuple[int, ...]:
    """Binomials C(m, 0..m) by the Pascal recurrence."""
    if m == 0:
        return (1,)
    prev = pascal_row(m - 1)
    return (1,) + tuple(prev[j - 1] + prev[j] for j in range(1, m)) + (1,)


def binom(m: int, j: int) -> int:
    if j < 0 or m < 0 or j > m:
        return 0
    return pascal_row(m)[j]


# -- the four transforms --------------------------------------------------


@lru_cache(maxsize=None)
def back_identity(t: int) -> Matrix:
    return tuple(tuple(int(i + j == t) for j in range(t + 1)) for i in range(t + 1))


@lru_cache(maxsize=None)
def forward_shift(t: int) -> Matrix:
    return tuple(tuple(int(j - i == 1) for j in range(t + 1)) for i in range(t + 1))


@lru_cache(maxsize=None)
def signed_binomial(t: int) -> Matrix:
    return tuple(tuple((-1 if (j - i) % 2 else 1) * binom(t - i, j - i) for j in range(t + 1))
                 for i in range(t + 1))


@lru_cache(maxsize=None)
def unsigned_binomial(t: int) -> Matrix:
    return tuple(tuple(binom(t - i, j - i) for j in range(t + 1)) for i in range(t + 1))


@lru_cache(maxsize=None)
def m_kernel(t: int) -> Matrix:
    """Entries (-1)^(i+j) C(i+j, i); checked against U S S^T U on construction."""
    closed = tuple(tuple((-1) ** (i + j) * binom(i + j, i) for j in range(t + 1))
                   for i in range(t + 1))
    if closed != m_kernel_product(t):
        raise InternalInconsistency(f"closed form of M({t}) disagrees with U S S^T U")
    return closed


def m_kernel_product(t: int) -> Matrix:
    u, s = back_identity(t), signed_binomial(t)
    return matmul(matmul(matmul(u, s), transpose(s)), u)


def build_transform(kind: Transform | str, t: int) -> Matrix:
    if t < 0:
        raise ValueError("t must be nonnegative")
    kind = Transform(kind)
    return {
        Transform.BACK_IDENTITY: back_identity,
        Transform.FORWARD_SHIFT: forward_shift,
        Transform.SIGNED_BINOMIAL: signed_binomial,
        Transform.M_KERNEL: m_kernel,
    }[kind](t)


# -- long vectors ---------------------------------------------------------


def _pad(f: Sequence[int], t: int) -> Vector:
    f = tuple(f)
    if len(f) != t + 1:
        raise ValueError(f"f-vector has length {len(f)}, expected {t + 1}")
    return f


@lru_cache(maxsize=None)
def _shift_power(t: int, k: int) -> Matrix:
    return matpow(forward_shift(t), k)


@lru_cache(maxsize=None)
def _raw_kernel(s: int, t: int) -> Matrix:
    return matmul(_shift_power(t, t - s), m_kernel(t))


def omega_long_f(f: Sequence[int], m: int, t: int) -> Vector:
    """(beta(m;t) - f) T(t)^(t-m) U(t): the long f-vector of the polytope boundary."""
    f = _pad(f, t)
    diff = [b - x for b, x in zip(beta_vector(m, t), f)]
    return vecmat(vecmat(diff, _shift_power(t, t - m)), back_identity(t))


def long_h_vector(f: Sequence[int], m: int, t: int) -> Vector:
    return vecmat(omega_long_f(f, m, t), signed_binomial(t))


def polytope_anomalies(g: Sequence[int], m: int) -> list[str]:
    """Necessary conditions on g = omega_long_f(f, m, t) that fail.

    A boundary complex of an (m-3)-polytope with m vertices has nonnegative
    face counts, exactly m vertices, and Euler characteristic sum_j (-1)^j g_j
    equal to (-1)^(m+1) once the empty face is counted.
    """
    out = []
    if any(x < 0 for x in g):
        out.append("negative_omega")
    if len(g) < 2 or g[1] != m:
        out.append("vertex_count")
    if sum((-1) ** j * x for j, x in enumerate(g)) != (-1) ** (m + 1):
        out.append("euler")
    return out


def check_dehn_sommerville(h: Sequence[int], variant: str) -> bool:
    t = len(h) - 1
    if variant == "symmetric":
        return all(h[k] == h[t - k] for k in range(t + 1))
    if variant == "antisymmetric":
        return all(h[k] == -h[t - k] for k in range(t + 1))
    raise ValueError(f"unknown variant {variant!r}")


def iota_product(h: Sequence[int]) -> int:
    return sum(h)


def simplex_boundary_h(k: int, t: int) -> Vector:
    return vecmat(long_f_vector(simplex_boundary(k, t), t), signed_binomial(t))


@dataclass(frozen=True)
class SpanResult:
    member: bool
    ks: tuple[int, ...]
    coefficients: tuple[Fraction, ...] | None

    def to_dict(self) -> dict:
        coeffs = None if self.coefficients is None else [str(c) for c in self.coefficients]
        return {"member": self.member, "k": list(self.ks), "coefficients": coeffs}


def span_ks(s: int, t: int) -> tuple[int, ...]:
    """Simplex sizes whose boundary h-vectors span the symmetric long h-vectors."""
    first = 1 if t % 2 == 0 else 2
    return tuple(range(first, s - 1, 2))


def span_membership(h: Sequence[int], s: int, t: int) -> SpanResult:
    if len(h) != t + 1:
        raise ValueError(f"h-vector has length {len(h)}, expected {t + 1}")
    if not s < t:
        raise ValueError("span membership needs s < t")
    ks = span_ks(s, t)
    basis = [simplex_boundary_h(k, t) for k in ks]
    if not basis:
        ok = not any(h)
        return SpanResult(ok, ks, () if ok else None)
    coeffs = solve_in_span(basis, h)
    if coeffs is None:
        return SpanResult(False, ks, None)
    return SpanResult(True, ks, tuple(coeffs))


def eigenvector_check(h: Sequence[int], side: str = "left") -> int | None:
    """+1 or -1 if h is an eigenvector of U(t) with that eigenvalue, else None."""
    t = len(h) - 1
    u = back_identity(t)
    if side == "left":
        image = vecmat(h, u)
    elif side == "right":
        image = tuple(dot(row, h) for row in u)
    else:
        raise ValueError(f"unknown side {side!r}")
    h = tuple(h)
    if image == h:
        return 1
    if image == tuple(-x for x in h):
        return -1
    return None


@dataclass(frozen=True)
class OrthogonalityReport:
    raw_value: int
    hh_value: int

    @property
    def orthogonal(self) -> bool:
        return self.raw_value == 0


def orthogonality_check(f1: Sequence[int], s: int, f2: Sequence[int], t: int) -> OrthogonalityReport:
    """Evaluate the orthogonality form two ways and insist they agree.

    The raw route is (beta(s;t) - f1) T^(t-s) M(t) (beta(t;t) - f2)^T; the
    factored route is the inner product of the two long h-vectors.
    """
    f1, f2 = _pad(f1, t), _pad(f2, t)
    if not s < t:
        raise ValueError(f"orthogonality check needs s < t, got s={s}, t={t}")
    left = [b - x for b, x in zip(beta_vector(s, t), f1)]
    right = [b - x for b, x in zip(beta_vector(t, t), f2)]
    left = vecmat(left, _raw_kernel(s, t))
    raw = dot(left, right)
    hh = dot(long_h_vector(f1, s, t), long_h_vector(f2, t, t))
    if raw != hh:
        raise InternalInconsistency(f"raw form {raw} differs from <h', h''> = {hh}")
    return OrthogonalityReport(raw, hh)
