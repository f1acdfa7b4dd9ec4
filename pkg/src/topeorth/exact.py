"""Exact linear algebra over the integers and rationals.

No floating point is used here.  Python integers never overflow, so the
only failure modes are singular or inconsistent systems.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence


class SingularMatrix(ArithmeticError):
    pass


def bareiss_solve(a: Sequence[Sequence[int]], b: Sequence[int]) -> list[Fraction]:
    """Solve the square integer system ``a x = b``.

    Forward elimination is fraction-free (Bareiss), so every intermediate
    entry is an integer minor of the augmented matrix; the final back
    substitution is done in exact rationals.
    """
    n = len(a)
    if any(len(row) != n for row in a) or len(b) != n:
        raise ValueError("bareiss_solve needs a square matrix and matching right-hand side")
    m = [list(map(int, row)) + [int(rhs)] for row, rhs in zip(a, b)]
    prev = 1
    for k in range(n):
        pivot = next((r for r in range(k, n) if m[r][k] != 0), None)
        if pivot is None:
            raise SingularMatrix(f"matrix is singular (no pivot in column {k})")
        if pivot != k:
            m[k], m[pivot] = m[pivot], m[k]
        for i in range(k + 1, n):
            for j in range(k + 1, n + 1):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                # exact by Sylvester's identity
                q, r = divmod(num, prev)
                assert r == 0
                m[i][j] = q
            m[i][k] = 0
        prev = m[k][k]
    x = [Fraction(0)] * n
    for i in reversed(range(n)):
        acc = Fraction(m[i][n])
        for j in range(i + 1, n):
            acc -= m[i][j] * x[j]
        x[i] = acc / m[i][i]
    return x


def determinant(a: Sequence[Sequence[int]]) -> int:
    """Integer determinant via Bareiss elimination."""
    n = len(a)
    m = [list(map(int, row)) for row in a]
    sign, prev = 1, 1
    for k in range(n):
        pivot = next((r for r in range(k, n) if m[r][k] != 0), None)
        if pivot is None:
            return 0
        if pivot != k:
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1] if n else 1


def solve_in_span(basis: Sequence[Sequence[int]], target: Sequence[int]) -> list[Fraction] | None:
    """Coefficients ``c`` with ``sum c_i basis[i] == target``, or None.

    The basis vectors need not be independent; when they are not, one
    particular solution (free variables set to zero) is returned.
    """
    length = len(target)
    if any(len(v) != length for v in basis):
        raise ValueError("basis vectors and target differ in length")
    k = len(basis)
    # rows = coordinates, columns = basis vectors, augmented with target
    rows = [[Fraction(basis[c][r]) for c in range(k)] + [Fraction(target[r])] for r in range(length)]
    pivots = []
    r = 0
    for c in range(k):
        p = next((i for i in range(r, length) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        rows[r] = [x / piv for x in rows[r]]
        for i in range(length):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == length:
            break
    if any(rows[i][k] != 0 for i in range(r, length)):
        return None
    coeffs = [Fraction(0)] * k
    for i, c in enumerate(pivots):
        coeffs[c] = rows[i][k]
    return coeffs
