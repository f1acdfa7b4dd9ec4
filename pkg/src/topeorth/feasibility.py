"""Exact feasibility of homogeneous strict linear systems by Fourier-Motzkin.

A system is a list of integer rows ``a``; it asks for ``x`` with
``a . x > 0`` for every row.  Eliminating one variable combines each row
with a positive coefficient against each row with a negative one using
positive multipliers, which keeps every inequality strict.  Once all
variables are gone, every surviving row reads ``0 > 0``, so the system is
feasible exactly when no rows survive.
"""
from __future__ import annotations

from math import gcd
from typing import Iterable, Sequence


def _normalize(row: Sequence[int]) -> tuple[int, ...]:
    g = 0
    for x in row:
        g = gcd(g, x)
    if g > 1:
        return tuple(x // g for x in row)
    return tuple(row)


def _eliminate(rows: set[tuple[int, ...]], col: int) -> set[tuple[int, ...]]:
    pos, neg, out = [], [], set()
    for r in rows:
        if r[col] > 0:
            pos.append(r)
        elif r[col] < 0:
            neg.append(r)
        else:
            out.add(r)
    for p in pos:
        for q in neg:
            a, b = -q[col], p[col]
            out.add(_normalize([a * x + b * y for x, y in zip(p, q)]))
    return out


def strictly_feasible(rows: Iterable[Sequence[int]]) -> bool:
    """True iff some rational ``x`` satisfies ``row . x > 0`` for all rows."""
    system = {_normalize(list(map(int, r))) for r in rows}
    if not system:
        return True
    dim = len(next(iter(system)))
    for col in range(dim):
        if any(not any(r) for r in system):
            return False
        # opposite rows r and -r can never hold together
        if any(tuple(-x for x in r) in system for r in system):
            return False
        system = _eliminate(system, col)
        if not system:
            return True
    return not system
