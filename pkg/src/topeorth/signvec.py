"""Sign vectors with full support, and the few operations on them we need.

Entries are stored as a tuple of +1/-1.  Ground elements are numbered
1..n, so ``separation_set`` returns 1-based element labels while Python
indexing into ``entries`` stays 0-based.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import CodecError, LengthMismatch

_CHARS = {"+": 1, "-": -1}


@dataclass(frozen=True, order=False)
class SignVector:
    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(self.entries)
        if not entries:
            raise ValueError("a sign vector needs at least one entry")
        for x in entries:
            if x != 1 and x != -1:
                raise ValueError(f"sign vector entries must be +1 or -1, got {x!r}")
        object.__setattr__(self, "entries", tuple(int(x) for x in entries))

    @classmethod
    def parse(cls, text: str) -> "SignVector":
        if not text:
            raise CodecError("empty sign vector string")
        out = []
        for pos, ch in enumerate(text, start=1):
            if ch not in _CHARS:
                raise CodecError(f"illegal character {ch!r} at position {pos}")
            out.append(_CHARS[ch])
        return cls(tuple(out))

    @classmethod
    def all_plus(cls, n: int) -> "SignVector":
        return cls((1,) * n)

    def __str__(self):
        return "".join("+" if x > 0 else "-" for x in self.entries)

    def __repr__(self):
        return f"SignVector({str(self)!r})"

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __neg__(self):
        return negate(self)

    def __lt__(self, other: "SignVector"):
        # canonical order is the string order, where "+" sorts before "-"
        return (len(self), str(self)) < (len(other), str(other))

    def flip(self, element: int) -> "SignVector":
        """Return a copy with ground element ``element`` (1-based) negated."""
        e = list(self.entries)
        e[element - 1] = -e[element - 1]
        return SignVector(tuple(e))


@dataclass(frozen=True)
class GroundSubset:
    n: int
    members: frozenset[int]

    def __post_init__(self):
        members = frozenset(self.members)
        if any(not 1 <= e <= self.n for e in members):
            raise ValueError(f"subset {sorted(members)} not contained in [1..{self.n}]")
        object.__setattr__(self, "members", members)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(sorted(self.members))

    def __contains__(self, e):
        return e in self.members

    def sorted(self) -> list[int]:
        return sorted(self.members)

    def complement(self) -> "GroundSubset":
        return GroundSubset(self.n, frozenset(range(1, self.n + 1)) - self.members)


def _check_lengths(u: SignVector, v: SignVector):
    if len(u) != len(v):
        raise LengthMismatch(f"sign vectors of lengths {len(u)} and {len(v)}")


def negate(v: SignVector) -> SignVector:
    return SignVector(tuple(-x for x in v.entries))


def reorient(v: SignVector, w: SignVector) -> SignVector:
    """Componentwise product; ``reorient(v, v)`` is the all-plus vector."""
    _check_lengths(v, w)
    return SignVector(tuple(a * b for a, b in zip(v.entries, w.entries)))


def separation_set(u: SignVector, v: SignVector) -> GroundSubset:
    _check_lengths(u, v)
    return GroundSubset(
        len(u), frozenset(i for i, (a, b) in enumerate(zip(u.entries, v.entries), 1) if a != b)
    )


def tope_sum(vs: Iterable[SignVector]) -> tuple[int, ...]:
    vs = list(vs)
    if not vs:
        raise ValueError("tope_sum of an empty list")
    n = len(vs[0])
    total = [0] * n
    for v in vs:
        if len(v) != n:
            raise LengthMismatch(f"sign vectors of lengths {n} and {len(v)}")
        for i, x in enumerate(v.entries):
            total[i] += x
    return tuple(total)


def parse(text: str) -> SignVector:
    return SignVector.parse(text)


def format_sign_vector(v: SignVector) -> str:
    return str(v)


def parse_many(texts: Sequence[str]) -> list[SignVector]:
    return [SignVector.parse(t) for t in texts]
