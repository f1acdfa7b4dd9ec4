"""Symmetric 2n-cycles in tope graphs."""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .errors import InstanceFormatError
from .instances import OMInstance, ValidationReport
from .signvec import SignVector, negate, separation_set

DEFAULT_BUDGET = 10**6


@dataclass(frozen=True)
class SymmetricCycle:
    instance: OMInstance
    vertices: tuple[SignVector, ...]

    @property
    def n(self) -> int:
        return self.instance.n

    def __len__(self):
        return len(self.vertices)

    def __getitem__(self, k: int) -> SignVector:
        return self.vertices[k % len(self.vertices)]

    def flip_sequence(self) -> list[int]:
        """Element flipped on each step R^k -> R^{k+1}, k = 0..n-1."""
        out = []
        for k in range(self.n):
            sep = separation_set(self[k], self[k + 1])
            if len(sep) != 1:
                raise ValueError(f"positions {k} and {k + 1} are not adjacent")
            out.extend(sep)
        return out

    def to_dict(self) -> dict:
        return {"instance_digest": self.instance.digest(),
                "vertices": [str(v) for v in self.vertices]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1) + "\n"


class NotFound(Exception):
    """Backtracking ran out of budget or options; says nothing about existence."""


def _mirror(first_half: Sequence[SignVector]) -> tuple[SignVector, ...]:
    return tuple(first_half) + tuple(negate(v) for v in first_half)


def distinguished_cycle(inst: OMInstance, base: SignVector, order: Sequence[int]) -> SymmetricCycle:
    """R^k is ``base`` with elements order[0..k-1] negated; the rest by antipodality."""
    if not inst.is_hypercube:
        raise ValueError("distinguished_cycle needs a hypercube instance")
    n = inst.n
    if len(base) != n:
        raise ValueError(f"base has length {len(base)}, expected {n}")
    if sorted(order) != list(range(1, n + 1)):
        raise ValueError(f"order {list(order)} is not a permutation of 1..{n}")
    half = [base]
    for e in order[:-1]:
        half.append(half[-1].flip(e))
    return SymmetricCycle(inst, _mirror(half))


def find_symmetric_cycle(inst: OMInstance, start: SignVector,
                         budget: int = DEFAULT_BUDGET) -> SymmetricCycle:
    """Depth-first search over flip orders, smallest element first.

    Every intermediate sign vector must be a tope.  Each visited search
    node costs one unit of ``budget``; raises ``NotFound`` on exhaustion.
    """
    if budget <= 0:
        raise ValueError("budget must be positive")
    if start not in inst:
        raise ValueError(f"{start} is not a tope of the instance")
    n = inst.n
    path = [start]
    used = [False] * (n + 1)
    nodes = 0

    def extend() -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise NotFound(f"node budget {budget} exhausted")
        if len(path) == n:
            return True
        cur = path[-1]
        for e in range(1, n + 1):
            if used[e]:
                continue
            nxt = cur.flip(e)
            if nxt not in inst:
                continue
            used[e] = True
            path.append(nxt)
            if extend():
                return True
            path.pop()
            used[e] = False
        return False

    if not extend():
        raise NotFound(f"no symmetric cycle through {start}")
    return SymmetricCycle(inst, _mirror(path))


def find_cycle_with_witness(inst: OMInstance, min_q: int,
                            budget: int = DEFAULT_BUDGET) -> SymmetricCycle:
    """First cycle, over start topes in canonical order, that decomposes
    some tope into at least ``min_q`` vertices."""
    from .decomp import decompose

    for start in inst.topes:
        try:
            c = find_symmetric_cycle(inst, start, budget)
        except NotFound:
            continue
        if any(decompose(T, c).q_size >= min_q for T in inst.topes):
            return c
    raise NotFound(f"no cycle found with a decomposition of size >= {min_q}")


def validate_cycle(inst: OMInstance, c: SymmetricCycle) -> ValidationReport:
    rep = ValidationReport()
    n = inst.n
    V = c.vertices
    rep.add("length", len(V) == 2 * n, f"{len(V)} vertices, expected {2 * n}")
    if len(V) != 2 * n:
        return rep
    outside = [str(v) for v in V if v not in inst]
    rep.add("membership", not outside, f"not topes: {outside}" if outside else "")
    bad = [k for k in range(2 * n)
           if len(V[k]) != n or len(V[(k + 1) % (2 * n)]) != n
           or len(separation_set(V[k], V[(k + 1) % (2 * n)])) != 1]
    rep.add("adjacency", not bad, f"non-adjacent at positions {bad}" if bad else "")
    anti = [k for k in range(n) if V[k + n] != negate(V[k])]
    rep.add("antipodality", not anti, f"R^(k+n) != -R^k for k in {anti}" if anti else "")
    rep.add("distinctness", len(set(V)) == 2 * n, "")
    flips: dict[int, int] = {}
    if not bad:
        for k in range(2 * n):
            for e in separation_set(V[k], V[(k + 1) % (2 * n)]):
                flips[e] = flips.get(e, 0) + 1
    rep.add("flip_counts", not bad and all(flips.get(e) == 2 for e in range(1, n + 1)), "")
    return rep


def cycle_from_json(text: str, inst: OMInstance) -> SymmetricCycle:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(exc.msg, exc.lineno) from None
    if not isinstance(data, dict) or "vertices" not in data:
        raise InstanceFormatError("cycle file must hold an object with 'vertices'")
    digest = data.get("instance_digest")
    if digest != inst.digest():
        raise InstanceFormatError("cycle belongs to a different instance (digest mismatch)")
    try:
        verts = tuple(SignVector.parse(v) for v in data["vertices"])
    except (ValueError, TypeError) as exc:
        raise InstanceFormatError(f"bad vertex: {exc}") from None
    return SymmetricCycle(inst, verts)


def save_cycle(c: SymmetricCycle, path) -> None:
    Path(path).write_text(c.to_json())


def load_cycle(path, inst: OMInstance) -> SymmetricCycle:
    return cycle_from_json(Path(path).read_text(), inst)
