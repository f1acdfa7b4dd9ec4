"""Tope sets of simple oriented matroids: generation, validation and file I/O."""
from __future__ import annotations

import hashlib
import itertools
import json
import random
from collections import deque
from dataclasses import dataclass, field
from math import comb
from pathlib import Path
from typing import Sequence

from .errors import CapExceeded, InstanceFormatError, ValidationFailure
from .feasibility import strictly_feasible
from .signvec import SignVector, negate, separation_set

DEFAULT_CAP_N = 14
DEFAULT_COORD_BOUND = 50
MAX_GENERATOR_ATTEMPTS = 100


@dataclass
class ValidationReport:
    checks: dict[str, bool] = field(default_factory=dict)
    details: dict[str, str] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def add(self, name: str, passed: bool, detail: str = ""):
        self.checks[name] = passed
        if detail:
            self.details[name] = detail

    def to_dict(self) -> dict:
        return {"ok": self.ok, "checks": dict(self.checks), "details": dict(self.details)}


@dataclass(frozen=True, eq=False)
class OMInstance:
    """A tope set over the ground set [n], kept in canonical string order."""

    n: int
    topes: tuple[SignVector, ...]
    source: str

    def __post_init__(self):
        topes = tuple(sorted(set(self.topes), key=str))
        if len(topes) != len(self.topes):
            raise ValueError("duplicate topes in instance")
        for T in topes:
            if len(T) != self.n:
                raise ValueError(f"tope {T} does not have length {self.n}")
        object.__setattr__(self, "topes", topes)
        object.__setattr__(self, "_members", frozenset(topes))

    def __contains__(self, T):
        return T in self._members

    def __len__(self):
        return len(self.topes)

    def __eq__(self, other):
        if not isinstance(other, OMInstance):
            return NotImplemented
        return (self.n, self.topes, self.source) == (other.n, other.topes, other.source)

    def __hash__(self):
        return hash((self.n, self.topes, self.source))

    @property
    def is_hypercube(self) -> bool:
        return len(self.topes) == 2**self.n

    def to_dict(self) -> dict:
        return {"n": self.n, "source": self.source, "topes": [str(T) for T in self.topes]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1) + "\n"

    def digest(self) -> str:
        canon = json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canon.encode()).hexdigest()

    def neighbors(self, T: SignVector) -> list[SignVector]:
        return [T.flip(e) for e in range(1, self.n + 1) if T.flip(e) in self]

    def edges(self) -> list[tuple[SignVector, SignVector]]:
        out = []
        for T in self.topes:
            for U in self.neighbors(T):
                if str(T) < str(U):
                    out.append((T, U))
        return out


def _check_cap(n: int, cap: int):
    if n > cap:
        raise CapExceeded(f"n={n} exceeds the enumeration cap {cap} (2^{n} sign vectors)")


def hypercube_instance(n: int, cap: int = DEFAULT_CAP_N) -> OMInstance:
    if n < 1:
        raise ValueError("n must be positive")
    _check_cap(n, cap)
    topes = [SignVector(s) for s in itertools.product((1, -1), repeat=n)]
    return OMInstance(n, tuple(topes), "hypercube")


# -- realizable instances -------------------------------------------------


@dataclass(frozen=True)
class GeneratorMatrix:
    """n integer vectors in Z^d, one per hyperplane normal."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        if not rows:
            raise ValueError("generator matrix has no rows")
        d = len(rows[0])
        if d < 1 or any(len(r) != d for r in rows):
            raise ValueError("generator rows must share a positive dimension")
        object.__setattr__(self, "rows", rows)
        problem = generator_problem(rows)
        if problem:
            raise ValueError(problem)

    @property
    def d(self) -> int:
        return len(self.rows[0])

    @property
    def n(self) -> int:
        return len(self.rows)


def _parallel(u: Sequence[int], v: Sequence[int]) -> bool:
    # u, v nonzero: parallel or antiparallel iff all 2x2 minors vanish
    return all(u[i] * v[j] == u[j] * v[i] for i in range(len(u)) for j in range(i + 1, len(u)))


def generator_problem(rows) -> str | None:
    for i, r in enumerate(rows, 1):
        if not any(r):
            return f"generator {i} is zero"
    for i, j in itertools.combinations(range(len(rows)), 2):
        if _parallel(rows[i], rows[j]):
            return f"generators {i + 1} and {j + 1} are parallel"
    return None


def region_count(d: int, n: int) -> int:
    """Number of regions of a generic central arrangement of n hyperplanes in R^d."""
    if not 1 <= d <= n:
        raise ValueError(f"need 1 <= d <= n, got d={d}, n={n}")
    return 2 * sum(comb(n - 1, i) for i in range(d))


def enumerate_topes(g: GeneratorMatrix, cap: int = DEFAULT_CAP_N) -> list[SignVector]:
    _check_cap(g.n, cap)
    topes = []
    for sigma in itertools.product((1, -1), repeat=g.n):
        rows = [[s * x for x in r] for s, r in zip(sigma, g.rows)]
        if strictly_feasible(rows):
            topes.append(SignVector(sigma))
    return topes


def realizable_instance(g: GeneratorMatrix, cap: int = DEFAULT_CAP_N) -> OMInstance:
    source = "realizable:" + json.dumps([list(r) for r in g.rows], separators=(",", ":"))
    return OMInstance(g.n, tuple(enumerate_topes(g, cap)), source)


def random_generic_generators(d: int, n: int, seed: int = 0,
                              coord_bound: int = DEFAULT_COORD_BOUND,
                              cap: int = DEFAULT_CAP_N) -> GeneratorMatrix:
    """Seeded integer generators in general position.

    Genericity is certified by the enumerated tope count matching
    ``region_count(d, n)``.
    """
    if coord_bound < 1:
        raise ValueError("coord_bound must be positive")
    expected = region_count(d, n)
    rng = random.Random(seed)
    for _ in range(MAX_GENERATOR_ATTEMPTS):
        rows: list[tuple[int, ...]] = []
        while len(rows) < n:
            r = tuple(rng.randint(-coord_bound, coord_bound) for _ in range(d))
            if any(r) and not any(_parallel(r, q) for q in rows):
                rows.append(r)
        g = GeneratorMatrix(tuple(rows))
        if len(enumerate_topes(g, cap)) == expected:
            return g
    raise RuntimeError(f"no generic arrangement found for d={d}, n={n} "
                       f"after {MAX_GENERATOR_ATTEMPTS} attempts")


def arrangement_instance(d: int, n: int, seed: int = 0,
                         coord_bound: int = DEFAULT_COORD_BOUND,
                         cap: int = DEFAULT_CAP_N) -> OMInstance:
    return realizable_instance(random_generic_generators(d, n, seed, coord_bound, cap), cap)


# -- validation -----------------------------------------------------------


def validate_instance(inst: OMInstance) -> ValidationReport:
    rep = ValidationReport()
    topes = inst.topes

    missing = [T for T in topes if negate(T) not in inst]
    rep.add("central_symmetry", not missing,
            f"negation of {missing[0]} is not a tope" if missing else "")

    problem = ""
    if not topes:
        problem = "no topes"
    else:
        columns = [tuple(T[e] for T in topes) for e in range(inst.n)]
        for e, col in enumerate(columns, 1):
            if len(set(col)) == 1:
                problem = f"element {e} has constant sign"
                break
        if not problem:
            for (e, ce), (f, cf) in itertools.combinations(enumerate(columns, 1), 2):
                if ce == cf:
                    problem = f"elements {e} and {f} are parallel"
                    break
                if all(a == -b for a, b in zip(ce, cf)):
                    problem = f"elements {e} and {f} are antiparallel"
                    break
    rep.add("simplicity", not problem, problem)

    connected = False
    if topes:
        seen = {topes[0]}
        queue = deque([topes[0]])
        while queue:
            T = queue.popleft()
            for U in inst.neighbors(T):
                if U not in seen:
                    seen.add(U)
                    queue.append(U)
        connected = len(seen) == len(topes)
    rep.add("connectivity", connected, "" if connected else "tope graph is disconnected")
    return rep


def tope_graph_edge_count(inst: OMInstance) -> int:
    return sum(1 for T in inst.topes for U in inst.topes
               if str(T) < str(U) and len(separation_set(T, U)) == 1)


# -- files ----------------------------------------------------------------


def _line_of(text: str, needle: str) -> int | None:
    for i, line in enumerate(text.splitlines(), 1):
        if needle in line:
            return i
    return None


def instance_from_json(text: str, validate: bool = True) -> OMInstance:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(exc.msg, exc.lineno) from None
    if not isinstance(data, dict):
        raise InstanceFormatError("instance file must hold a JSON object", 1)
    for key in ("n", "source", "topes"):
        if key not in data:
            raise InstanceFormatError(f"missing key {key!r}")
    n, topes_raw = data["n"], data["topes"]
    if not isinstance(n, int) or n < 1:
        raise InstanceFormatError("'n' must be a positive integer", _line_of(text, '"n"'))
    if not isinstance(topes_raw, list):
        raise InstanceFormatError("'topes' must be a list", _line_of(text, '"topes"'))
    seen: set[str] = set()
    topes = []
    for raw in topes_raw:
        line = _line_of(text, json.dumps(raw))
        if not isinstance(raw, str):
            raise InstanceFormatError(f"tope {raw!r} is not a string", line)
        if raw in seen:
            dup_lines = [i for i, ln in enumerate(text.splitlines(), 1) if json.dumps(raw) in ln]
            raise InstanceFormatError(f"duplicate tope {raw}",
                                      dup_lines[1] if len(dup_lines) > 1 else line)
        seen.add(raw)
        try:
            T = SignVector.parse(raw)
        except ValueError as exc:
            raise InstanceFormatError(f"tope {raw!r}: {exc}", line) from None
        if len(T) != n:
            raise InstanceFormatError(f"tope {raw} has length {len(T)}, expected {n}", line)
        topes.append(T)
    inst = OMInstance(n, tuple(topes), str(data["source"]))
    if validate:
        rep = validate_instance(inst)
        if not rep.ok:
            raise ValidationFailure(rep)
    return inst


def save_instance(inst: OMInstance, path) -> None:
    Path(path).write_text(inst.to_json())


def load_instance(path, validate: bool = True) -> OMInstance:
    return instance_from_json(Path(path).read_text(), validate=validate)


def io_roundtrip(inst: OMInstance, path) -> OMInstance:
    save_instance(inst, path)
    return load_instance(path)
