"""Batch checks of the orthogonality relation over pairs of topes.

A plan pairs two (instance, symmetric cycle) sides with ground sizes
s < t.  For every selected pair of topes both are decomposed, their
complexes and long vectors computed, and every relation checked.  Pairs
whose decompositions are smaller than ``min_q`` are skipped but counted,
so a sweep where nothing is admitted is visible as such.
"""
from __future__ import annotations

import csv
import hashlib
import io
import json
from dataclasses import dataclass, field
from typing import Sequence

from .complexes import lambda_complex, long_f_vector
from .cycles import SymmetricCycle, validate_cycle
from .decomp import Decomposition, decompose
from .errors import ValidationFailure
from .instances import OMInstance
from .signvec import SignVector
from .spectra import (
    SpanResult,
    check_dehn_sommerville,
    iota_product,
    long_h_vector,
    omega_long_f,
    orthogonality_check,
    polytope_anomalies,
    span_membership,
)

REPORT_FIELDS = [
    "tope1", "tope2", "s", "t", "q1", "q2", "f1", "f2", "omega1", "omega2", "h1", "h2",
    "ds1", "ds2", "iota1", "iota2", "span1", "raw_value", "hh_value", "orthogonal", "anomalies",
]


class PlanError(ValueError):
    pass


@dataclass
class ExperimentPlan:
    first: tuple[OMInstance, SymmetricCycle]
    second: tuple[OMInstance, SymmetricCycle]
    min_q: int = 5
    parity_enforced: bool = True
    first_topes: Sequence[SignVector] | None = None
    second_topes: Sequence[SignVector] | None = None

    @property
    def s(self) -> int:
        return self.first[0].n

    @property
    def t(self) -> int:
        return self.second[0].n

    @property
    def is_control(self) -> bool:
        """True when the plan deliberately drops a hypothesis."""
        return not self.parity_enforced or self.min_q < 5

    def validate(self):
        if not self.s < self.t:
            raise PlanError(f"need s < t, got s={self.s}, t={self.t}")
        if self.parity_enforced and (self.t - self.s) % 2 == 0:
            raise PlanError(f"s={self.s} and t={self.t} have equal parity")
        if self.min_q < 1 or self.min_q % 2 == 0:
            raise PlanError(f"min_q must be odd and positive, got {self.min_q}")
        for inst, cyc in (self.first, self.second):
            if cyc.instance != inst:
                raise PlanError("cycle does not belong to its paired instance")
            rep = validate_cycle(inst, cyc)
            if not rep.ok:
                raise ValidationFailure(rep)
        for inst, sel in ((self.first[0], self.first_topes), (self.second[0], self.second_topes)):
            for T in sel or ():
                if T not in inst:
                    raise PlanError(f"selected tope {T} is not a tope of its instance")

    def digest(self) -> str:
        data = {
            "first": [self.first[0].digest(), [str(v) for v in self.first[1].vertices]],
            "second": [self.second[0].digest(), [str(v) for v in self.second[1].vertices]],
            "min_q": self.min_q,
            "parity_enforced": self.parity_enforced,
            "first_topes": None if self.first_topes is None else [str(T) for T in self.first_topes],
            "second_topes": None if self.second_topes is None else [str(T) for T in self.second_topes],
        }
        return hashlib.sha256(json.dumps(data, separators=(",", ":")).encode()).hexdigest()


@dataclass(frozen=True)
class SideAnalysis:
    """Everything about one tope that does not depend on its partner."""

    tope: SignVector
    decomposition: Decomposition
    f: tuple[int, ...]
    omega: tuple[int, ...]
    h: tuple[int, ...]
    span: SpanResult | None = None

    @property
    def q(self) -> int:
        return self.decomposition.q_size


def analyze_tope(T: SignVector, cycle: SymmetricCycle, m: int, t: int) -> SideAnalysis:
    D = decompose(T, cycle)
    f = long_f_vector(lambda_complex(T, D), t)
    h = long_h_vector(f, m, t)
    span = span_membership(h, m, t) if m < t else None
    return SideAnalysis(T, D, f, omega_long_f(f, m, t), h, span)


def check_pair(a: SideAnalysis, b: SideAnalysis, s: int, t: int) -> dict:
    """Run every relation on one pair; returns a report record."""
    orth = orthogonality_check(a.f, s, b.f, t)
    ds1 = check_dehn_sommerville(a.h, "symmetric")
    ds2 = check_dehn_sommerville(b.h, "antisymmetric")
    iota1, iota2 = iota_product(a.h), iota_product(b.h)
    span = a.span if a.span is not None else span_membership(a.h, s, t)

    anomalies = []
    for tag, side, m in (("first", a, s), ("second", b, t)):
        anomalies += [f"{tag}:{x}" for x in polytope_anomalies(side.omega, m)]
    if not ds1:
        anomalies.append("first:dehn_sommerville")
    if not ds2:
        anomalies.append("second:dehn_sommerville")
    if iota1:
        anomalies.append("first:iota")
    if iota2:
        anomalies.append("second:iota")
    if not span.member:
        anomalies.append("first:span")
    if not orth.orthogonal:
        anomalies.append("nonzero_product")
    if a.q == 1 or b.q == 1:
        anomalies.append("degenerate")

    return {
        "tope1": str(a.tope), "tope2": str(b.tope), "s": s, "t": t,
        "q1": a.q, "q2": b.q, "f1": list(a.f), "f2": list(b.f),
        "omega1": list(a.omega), "omega2": list(b.omega),
        "h1": list(a.h), "h2": list(b.h), "ds1": ds1, "ds2": ds2,
        "iota1": iota1, "iota2": iota2, "span1": span.to_dict(),
        "raw_value": orth.raw_value, "hh_value": orth.hh_value,
        "orthogonal": orth.orthogonal, "anomalies": anomalies,
    }


@dataclass
class ExperimentResult:
    s: int
    t: int
    min_q: int
    parity_enforced: bool
    control: bool
    digest: str
    pairs: list[dict] = field(default_factory=list)
    pairs_total: int = 0
    pairs_skipped: int = 0

    @property
    def pairs_tested(self) -> int:
        return len(self.pairs)

    @property
    def violations(self) -> int:
        return sum(1 for p in self.pairs if _violates(p))

    @property
    def nonzero(self) -> list[dict]:
        return [p for p in self.pairs if not p["orthogonal"]]

    @property
    def anomalous(self) -> list[dict]:
        return [p for p in self.pairs if p["anomalies"]]

    @property
    def vacuous(self) -> bool:
        return self.pairs_tested == 0

    @property
    def passed(self) -> bool:
        """Pass condition for hypothesis-enforcing plans; controls always pass."""
        return self.control or self.violations == 0

    def counts(self) -> dict:
        return {
            "pairs_total": self.pairs_total,
            "pairs_tested": self.pairs_tested,
            "pairs_skipped": self.pairs_skipped,
            "violations": self.violations,
            "nonzero_products": len(self.nonzero),
            "anomalous_pairs": len(self.anomalous),
        }

    def to_dict(self) -> dict:
        return {
            "s": self.s, "t": self.t, "min_q": self.min_q,
            "parity_enforced": self.parity_enforced,
            "mode": "control" if self.control else "enforced",
            "digest": self.digest, "counts": self.counts(),
            "vacuous": self.vacuous, "pairs": self.pairs,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(REPORT_FIELDS)
        for p in self.pairs:
            w.writerow([_cell(p[k]) for k in REPORT_FIELDS])
        return buf.getvalue()


def _cell(x) -> str:
    if isinstance(x, (list, dict)):
        return json.dumps(x, separators=(",", ":"))
    if isinstance(x, bool):
        return "true" if x else "false"
    return str(x)


def _violates(p: dict) -> bool:
    return bool(p["anomalies"])


def _run(plan: ExperimentPlan, control: bool) -> ExperimentResult:
    plan.validate()
    s, t = plan.s, plan.t
    (inst1, cyc1), (inst2, cyc2) = plan.first, plan.second
    sel1 = sorted(plan.first_topes if plan.first_topes is not None else inst1.topes, key=str)
    sel2 = sorted(plan.second_topes if plan.second_topes is not None else inst2.topes, key=str)
    side1 = [analyze_tope(T, cyc1, s, t) for T in sel1]
    side2 = [analyze_tope(T, cyc2, t, t) for T in sel2]

    result = ExperimentResult(s, t, plan.min_q, plan.parity_enforced, control, plan.digest())
    for a in side1:
        for b in side2:
            result.pairs_total += 1
            if a.q < plan.min_q or b.q < plan.min_q:
                # the raw/factored identity holds regardless of hypotheses
                orthogonality_check(a.f, s, b.f, t)
                result.pairs_skipped += 1
                continue
            result.pairs.append(check_pair(a, b, s, t))
    return result


def run_experiment(plan: ExperimentPlan) -> ExperimentResult:
    return _run(plan, control=plan.is_control)


def negative_controls(plan: ExperimentPlan) -> ExperimentResult:
    """Same pipeline with a hypothesis dropped; anomalies are recorded, not asserted."""
    if not plan.is_control:
        raise PlanError("negative controls need parity_enforced=False or min_q < 5")
    return _run(plan, control=True)
