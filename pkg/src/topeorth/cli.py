"""Command-line entry point.

Exit codes: 0 on success, 1 when a check fails or violations are found,
2 for usage errors and unreadable or malformed input.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import instances as inst_mod
from .complexes import lambda_complex, long_f_vector
from .cycles import (
    DEFAULT_BUDGET,
    NotFound,
    distinguished_cycle,
    find_cycle_with_witness,
    find_symmetric_cycle,
    load_cycle,
    validate_cycle,
)
from .decomp import decompose
from .errors import InternalInconsistency, TopeError, ValidationFailure
from .signvec import SignVector
from .verify import ExperimentPlan, PlanError, run_experiment

FORMATS_HELP = """\
file formats:
  instance  {"n": N, "source": STR, "topes": ["+-+", ...]}  (topes sorted, "+" < "-")
  cycle     {"instance_digest": SHA256, "vertices": ["+++", "-++", ...]}
  report    {"s", "t", "min_q", "parity_enforced", "mode", "digest", "counts",
             "vacuous", "pairs": [{"tope1", "tope2", "q1", "q2", "f1", "f2", "h1",
             "h2", "ds1", "ds2", "iota1", "iota2", "span1", "raw_value", "hh_value",
             "orthogonal", "anomalies", ...}]}
"""


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("global options")
    g.add_argument("--seed", type=int, default=0, help="random seed (default 0)")
    g.add_argument("--cap-n", type=int, default=inst_mod.DEFAULT_CAP_N,
                   help="largest ground set for 2^n enumerations (default %(default)s)")
    g.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help="node budget for cycle search (default %(default)s)")
    g.add_argument("--format", choices=["json", "csv"], default="json",
                   help="report format (default json)")
    g.add_argument("-o", "--out", help="write output here instead of stdout")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    fmt = argparse.RawDescriptionHelpFormatter
    parser = argparse.ArgumentParser(prog="topeorth", description=__doc__,
                                     epilog=FORMATS_HELP, formatter_class=fmt)
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate an instance file")
    gsub = gen.add_subparsers(dest="kind", required=True)
    p = gsub.add_parser("hypercube", parents=[common], help="all 2^n sign vectors",
                        epilog=FORMATS_HELP, formatter_class=fmt)
    p.add_argument("--n", type=int, required=True)
    p = gsub.add_parser("arrangement", parents=[common], epilog=FORMATS_HELP, formatter_class=fmt,
                        help="topes of a seeded generic central arrangement")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--coord-bound", type=int, default=inst_mod.DEFAULT_COORD_BOUND)

    cyc = sub.add_parser("cycle", help="build or check a symmetric cycle")
    csub = cyc.add_subparsers(dest="kind", required=True)
    p = csub.add_parser("find", parents=[common], epilog=FORMATS_HELP, formatter_class=fmt,
                        help="backtracking search for a symmetric cycle")
    p.add_argument("instance")
    p.add_argument("--start", help="start tope (default: first tope)")
    p.add_argument("--witness-q", type=int,
                   help="scan start topes for a cycle with some |Q| >= this value")
    p = csub.add_parser("distinguished", parents=[common], epilog=FORMATS_HELP,
                        formatter_class=fmt, help="flip elements of a hypercube base in order")
    p.add_argument("instance")
    p.add_argument("--base", required=True)
    p.add_argument("--order", help="comma-separated permutation (default 1,2,...,n)")
    p = csub.add_parser("validate", parents=[common], epilog=FORMATS_HELP, formatter_class=fmt,
                        help="check the cycle invariants")
    p.add_argument("instance")
    p.add_argument("cycle")

    p = sub.add_parser("decompose", parents=[common], epilog=FORMATS_HELP, formatter_class=fmt,
                       help="minimal subset of the cycle summing to a tope")
    p.add_argument("instance")
    p.add_argument("cycle")
    p.add_argument("--tope", required=True)

    p = sub.add_parser("complex", parents=[common], epilog=FORMATS_HELP, formatter_class=fmt,
                       help="facets and long f-vector of the complex of a tope")
    p.add_argument("instance")
    p.add_argument("cycle")
    p.add_argument("--tope", required=True)
    p.add_argument("--t", dest="pad", type=int, help="padding parameter (default n)")

    ver = sub.add_parser("verify", help="check one pair of topes")
    vsub = ver.add_subparsers(dest="kind", required=True)
    p = vsub.add_parser("pair", parents=[common], epilog=FORMATS_HELP, formatter_class=fmt)
    p.add_argument("--first", required=True, metavar="INST,CYCLE,TOPE")
    p.add_argument("--second", required=True, metavar="INST,CYCLE,TOPE")
    p.add_argument("--min-q", type=int, default=5)
    p.add_argument("--allow-equal-parity", action="store_true")

    p = sub.add_parser("sweep", parents=[common], epilog=FORMATS_HELP, formatter_class=fmt,
                       help="check all tope pairs of two instances")
    p.add_argument("--first", required=True, metavar="INST,CYCLE")
    p.add_argument("--second", required=True, metavar="INST,CYCLE")
    p.add_argument("--min-q", type=int, default=5)
    p.add_argument("--allow-equal-parity", action="store_true")
    p.add_argument("--report", help="report path; a .csv suffix selects CSV")
    return parser


class UsageError(Exception):
    pass


def _emit(text: str, path: str | None):
    if not text.endswith("\n"):
        text += "\n"
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def _json(obj) -> str:
    return json.dumps(obj, indent=1) + "\n"


def _load_pair(inst_path: str, cycle_path: str):
    inst = inst_mod.load_instance(inst_path)
    return inst, load_cycle(cycle_path, inst)


def _split(spec: str, parts: int) -> list[str]:
    items = spec.split(",")
    if len(items) != parts:
        raise UsageError(f"expected {parts} comma-separated fields, got {spec!r}")
    return items


def cmd_gen(args) -> int:
    if args.kind == "hypercube":
        inst = inst_mod.hypercube_instance(args.n, cap=args.cap_n)
    else:
        inst = inst_mod.arrangement_instance(args.dim, args.n, seed=args.seed,
                                             coord_bound=args.coord_bound, cap=args.cap_n)
    _emit(inst.to_json(), args.out)
    return 0


def cmd_cycle(args) -> int:
    inst = inst_mod.load_instance(args.instance)
    if args.kind == "find":
        if args.witness_q is not None:
            c = find_cycle_with_witness(inst, args.witness_q, args.budget)
        else:
            start = SignVector.parse(args.start) if args.start else inst.topes[0]
            c = find_symmetric_cycle(inst, start, args.budget)
        _emit(c.to_json(), args.out)
        return 0
    if args.kind == "distinguished":
        if args.order:
            try:
                order = [int(x) for x in args.order.split(",")]
            except ValueError:
                raise UsageError(f"bad --order {args.order!r}") from None
        else:
            order = list(range(1, inst.n + 1))
        c = distinguished_cycle(inst, SignVector.parse(args.base), order)
        _emit(c.to_json(), args.out)
        return 0
    c = load_cycle(args.cycle, inst)
    rep = validate_cycle(inst, c)
    _emit(_json(rep.to_dict()), args.out)
    return 0 if rep.ok else 1


def cmd_decompose(args) -> int:
    _, c = _load_pair(args.instance, args.cycle)
    _emit(_json(decompose(SignVector.parse(args.tope), c).to_dict()), args.out)
    return 0


def cmd_complex(args) -> int:
    inst, c = _load_pair(args.instance, args.cycle)
    T = SignVector.parse(args.tope)
    K = lambda_complex(T, decompose(T, c))
    pad = inst.n if args.pad is None else args.pad
    out = K.to_dict()
    out["t"] = pad
    out["f_vector"] = list(long_f_vector(K, pad))
    _emit(_json(out), args.out)
    return 0


def _write_report(result, args, report_path=None) -> None:
    path = report_path or args.out
    fmt = "csv" if path and path.endswith(".csv") else args.format
    _emit(result.to_csv() if fmt == "csv" else result.to_json(), path)


def _finish(result) -> int:
    if result.vacuous:
        print("warning: no pair passed the |Q| filter; the sweep is vacuous", file=sys.stderr)
    if not result.passed:
        print(f"{result.violations} violation(s) under enforced hypotheses", file=sys.stderr)
        return 1
    return 0


def cmd_verify(args) -> int:
    i1, c1, t1 = _split(args.first, 3)
    i2, c2, t2 = _split(args.second, 3)
    inst1, cyc1 = _load_pair(i1, c1)
    inst2, cyc2 = _load_pair(i2, c2)
    plan = ExperimentPlan((inst1, cyc1), (inst2, cyc2), min_q=args.min_q,
                          parity_enforced=not args.allow_equal_parity,
                          first_topes=[SignVector.parse(t1)], second_topes=[SignVector.parse(t2)])
    result = run_experiment(plan)
    _write_report(result, args)
    return _finish(result)


def cmd_sweep(args) -> int:
    i1, c1 = _split(args.first, 2)
    i2, c2 = _split(args.second, 2)
    plan = ExperimentPlan(_load_pair(i1, c1), _load_pair(i2, c2), min_q=args.min_q,
                          parity_enforced=not args.allow_equal_parity)
    result = run_experiment(plan)
    _write_report(result, args, args.report)
    if args.report:
        counts = result.counts()
        print(" ".join(f"{k}={v}" for k, v in counts.items()), file=sys.stderr)
    return _finish(result)


COMMANDS = {"gen": cmd_gen, "cycle": cmd_cycle, "decompose": cmd_decompose,
            "complex": cmd_complex, "verify": cmd_verify, "sweep": cmd_sweep}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (ValidationFailure, InternalInconsistency, NotFound) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (UsageError, PlanError, TopeError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
