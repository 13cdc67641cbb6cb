"""Command-line front end.

Exit codes: 0 success, 1 error (including failed axiom checks and failed
reproductions), 2 when an audit wrote a counterexample dump.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import harness
from .core import parse_explicit, validate_circuit_axioms, verify_exchange_sequence
from .distance import SearchOptions, embracing_distance
from .errors import OMError
from .graphic import theorem2_sequence


def _cmd_validate(args) -> int:
    ground, _rank, circuits = parse_explicit(Path(args.file).read_text())
    report = validate_circuit_axioms(circuits, ground)
    print("\n".join(report.lines()))
    return 0 if report.passed else 1


def _load(path) -> harness.Instance:
    return harness.Instance.from_text(Path(path).read_text())


def _cmd_distance(args) -> int:
    inst = _load(args.instance)
    opts = SearchOptions(args.mode, args.monotone, args.max_depth)
    res = embracing_distance(inst.oracle(), inst.anchor, inst.A, inst.B, opts)
    sys.stdout.write(res.format())
    return 0


def _cmd_theorem2(args) -> int:
    inst = _load(args.instance)
    if inst.kind != "graphic":
        print("theorem2 needs a graphic instance", file=sys.stderr)
        return 1
    s, t = inst.anchor.source, inst.anchor.target
    seq = theorem2_sequence(inst.payload, s, t, inst.A, inst.B)
    rep = verify_exchange_sequence(inst.oracle(), inst.anchor, inst.A, inst.B, seq)
    sys.stdout.write(seq.format())
    print(f"valid: {rep.valid}  monotone: {rep.monotone}  strictly monotone: {rep.strictly_monotone}")
    return 0 if rep.valid else 1


def _cmd_audit(args) -> int:
    instances = harness.generate_instances(args.kind, args.count, args.seed, n=args.n, d=args.d)
    records = harness.audit(instances, modes=args.modes, dump_dir=args.dump_dir,
                            workers=args.workers, check_monotone=args.check_monotone)
    sys.stdout.write(harness.format_report(records, args.kind))
    summary = harness.summarize(records)
    print("summary: " + " ".join(f"{k}={v}" for k, v in summary.items()), file=sys.stderr)
    return 2 if summary["violations"] else 0


def _cmd_repro(args) -> int:
    fn = {"example1": harness.repro_example1, "example2": harness.repro_example2}[args.example]
    sys.stdout.write(fn().text())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="omexchange", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate-axioms", help="check the signed circuit axioms of an explicit circuit file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("distance", help="exact embracing exchange distance of an instance")
    p.add_argument("instance")
    p.add_argument("--mode", choices=("union", "full"), default="union")
    p.add_argument("--monotone", action="store_true")
    p.add_argument("--max-depth", type=int, default=None)
    p.set_defaults(func=_cmd_distance)

    p = sub.add_parser("theorem2", help="constructive exchange sequence for a graphic instance")
    p.add_argument("instance")
    p.set_defaults(func=_cmd_theorem2)

    p = sub.add_parser("audit", help="audit seeded random instances against the rank bound")
    p.add_argument("--kind", choices=("graphic", "affine"), required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--n", type=int, default=None, help="largest vertex count (graphic)")
    p.add_argument("--d", type=int, default=None, help="dimension (affine)")
    p.add_argument("--modes", nargs="+", choices=("union", "full"), default=["union", "full"])
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--check-monotone", action="store_true")
    p.add_argument("--dump-dir", default=None,
                   help=f"counterexample directory (default ${harness.COUNTEREXAMPLE_ENV} or ./counterexamples)")
    p.set_defaults(func=_cmd_audit)

    p = sub.add_parser("repro", help="reproduce a worked example")
    p.add_argument("example", choices=("example1", "example2"))
    p.set_defaults(func=_cmd_repro)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OMError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
