"""Command-line front end.

Exit codes: 0 equivalent / success, 1 not equivalent, 2 usage, parse or
width error.  Diagnostics go to stderr; machine output (JSON, CSV) to stdout
or the file given by ``--csv``.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bench, circuit, oracle
from .circuit import CircuitError
from .equivalence import check_equivalence, check_identity
from .randgen import GenConfig, gen_equivalent_pair, gen_filled, gen_nonequivalent_pair

EXIT_EQUIVALENT = 0
EXIT_NOT_EQUIVALENT = 1
EXIT_ERROR = 2

_KINDS = {"equiv": "equivalent", "nonequiv": "nonequivalent", "single": "single"}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_ERROR)


def _report(result, as_json: bool) -> int:
    print(result.to_json() if as_json else result.describe())
    return EXIT_EQUIVALENT if result.equivalent else EXIT_NOT_EQUIVALENT


def cmd_check(args) -> int:
    a, b = circuit.read(args.file_a), circuit.read(args.file_b)
    return _report(check_equivalence(a, b, parallel=args.parallel), args.json)


def cmd_identity(args) -> int:
    return _report(check_identity(circuit.read(args.file), parallel=args.parallel), args.json)


def cmd_gen(args) -> int:
    cfg = GenConfig(
        args.qubits,
        args.depth,
        args.seed,
        _KINDS[args.kind],
        insertion_count=args.insertions,
        mutation_count=args.mutations,
    )
    if cfg.pair_kind == "single":
        circuit.write(f"{args.out}.cqc", gen_filled(cfg))
        return 0
    make = gen_equivalent_pair if cfg.pair_kind == "equivalent" else gen_nonequivalent_pair
    a, b = make(cfg)
    circuit.write(f"{args.out}_a.cqc", a)
    circuit.write(f"{args.out}_b.cqc", b)
    with open(f"{args.out}.label", "w", encoding="utf-8") as fh:
        fh.write(cfg.pair_kind + "\n")
    return 0


def cmd_oracle(args) -> int:
    a, b = circuit.read(args.file_a), circuit.read(args.file_b)
    same = oracle.oracle_equivalent(a, b)
    print("Equivalent" if same else "NotEquivalent")
    return EXIT_EQUIVALENT if same else EXIT_NOT_EQUIVALENT


def cmd_bench(args) -> int:
    values = sorted(args.values)
    if args.axis == "qubits":
        fixed = GenConfig(values[0], args.fixed, args.seed)
    else:
        fixed = GenConfig(args.fixed, values[0], args.seed)
    kinds = [_KINDS[k] for k in args.kinds]
    if args.csv in (None, "-"):
        bench.run_sweep(args.axis, values, fixed, args.reps, kinds, out=sys.stdout)
    else:
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            bench.run_sweep(args.axis, values, fixed, args.reps, kinds, out=fh)
    return 0


def _int_list(text: str) -> list[int]:
    try:
        values = [int(v) for v in text.split(",") if v]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("empty value list")
    return values


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cliffeq", description="Clifford circuit equivalence checker")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("check", help="decide equivalence of two .cqc circuits")
    s.add_argument("file_a")
    s.add_argument("file_b")
    s.add_argument("--json", action="store_true")
    s.add_argument("--parallel", action="store_true", help="run the four simulations on threads")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("identity", help="decide whether a circuit is the identity up to phase")
    s.add_argument("file")
    s.add_argument("--json", action="store_true")
    s.add_argument("--parallel", action="store_true")
    s.set_defaults(func=cmd_identity)

    s = sub.add_parser("gen", help="write a seeded filled circuit or labelled pair")
    s.add_argument("--qubits", type=_positive, required=True)
    s.add_argument("--depth", type=_positive, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--kind", choices=sorted(_KINDS), default="equiv")
    s.add_argument("--insertions", type=int, default=4)
    s.add_argument("--mutations", type=_positive, default=1)
    s.add_argument("--out", required=True, help="output stem")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("oracle", help=f"dense-matrix check (<= {oracle.MAX_ORACLE_QUBITS} qubits)")
    s.add_argument("file_a")
    s.add_argument("file_b")
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("bench", help="timed sweep over qubits or depth, CSV output")
    s.add_argument("--axis", choices=("qubits", "depth"), required=True)
    s.add_argument("--values", type=_int_list, required=True)
    s.add_argument("--fixed", type=_positive, required=True, help="the non-swept parameter")
    s.add_argument("--reps", type=int, default=5)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--kinds", type=lambda t: t.split(","), default=["equiv", "nonequiv"])
    s.add_argument("--csv", default=None, help="output path (default stdout)")
    s.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "reps", 3) < 3:
        print("cliffeq: error: --reps must be >= 3", file=sys.stderr)
        return EXIT_ERROR
    if getattr(args, "kinds", None) and not set(args.kinds) <= {"equiv", "nonequiv"}:
        print("cliffeq: error: --kinds takes equiv,nonequiv", file=sys.stderr)
        return EXIT_ERROR
    try:
        return args.func(args)
    except (CircuitError, oracle.OracleError, ValueError, OSError) as exc:
        print(f"cliffeq: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
