"""Command-line interface.

Exit status: 0 on success, 1 when a hypothesis is violated or a verdict is
false, 2 on I/O, parse or usage errors.  Reports are JSON on stdout;
diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import engine, oracle
from .errors import (
    ClosureBudgetExceeded,
    CycleDetected,
    JointfixError,
    NoSupremum,
    PreconditionViolated,
    SweepBudgetExceeded,
)
from .generators import KINDS, STRATEGIES, GenSpec, make_instance
from .instance import Instance, dumps_instance, instance_digest, load_instance
from .mappings import Family, is_chain_continuous, is_commutative_family, isotonicity_witness

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2

# Raised by the engine when the instance, not the input file, is at fault.
COMPUTATION_ERRORS = (
    PreconditionViolated,
    CycleDetected,
    NoSupremum,
    SweepBudgetExceeded,
    ClosureBudgetExceeded,
)


def _error_doc(exc: JointfixError) -> dict:
    doc = {"type": type(exc).__name__, "message": str(exc)}
    if isinstance(exc, PreconditionViolated):
        doc["which"] = exc.which
        doc["witness"] = exc.witness
    elif isinstance(exc, CycleDetected):
        doc["cycle"] = exc.cycle
    return doc


def _select_family(inst: Instance, names: list[str] | None) -> Family:
    if not names:
        return inst.family
    flat = [n for group in names for n in group.split(",") if n]
    return inst.family.subfamily(flat)


def _preconditions(family: Family) -> dict:
    p = family.poset
    comm = is_commutative_family(family)
    return {
        "chain_complete": p.is_chain_complete(),
        "isotone": {f.name: isotonicity_witness(f) is None for f in family},
        "commutative": comm.holds,
    }


def _orbit_doc(labels, r: engine.OrbitResult) -> dict:
    doc = {"seed": labels[r.seed], "supremum": labels[r.supremum]}
    if r.orbit is not None:
        doc["orbit"] = [labels[x] for x in r.orbit]
    doc["applications"] = r.applications
    return doc


def _report_base(command: str, inst: Instance, family: Family) -> dict:
    return {
        "command": command,
        "instance_digest": instance_digest(inst.poset, inst.family, inst.meta),
        "family": list(family.names),
    }


# -- commands -----------------------------------------------------------------

def cmd_check(args, inst: Instance) -> tuple[dict, int]:
    family = _select_family(inst, args.family)
    p = family.poset
    labels = p.labels
    comm = is_commutative_family(family)
    maps = {}
    for f in family:
        w = isotonicity_witness(f)
        maps[f.name] = {
            "isotone": w is None,
            "chain_continuous": is_chain_continuous(f),
            "witness": None if w is None else [labels[w[0]], labels[w[1]]],
        }
    report = _report_base("check", inst, family)
    report["properties"] = {
        "size": len(p),
        "bottom": None if p.bottom is None else labels[p.bottom],
        "top": None if p.top is None else labels[p.top],
        "chain_complete": p.is_chain_complete(),
        "complete_lattice": p.is_complete_lattice(),
        "maps": maps,
        "commutative": {
            "holds": comm.holds,
            "pair": None if comm.pair is None else list(comm.pair),
            "element": None if comm.element is None else labels[comm.element],
        },
    }
    return report, EXIT_OK


def cmd_solve(args, inst: Instance) -> tuple[dict, int]:
    family = _select_family(inst, args.family)
    labels = family.poset.labels
    report = _report_base("solve", inst, family)
    report["strategy"] = args.strategy
    report["unsafe"] = args.unsafe_skip_preconditions
    report["preconditions"] = _preconditions(family)
    result = engine.joint_fixed_points(family, strategy=args.strategy, unsafe=args.unsafe_skip_preconditions)
    report["method"] = result.method.value
    report["fix_set"] = [labels[x] for x in result.fix_set]
    report["least"] = None if result.least is None else labels[result.least]
    report["per_seed"] = [_orbit_doc(labels, r) for r in result.per_seed]
    report["stats"] = result.stats
    return report, EXIT_OK


def cmd_kleene(args, inst: Instance) -> tuple[dict, int]:
    f = inst.family.by_name(args.map)
    labels = f.poset.labels
    report = _report_base("kleene", inst, Family.of(f))
    result = engine.kleene_iterate(f, args.start, unsafe=args.unsafe_skip_preconditions)
    report["method"] = result.method.value
    report["start"] = labels[result.trace[0]]
    report["fixpoint"] = labels[result.fixpoint]
    report["steps"] = result.stats["steps"]
    report["trace"] = [labels[x] for x in result.trace]
    return report, EXIT_OK


def cmd_seeds(args, inst: Instance) -> tuple[dict, int]:
    f = inst.family.by_name(args.map)
    labels = f.poset.labels
    report = _report_base("seeds", inst, Family.of(f))
    result = engine.fixed_points_single(f, unsafe=args.unsafe_skip_preconditions)
    report["method"] = result.method.value
    report["fix_set"] = [labels[x] for x in result.fix_set]
    report["least"] = None if result.least is None else labels[result.least]
    report["per_seed"] = [_orbit_doc(labels, r) for r in result.per_seed]
    return report, EXIT_OK


def cmd_oracle(args, inst: Instance) -> tuple[dict, int]:
    family = _select_family(inst, args.family)
    labels = family.poset.labels
    report = _report_base("oracle", inst, family)
    report["preconditions"] = _preconditions(family)
    fix = oracle.brute_force_fixed_points(family)
    report["fix_set"] = [labels[x] for x in fix]
    least = family.poset.least_of(fix) if fix else None
    report["least"] = None if least is None else labels[least]
    verdicts = oracle.verify_all(family)
    report["verdicts"] = [v.as_dict() for v in verdicts]
    bad = oracle.failed(verdicts)
    report["all_hold"] = not bad
    return report, EXIT_FAILED if bad else EXIT_OK


def cmd_gen(args) -> int:
    spec = GenSpec(args.kind, args.n, args.m, args.rng_seed, args.density)
    poset, family, meta = make_instance(spec, args.strategy, args.count)
    text = dumps_instance(poset, family, meta)
    if args.output in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(args.output).write_text(text, encoding="utf-8")
    return EXIT_OK


# -- plumbing -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jointfix",
        description="Joint fixed points of commutative isotone maps on finite posets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_file(name: str, help: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help)
        sp.add_argument("file", help="instance JSON file")
        return sp

    sp = with_file("check", "report order and map properties")
    sp.add_argument("--family", action="append", help="map names (comma-separated, repeatable)")

    sp = with_file("solve", "all joint fixed points and the least one")
    sp.add_argument("--family", action="append", help="map names (comma-separated, repeatable)")
    sp.add_argument("--strategy", choices=("closure", "round-robin"), default="closure")
    sp.add_argument("--unsafe-skip-preconditions", action="store_true")

    sp = with_file("kleene", "Kleene iteration of one map")
    sp.add_argument("--map", required=True)
    sp.add_argument("--start", help="start label (default: bottom)")
    sp.add_argument("--unsafe-skip-preconditions", action="store_true")

    sp = with_file("seeds", "fixed points of one map from every extensive seed")
    sp.add_argument("--map", required=True)
    sp.add_argument("--unsafe-skip-preconditions", action="store_true")

    sp = with_file("oracle", "brute-force fixed points and all verdicts")
    sp.add_argument("--family", action="append", help="map names (comma-separated, repeatable)")

    sp = sub.add_parser("gen", help="generate an instance file")
    sp.add_argument("--kind", choices=KINDS, required=True)
    sp.add_argument("--n", type=int, default=0)
    sp.add_argument("--m", type=int, default=0, help="second factor for --kind product")
    sp.add_argument("--rng-seed", type=int, default=0)
    sp.add_argument("--density", type=float, default=0.3, help="edge probability for --kind random")
    sp.add_argument("--strategy", choices=STRATEGIES, default="powers")
    sp.add_argument("--count", type=int, default=2)
    sp.add_argument("-o", "--output", help="output path (default: stdout)")
    return parser


COMMANDS = {
    "check": cmd_check,
    "solve": cmd_solve,
    "kleene": cmd_kleene,
    "seeds": cmd_seeds,
    "oracle": cmd_oracle,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    if args.command == "gen":
        try:
            return cmd_gen(args)
        except (JointfixError, OSError) as exc:
            print(f"jointfix: {exc}", file=sys.stderr)
            return EXIT_USAGE

    started = time.perf_counter()
    try:
        inst = load_instance(args.file)
    except (JointfixError, OSError) as exc:
        print(f"jointfix: {exc}", file=sys.stderr)
        return EXIT_USAGE

    try:
        report, code = COMMANDS[args.command](args, inst)
    except COMPUTATION_ERRORS as exc:
        print(f"jointfix: {exc}", file=sys.stderr)
        report = {
            "command": args.command,
            "instance_digest": instance_digest(inst.poset, inst.family, inst.meta),
            "error": _error_doc(exc),
        }
        code = EXIT_FAILED
    except JointfixError as exc:
        print(f"jointfix: {exc}", file=sys.stderr)
        return EXIT_USAGE

    report["timing_seconds"] = round(time.perf_counter() - started, 6)
    sys.stdout.write(json.dumps(report, indent=2, ensure_ascii=False) + "\n")
    return code


def run() -> None:
    sys.exit(main())
