"""Command-line interface.

Subcommands:

* ``estimate``: full resource breakdown plus feasibility for one
  instance, as JSON (default) or metric rows in the sweep CSV schema.
* ``sweep``: regenerate figure data over a chain-length range.
* ``oracle-check``: brute-force term census vs the closed-form counts.
* ``feasible``: feasible-set report for an instance, optionally by
  exhaustive enumeration.

Exit codes: 0 success, 1 oracle divergence, 2 usage error, 3 domain or
runtime error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict
from typing import Sequence

from .census import census_dense_pairwise, census_equals_estimate
from .encodings import Encoding, parse_encoding
from .errors import DomainError
from .feasibility import (
    FeasibilityReport,
    coordinate_feasible_report,
    feasible_ratio_exact,
    feasible_ratio_formula,
    turn_feasible_ratio,
)
from .instances import (
    CoordinateLattice,
    SideChain,
    TurnLattice,
    instance_rng,
    parse_grid,
    sample_sidechain_instance,
)
from .resources import estimate
from .sweep import (
    MODELS,
    run_sweep,
    rows_to_csv,
    rows_to_json,
    single_instance_rows,
    sort_rows,
    write_rows,
)
from .turn_model import turn_estimate

EXIT_OK = 0
EXIT_DIVERGENCE = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3


class UsageError(Exception):
    """Bad flag values or combinations; maps to exit code 2."""


def _parse_confs(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise UsageError(f"bad conformation list {text!r}") from exc


def _parse_grid_flag(text: str) -> "GridSpec":
    try:
        return parse_grid(text)
    except DomainError as exc:
        raise UsageError(str(exc)) from exc


def _feasibility_payload(report: FeasibilityReport) -> dict:
    return {
        "method": report.method,
        "qubits": report.qubits,
        "feasible_count": report.feasible_count,
        "log2_ratio": report.log2_ratio,
        "ratio": report.ratio,
    }


def _encoding_from_args(args: argparse.Namespace) -> Encoding:
    return parse_encoding(args.encoding, args.g)


def _estimate_sidechain_confs(args: argparse.Namespace) -> tuple[int, ...]:
    if args.confs is not None:
        return _parse_confs(args.confs)
    if args.n is None:
        raise UsageError("sampled side-chain instances need --n")
    rng = instance_rng(args.seed, args.n, 0)
    return sample_sidechain_instance(args.n, args.conf_min, args.conf_max, rng)


def cmd_estimate(args: argparse.Namespace) -> int:
    encoding = _encoding_from_args(args)
    model = args.model
    if model.startswith("coord"):
        if args.grid is None or args.n is None:
            raise UsageError("coordinate models need --grid and --n")
        if args.confs is not None or args.seed is not None:
            raise UsageError("coordinate models take only --grid as selector")
        dim = int(model[-2])
        grid = _parse_grid_flag(args.grid)
        instance = CoordinateLattice(dim, grid, args.n)
        est = estimate(instance, encoding)
        feas = coordinate_feasible_report(grid, args.n, encoding)
        resources = {
            "qubits": est.qubits,
            "k_locality": est.k_locality,
            "interactions_by_order": {
                str(order): count
                for order, count in sorted(est.interactions_by_order.items())
            },
            "total_interactions": est.total_interactions,
            "two_qubit_gates": est.two_qubit_gates,
            "correction_subtracted": est.correction_subtracted,
        }
        instance_id = grid.label
        n = args.n
        metrics = {
            "qubits": est.qubits,
            "interactions": est.total_interactions,
            "two_qubit_gates": est.two_qubit_gates,
            "log2_feasible_ratio": feas.log2_ratio,
        }
    elif model.startswith("turn"):
        if args.n is None:
            raise UsageError("turn models need --n")
        if args.grid is not None or args.confs is not None or args.seed is not None:
            raise UsageError("turn models take no instance selector besides --n")
        dim = int(model[-2])
        breakdown = turn_estimate(args.n, dim, encoding, args.c1_override)
        feas = turn_feasible_ratio(args.n, dim, encoding)
        resources = asdict(breakdown)
        resources["operator_classes"] = [
            {"name": cls.name, "count": cls.count, "locality": cls.locality}
            for cls in breakdown.operator_classes
        ]
        instance_id = f"n{args.n}"
        n = args.n
        metrics = {
            "qubits": breakdown.total_qubits,
            "interactions": breakdown.total_interactions,
            "two_qubit_gates": breakdown.two_qubit_gates,
            "log2_feasible_ratio": feas.log2_ratio,
        }
    elif model == "sidechain":
        if (args.confs is None) == (args.seed is None):
            raise UsageError("side-chain models need exactly one of --confs/--seed")
        if args.grid is not None:
            raise UsageError("side-chain models take no --grid")
        confs = _estimate_sidechain_confs(args)
        est = estimate(SideChain(confs), encoding)
        feas = feasible_ratio_formula(confs, encoding)
        resources = {
            "qubits": est.qubits,
            "k_locality": est.k_locality,
            "interactions_by_order": {
                str(order): count
                for order, count in sorted(est.interactions_by_order.items())
            },
            "total_interactions": est.total_interactions,
            "two_qubit_gates": est.two_qubit_gates,
            "correction_subtracted": est.correction_subtracted,
        }
        instance_id = "-".join(str(c) for c in confs)
        n = len(confs)
        metrics = {
            "qubits": est.qubits,
            "interactions": est.total_interactions,
            "two_qubit_gates": est.two_qubit_gates,
            "log2_feasible_ratio": feas.log2_ratio,
        }
    else:
        raise UsageError(f"unknown model {model!r}")

    if args.format == "csv":
        rows = single_instance_rows(model, encoding, n, instance_id, metrics)
        sys.stdout.write(rows_to_csv(sort_rows(rows)))
    else:
        payload = {
            "model": model,
            "encoding": encoding.scheme,
            "g": encoding.g,
            "N": n,
            "instance_id": instance_id,
            "resources": resources,
            "feasibility": _feasibility_payload(feas),
        }
        json.dump(payload, sys.stdout, indent=2)
        sys.stdout.write("\n")
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    models = MODELS if args.models == "all" else tuple(args.models.split(","))
    for model in models:
        if model not in MODELS:
            raise UsageError(f"unknown model {model!r}")
    names = (
        ("unary", "binary", "bubinary")
        if args.encodings == "all"
        else tuple(args.encodings.split(","))
    )
    encodings = [parse_encoding(name, args.g) for name in names]
    rows = run_sweep(
        models,
        encodings,
        args.n_min,
        args.n_max,
        grid_slack=args.grid_slack,
        conf_min=args.conf_min,
        conf_max=args.conf_max,
        samples=args.samples,
        seed=args.seed,
        c1_override=args.c1_override,
    )
    if args.out:
        write_rows(rows, args.out, args.format)
    else:
        text = rows_to_csv(rows) if args.format == "csv" else rows_to_json(rows)
        sys.stdout.write(text)
    return EXIT_OK


def cmd_oracle_check(args: argparse.Namespace) -> int:
    encoding = _encoding_from_args(args)
    confs = _parse_confs(args.confs)
    comparison = census_equals_estimate(confs, encoding, args.qubit_cap)
    census = census_dense_pairwise(confs, encoding, args.qubit_cap)
    print(f"confs={','.join(str(c) for c in confs)} encoding={encoding}")
    print(
        "census orders:",
        {order: census.counts_by_order[order] for order in sorted(census.counts_by_order)},
    )
    from .resources import _counts_and_correction  # local import, CLI-only

    counts, correction = _counts_and_correction(confs, encoding)
    print("closed-form orders:", {order: counts[order] for order in sorted(counts)})
    print(f"duplicate terms subtracted: {correction}")
    if encoding.scheme == "bubinary" and encoding.g == 1:
        print("note: block size 1 reduces to the unary encoding")
    if comparison.matches:
        print("PASS: census matches closed-form counts order by order")
        return EXIT_OK
    print(
        f"FAIL: first divergence at order {comparison.first_divergent_order}: "
        f"census {comparison.census_count} vs closed form {comparison.estimate_count}"
    )
    return EXIT_DIVERGENCE


def cmd_feasible(args: argparse.Namespace) -> int:
    encoding = _encoding_from_args(args)
    if args.confs is not None:
        confs = _parse_confs(args.confs)
        if args.exact:
            report = feasible_ratio_exact(confs, encoding, args.qubit_cap)
        else:
            report = feasible_ratio_formula(confs, encoding)
    elif args.model is not None:
        if args.model.startswith("turn"):
            if args.n is None:
                raise UsageError("turn models need --n")
            report = turn_feasible_ratio(args.n, int(args.model[-2]), encoding)
        elif args.model.startswith("coord"):
            if args.grid is None or args.n is None:
                raise UsageError("coordinate models need --grid and --n")
            report = coordinate_feasible_report(
                _parse_grid_flag(args.grid), args.n, encoding
            )
        else:
            raise UsageError("feasible supports coord/turn models or --confs")
    else:
        raise UsageError("feasible needs --confs or --model")
    json.dump(_feasibility_payload(report), sys.stdout, indent=2)
    sys.stdout.write("\n")
    return EXIT_OK


def _add_encoding_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--encoding",
        required=True,
        choices=("unary", "binary", "bubinary"),
    )
    parser.add_argument("--g", type=int, default=3, help="block size for bubinary")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="foldres",
        description="Quantum-hardware resource estimates for protein folding models",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    est = sub.add_parser("estimate", help="resources for one instance")
    est.add_argument("--model", required=True, choices=MODELS)
    _add_encoding_flags(est)
    est.add_argument("--n", type=int)
    est.add_argument("--grid", help="grid sides, e.g. 3x5 or 2x2x3")
    est.add_argument("--confs", help="comma-separated conformation counts")
    est.add_argument("--seed", type=int, help="sample one side-chain instance")
    est.add_argument("--conf-min", type=int, default=2)
    est.add_argument("--conf-max", type=int, default=100)
    est.add_argument("--c1-override", type=int, default=None)
    est.add_argument("--format", choices=("json", "csv"), default="json")
    est.set_defaults(func=cmd_estimate)

    swp = sub.add_parser("sweep", help="regenerate figure data")
    swp.add_argument("--models", default="all", help="comma list or 'all'")
    swp.add_argument("--encodings", default="all", help="comma list or 'all'")
    swp.add_argument("--g", type=int, default=3)
    swp.add_argument("--n-min", type=int, default=3)
    swp.add_argument("--n-max", type=int, default=100)
    swp.add_argument("--grid-slack", type=float, default=1.5)
    swp.add_argument("--conf-min", type=int, default=2)
    swp.add_argument("--conf-max", type=int, default=100)
    swp.add_argument("--samples", type=int, default=2000)
    swp.add_argument("--seed", type=int, default=0)
    swp.add_argument("--c1-override", type=int, default=None)
    swp.add_argument("--out", help="output path; stdout when omitted")
    swp.add_argument("--format", choices=("csv", "json"), default="csv")
    swp.set_defaults(func=cmd_sweep)

    orc = sub.add_parser("oracle-check", help="census vs closed-form counts")
    orc.add_argument("--confs", required=True)
    _add_encoding_flags(orc)
    orc.add_argument("--qubit-cap", type=int, default=24)
    orc.set_defaults(func=cmd_oracle_check)

    fea = sub.add_parser("feasible", help="feasible-set report")
    fea.add_argument("--confs")
    fea.add_argument("--model", choices=MODELS)
    fea.add_argument("--n", type=int)
    fea.add_argument("--grid")
    _add_encoding_flags(fea)
    fea.add_argument("--exact", action="store_true", help="exhaustive enumeration")
    fea.add_argument("--qubit-cap", type=int, default=24)
    fea.set_defaults(func=cmd_feasible)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
