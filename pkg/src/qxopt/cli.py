"""Command-line front end.

Subcommands: optimize, simplify, verify, bench, mermin, fidelity, table dump.
Exit codes: 0 success, 1 usage error, 2 verification failure.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from . import bench as bench_mod
from .circuit import Circuit
from .fixtures import random_circuit
from .nonclassicality import (
    CLASSICAL_BOUND,
    QUANTUM_BOUND,
    mermin3,
    sanitize,
    uhlmann_fidelity,
)
from .peephole import simplify, simplify_with_trace
from .placement import optimize
from .qasm import emit, parse_report
from .realization import RealizationTable, build_table, dump_text
from .simulator import equivalent
from .states import parse_density_matrix, parse_distribution
from .topology import CouplingGraph, builtin, load


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # exit 1 on usage errors, not argparse's 2
        raise UsageError(message)


def _resolve_arch(arch: str) -> CouplingGraph:
    if arch.startswith("@"):
        path = Path(arch[1:])
        return load(path.read_text(encoding="utf-8"), name=path.stem)
    return builtin(arch)


def _read_circuit(path: str, strict: bool) -> Circuit:
    report = parse_report(Path(path).read_text(encoding="utf-8"), strict=strict)
    for warning in report.warnings:
        print(f"warning: {path}: {warning}", file=sys.stderr)
    return report.circuit


def _placement_arg(text: str, width: int) -> list[int]:
    values = [int(tok) for tok in text.split(",") if tok.strip() != ""]
    if len(values) != width:
        raise UsageError(f"--placement lists {len(values)} targets, circuit has {width} qubits")
    return values


def _build_parser() -> _Parser:
    parser = _Parser(prog="qxopt", description=__doc__)
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("optimize", help="map a circuit onto an architecture")
    p.add_argument("--arch", required=True, help="qx2, qx4, or @coupling-file")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", dest="outfile", help="write the mapped circuit here")
    p.add_argument("--report", choices=("json", "csv"), default="json")
    p.add_argument("--strict", action="store_true")

    p = sub.add_parser("simplify", help="peephole-rewrite a circuit")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", dest="outfile")
    p.add_argument("--trace", action="store_true", help="print each fired rule")
    p.add_argument("--strict", action="store_true")

    p = sub.add_parser("verify", help="check unitary equivalence")
    p.add_argument("circuits", nargs="*", help="two circuit files to compare")
    p.add_argument("--placement", help="comma-separated physical target per logical qubit")
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--arch", help="needed for --random")
    p.add_argument("--random", type=int, metavar="N", help="self-check N random circuits")
    p.add_argument("--qubits", type=int, default=4)
    p.add_argument("--gates", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--strict", action="store_true")

    p = sub.add_parser("bench", help="optimize every .qasm file in a directory")
    p.add_argument("directory")
    p.add_argument("--arch", required=True)
    p.add_argument("--format", choices=("csv", "markdown"), default="csv")
    p.add_argument("--keep-going", action="store_true", help="exit 0 despite row errors")
    p.add_argument("--strict", action="store_true")

    p = sub.add_parser("mermin", help="Mermin polynomial from two distributions")
    p.add_argument("--xxy", required=True)
    p.add_argument("--yyy", required=True)

    p = sub.add_parser("fidelity", help="state overlap of two density-matrix files")
    p.add_argument("--a", dest="first", required=True)
    p.add_argument("--b", dest="second", required=True)

    p = sub.add_parser("table", help="realization-table utilities")
    table_sub = p.add_subparsers(dest="table_command")
    q = table_sub.add_parser("dump", help="print every realization with its cost")
    q.add_argument("--arch", required=True)

    return parser


def _cmd_optimize(args) -> int:
    table = build_table(_resolve_arch(args.arch))
    circuit = _read_circuit(args.infile, args.strict)
    result = optimize(circuit, table)
    if args.outfile:
        Path(args.outfile).write_text(emit(result.mapped), encoding="utf-8")
    if args.report == "json":
        print(
            json.dumps(
                {
                    "input": args.infile,
                    "arch": table.graph.name,
                    "placement": list(result.placement),
                    "initial": {"gates": result.initial_cost.gates, "levels": result.initial_cost.levels},
                    "final": {"gates": result.final_cost.gates, "levels": result.final_cost.levels},
                    "reduction_pct": {"gates": result.reduction_pct[0], "levels": result.reduction_pct[1]},
                },
                indent=2,
            )
        )
    else:
        print("input,arch,placement,gates_in,levels_in,gates_out,levels_out,gates_pct,levels_pct")
        placement = "|".join(str(p) for p in result.placement)
        print(
            f"{args.infile},{table.graph.name},{placement},"
            f"{result.initial_cost.gates},{result.initial_cost.levels},"
            f"{result.final_cost.gates},{result.final_cost.levels},"
            f"{result.reduction_pct[0]},{result.reduction_pct[1]}"
        )
    return 0


def _cmd_simplify(args) -> int:
    circuit = _read_circuit(args.infile, args.strict)
    if args.trace:
        simplified, trace = simplify_with_trace(circuit)
        for firing in trace:
            print(f"{firing.rule} at {firing.position} on qubits {firing.qubits}")
    else:
        simplified = simplify(circuit)
    text = emit(simplified)
    if args.outfile:
        Path(args.outfile).write_text(text, encoding="utf-8")
    else:
        print(text, end="")
    print(f"gates: {len(circuit.gates)} -> {len(simplified.gates)}", file=sys.stderr)
    return 0


def _cmd_verify(args) -> int:
    if args.random is not None:
        if not args.arch:
            raise UsageError("--random requires --arch")
        table = build_table(_resolve_arch(args.arch))
        rng = random.Random(args.seed)
        failures = 0
        for i in range(args.random):
            circuit = random_circuit(args.qubits, args.gates, rng)
            result = optimize(circuit, table)
            ok = equivalent(circuit, result.mapped, list(result.placement), tol=args.tol)
            if not ok:
                failures += 1
                print(f"case {i}: FAIL")
        print(f"{args.random - failures}/{args.random} random circuits verified")
        return 0 if failures == 0 else 2
    if len(args.circuits) != 2:
        raise UsageError("verify needs exactly two circuit files (or --random N)")
    first = _read_circuit(args.circuits[0], args.strict)
    second = _read_circuit(args.circuits[1], args.strict)
    placement = None
    if args.placement:
        placement = _placement_arg(args.placement, first.num_qubits)
    ok = equivalent(first, second, placement, tol=args.tol)
    print("equivalent" if ok else "NOT equivalent")
    return 0 if ok else 2


def _cmd_bench(args) -> int:
    table = build_table(_resolve_arch(args.arch))
    rows = bench_mod.bench_directory(Path(args.directory), table, strict=args.strict)
    if args.format == "csv":
        print(bench_mod.render_csv(rows), end="")
    else:
        print(bench_mod.render_markdown(rows), end="")
    errors = [r for r in rows if r.error is not None]
    if errors and not args.keep_going:
        print(f"{len(errors)} file(s) failed", file=sys.stderr)
        return 1
    return 0


def _cmd_mermin(args) -> int:
    xxy = parse_distribution(Path(args.xxy).read_text(encoding="utf-8"))
    yyy = parse_distribution(Path(args.yyy).read_text(encoding="utf-8"))
    value = mermin3(xxy, yyy)
    print(f"m3 = {value.m3:.3f}")
    print(f"violation = {value.violation:.3f}")
    print(f"classical bound = {CLASSICAL_BOUND:g}")
    print(f"quantum bound = {QUANTUM_BOUND:g}")
    return 0


def _cmd_fidelity(args) -> int:
    first = parse_density_matrix(Path(args.first).read_text(encoding="utf-8"))
    second = parse_density_matrix(Path(args.second).read_text(encoding="utf-8"))
    fid = uhlmann_fidelity(sanitize(first.real, first.imag), sanitize(second.real, second.imag))
    print(f"fidelity = {fid:.4f}")
    return 0


def _cmd_table(args) -> int:
    if args.table_command != "dump":
        raise UsageError("usage: qxopt table dump --arch ...")
    table: RealizationTable = build_table(_resolve_arch(args.arch))
    print(dump_text(table), end="")
    return 0


_HANDLERS = {
    "optimize": _cmd_optimize,
    "simplify": _cmd_simplify,
    "verify": _cmd_verify,
    "bench": _cmd_bench,
    "mermin": _cmd_mermin,
    "fidelity": _cmd_fidelity,
    "table": _cmd_table,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            parser.print_help()
            return 1
        return _HANDLERS[args.command](args)
    except SystemExit as exc:  # argparse --help
        return int(exc.code or 0)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entrypoint() -> None:
    sys.exit(main())
