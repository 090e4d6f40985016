"""
Command-line entry point for the EA QC-LDPC toolkit.

    python main.py info
    python main.py check ex1 --distance 100
    python main.py export ex-hi --out exports --as binary
    python main.py simulate --code ex1 --fm 0.01 --trials 10000
    python main.py sweep --fm 0.005 --fm 0.01 --fm 0.02 --out results.csv

Exit codes: 0 success, 1 contract or parameter mismatch, 2 usage error, 3 I/O error.
"""

import argparse
import csv
import logging
import sys
from typing import List, Optional

from QCLDPC import settings
from QCLDPC.analysis import (
    blockwise_rank_bound,
    classical_info,
    css_pair_check,
    eaqecc_params,
    find_low_weight_codeword,
    is_dual_containing,
    rank_bound,
    rank_bound_applies,
    regularity,
    weight_bound_violations,
)
from QCLDPC.channel import CSV_FIELDS, SimConfig, run_simulation, run_sweep, write_csv
from QCLDPC.constructions import BENCHMARK_CODES, BUILTIN_CODES, CodeSpec, export_code, get_code
from QCLDPC.errors import (
    CodeError,
    ConfigurationError,
    InvalidParameterError,
    UnknownCodeError,
)
from QCLDPC.exponent import (
    dual_containing_screen,
    girth6_screen,
    hhat,
    satisfies_circulant_condition,
)
from QCLDPC.guardrails import format_validation_result

logger = logging.getLogger("eaqc")

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_IO = 3

DEFAULT_SWEEP_GRID = (0.001, 0.005, 0.01, 0.02, 0.03)


def _emit(rows: List[List[str]], fmt: str, header: Optional[List[str]] = None, kind: str = "report"):
    """Print rows as aligned text, or as CSV on stdout behind a format-version comment."""
    if fmt == "csv":
        print(f"# eaqc-{kind} format-version {settings.CSV_FORMAT_VERSION}")
        writer = csv.writer(sys.stdout, lineterminator="\n")
        if header:
            writer.writerow(header)
        writer.writerows(rows)
        return
    if header:
        rows = [header] + rows
    widths = [max(len(str(r[i])) for r in rows) for i in range(len(rows[0]))]
    for row in rows:
        print("  ".join(str(v).ljust(w) for v, w in zip(row, widths)).rstrip())


def _fmt_girth(girth) -> str:
    return "inf" if girth == float("inf") else str(girth)


# Commands

def cmd_info(args) -> int:
    rows = []
    for name, factory in BUILTIN_CODES.items():
        spec = factory()
        d = spec.declared
        declared = "-" if d is None else (
            f"[[{d.n},{d.k_logical}" + (f",{d.d}" if d.d is not None else "") + f";{d.c}]]"
        )
        rows.append([name, spec.kind.value, str(spec.n), declared, spec.description])
    _emit(rows, args.format, ["code", "kind", "n", "declared", "description"], kind="info")
    return EXIT_OK


def _check_rows(spec: CodeSpec, args) -> List[List[str]]:
    """Analysis of one code as (field, value, status) rows; status is ok, FAIL or empty."""
    rows: List[List[str]] = []

    def add(field, value, ok=None):
        rows.append([field, str(value), "" if ok is None else ("ok" if ok else "FAIL")])

    add("kind", spec.kind.value)
    labels = ("H_C", "H_D") if spec.is_css_pair() else ("H",)
    infos = []
    for label, H in zip(labels, spec.matrices):
        info = classical_info(H, girth_limit=args.girth_limit)
        infos.append(info)
        add(f"{label}.shape", f"{H.rows}x{H.cols}")
        add(f"{label}.rank", info.rank)
        add(f"{label}.k", info.k)
        add(f"{label}.girth", _fmt_girth(info.girth))
        reg = regularity(H)
        add(f"{label}.regular", "no" if reg is None else f"({reg[0]},{reg[1]})")

    declared = spec.declared
    if spec.is_css_pair():
        pair = css_pair_check(*spec.matrices)
        add("css.compatible", pair.compatible, pair.compatible)
        add("params", f"[[{pair.n},{pair.k_logical}]]")
        computed = {"n": pair.n, "k_logical": pair.k_logical, "c": 0}
    else:
        params = eaqecc_params(spec.H)
        add("ebits", params.c)
        add("params", params.bracket())
        add("net_rate", f"{params.net_rate} = {float(params.net_rate):.4f}")
        add("dual_containing", is_dual_containing(spec.H))
        computed = {"n": params.n, "k_logical": params.k_logical, "c": params.c}

    for E, H, info, label in zip(spec.exponents, spec.matrices, infos, labels):
        screen = dual_containing_screen(E)
        add(f"{label}.dual_screen", screen, screen == is_dual_containing(H))
        girth_ok = info.girth >= 6
        screen6 = girth6_screen(E)
        add(f"{label}.girth6_screen", screen6, screen6 == girth_ok)
        if not spec.is_css_pair():
            hh = hhat(E)
            add("hhat.circulant", satisfies_circulant_condition(hh))
            add("rank_bound.blockwise", blockwise_rank_bound(E))
            # r - w + 1 per entry of H^; informational, the bound fails in general
            add("rank_bound.weight_violations", len(weight_bound_violations(hh)))
            applies = rank_bound_applies(E)
            add("rank_bound.J(r-L+1)", f"{rank_bound(E)} ({'applies' if applies.is_valid else 'n/a'})")

    if args.distance:
        H = spec.matrices[0]
        codeword = find_low_weight_codeword(H, args.distance, args.seed)
        weight = int(codeword.sum())
        certified = not H.dot_vector(codeword).any()
        ok = certified
        if declared is not None and declared.d is not None:
            ok = ok and weight <= declared.d
        add("distance.upper_bound", weight, ok)

    if declared is not None:
        for key in ("n", "k_logical", "c"):
            expected = getattr(declared, key)
            add(f"declared.{key}", f"{expected} (computed {computed[key]})", expected == computed[key])
        if declared.rank is not None:
            add("declared.rank", f"{declared.rank} (computed {infos[0].rank})", declared.rank == infos[0].rank)
    return rows


def cmd_check(args) -> int:
    spec = get_code(args.code)
    rows = _check_rows(spec, args)
    if args.format == "text":
        print(f"Code {spec.name}: {spec.description}")
    _emit(rows, args.format, ["field", "value", "status"], kind="check")
    failed = [row[0] for row in rows if row[2] == "FAIL"]
    if failed:
        logger.error("Checks failed for %s: %s", spec.name, ", ".join(failed))
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_export(args) -> int:
    spec = get_code(args.code)
    for path in export_code(spec, args.out, args.as_format):
        print(path)
    return EXIT_OK


def cmd_simulate(args) -> int:
    f_ms = args.fm or [0.01]
    reports = [
        run_simulation(
            SimConfig(code=args.code, f_m=f_m, trials=args.trials, max_iter=args.max_iter, seed=args.seed),
            workers=args.workers,
        )
        for f_m in f_ms
    ]
    _print_reports(reports, args)
    return EXIT_OK


def cmd_sweep(args) -> int:
    codes = args.code or list(BENCHMARK_CODES)
    f_ms = args.fm or list(DEFAULT_SWEEP_GRID)
    reports = run_sweep(codes, f_ms, args.trials, args.max_iter, args.seed, workers=args.workers)
    _print_reports(reports, args)
    return EXIT_OK


def _print_reports(reports, args):
    if args.out:
        for report in reports:
            write_csv(report, args.out)
        logger.info("Appended %d row(s) to %s", len(reports), args.out)
    if args.format == "csv":
        _emit([r.to_record() for r in reports], "csv", list(CSV_FIELDS), kind="sim")
    else:
        for report in reports:
            print(report.describe())


# Parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eaqc",
        description="Entanglement-assisted quantum QC-LDPC codes: construction, analysis and simulation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_format(p):
        p.add_argument("--format", choices=("text", "csv"), default="text")
        return p

    with_format(sub.add_parser("info", help="list built-in codes and their declared parameters"))

    check = with_format(sub.add_parser("check", help="analyse a code and compare with its declared parameters"))
    check.add_argument("code", help="built-in code name or path to a matrix file")
    check.add_argument("--distance", type=int, default=0, metavar="BUDGET",
                       help="information-set iterations for a distance upper bound (0 skips)")
    check.add_argument("--girth-limit", type=int, default=None,
                       help="only look for cycles up to this length")
    check.add_argument("--seed", type=int, default=settings.DEFAULT_SEED)

    export = sub.add_parser("export", help="write a code's matrices in text form")
    export.add_argument("code")
    export.add_argument("--out", default=".", help="output directory")
    export.add_argument("--as", dest="as_format", choices=("exponent", "binary"), default="exponent")

    def with_sim_flags(p):
        p.add_argument("--fm", type=float, action="append", help="per-Pauli error probability (repeatable)")
        p.add_argument("--trials", type=int, default=settings.DEFAULT_TRIALS)
        p.add_argument("--max-iter", type=int, default=settings.DEFAULT_MAX_ITER)
        p.add_argument("--seed", type=int, default=settings.DEFAULT_SEED)
        p.add_argument("--out", default=None, help="CSV file to append records to")
        p.add_argument("--workers", type=int, default=None, help="worker processes (default EAQC_WORKERS)")
        return with_format(p)

    simulate = with_sim_flags(sub.add_parser("simulate", help="Monte Carlo run for one code"))
    simulate.add_argument("--code", required=True)

    sweep = with_sim_flags(sub.add_parser("sweep", help="Monte Carlo runs over codes x f_m"))
    sweep.add_argument("--code", action="append", help="code to include (repeatable; default: the four benchmarks)")

    return parser


COMMANDS = {
    "info": cmd_info,
    "check": cmd_check,
    "export": cmd_export,
    "simulate": cmd_simulate,
    "sweep": cmd_sweep,
}


def main(argv: Optional[List[str]] = None) -> int:
    logging.basicConfig(
        level=getattr(logging, settings.LOG_LEVEL, logging.INFO),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    args = build_parser().parse_args(argv)
    try:
        settings.validate()
        return COMMANDS[args.command](args)
    except ConfigurationError as exc:
        print(f"Configuration error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UnknownCodeError as exc:
        print(f"Error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvalidParameterError as exc:
        print(format_validation_result(exc.result), file=sys.stderr)
        return EXIT_MISMATCH
    except (CodeError, ValueError) as exc:
        print(f"Error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
