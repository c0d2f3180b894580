"""
Command dispatch for ``bisurf <command> [flags] [input-file]``.

Every command prints text by default and JSON with --json; ``report`` runs the
whole analysis pipeline and always prints JSON. Exit codes come from the
exception hierarchy: 2 parse error, 3 invalid ideal, 4 basepoints where a
basepoint-free ideal is required, 1 anything else.
"""

import argparse
import json
import sys
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from src.algebra.bipoly import DUAL_VARIABLES, BiDegree
from src.config.exception import AppException, BasepointError
from src.config.logger import setup_logger
from src.config.settings import get_settings, parse_window
from src.graph.workflow import SurfaceAnalysisWorkflow
from src.models.analysis import DualPairing, NumericalType, format_point
from src.models.output_schema import AnalysisReport
from src.surface.classify import classify, singular_line_candidates
from src.surface.dualscroll import cross_check, dual_report, format_dual_form
from src.surface.ideal import SurfaceIdeal, hilbert_table, is_basepoint_free, validate
from src.surface.implicitize import implicit_equation, quadric_rank
from src.surface.resolution import betti_table, minimal_free_resolution
from src.utils.input_loader import InputLoader

logger = setup_logger("BisurfCLI", "cli.log")

COMMANDS = ("check", "classify", "hilbert", "betti", "resolve", "implicitize", "singular", "dual", "report")

Output = Tuple[List[str], Dict]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bisurf",
        description="Syzygies, resolutions and implicit equations of tensor product surfaces of bidegree (2,1).",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("input", nargs="?", default=None,
                        help="JSON {\"generators\": [...]} or plain text, one polynomial per line")
    parser.add_argument("-g", "--generator", action="append", default=[],
                        help="inline generator, repeat four times instead of an input file")
    parser.add_argument("--json", action="store_true", help="print JSON instead of text")
    parser.add_argument("--window", type=str, default=None, help="resolution window 'a,b'")
    parser.add_argument("--oracle", action="store_true",
                        help="cross-check the implicit equation against the evaluation kernel")
    parser.add_argument("--pairing", choices=[p.value for p in DualPairing], default=None,
                        help="dual pairing for the u-perp pullbacks")
    parser.add_argument("--imax", type=int, default=5)
    parser.add_argument("--jmax", type=int, default=4)
    return parser


def _window(args) -> BiDegree:
    a, b = parse_window(args.window) if args.window else get_settings().window
    return BiDegree(a, b)


def _pairing(args) -> DualPairing:
    return DualPairing(args.pairing or get_settings().pairing)


def _require_free(ideal: SurfaceIdeal) -> None:
    report = is_basepoint_free(ideal)
    if not report.free:
        raise BasepointError("not basepoint free", witness=report.witness_text())


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def cmd_check(ideal: SurfaceIdeal, args) -> Output:
    report = is_basepoint_free(ideal)
    lines = [f"basepoint free: {_yes(report.free)}"]
    if not report.free:
        lines.append(f"witness: {report.witness_text()}")
        if report.basepoints:
            lines.append("basepoints: " + ", ".join(str(b) for b in report.basepoints))
    data = {
        "valid": True,
        "basepoint_free": report.free,
        "witness": report.witness_text(),
        "basepoints": [str(b) for b in report.basepoints],
    }
    return lines, data


def cmd_classify(ideal: SurfaceIdeal, args) -> Output:
    report = classify(ideal)
    primes = [prime.describe() for prime in report.embedded_primes]
    lines = [
        f"type: {report.numerical_type.value}",
        f"n01: {report.n01}",
        f"n10: {report.n10}",
        f"has02: {_yes(report.has02)}",
    ]
    if report.p is not None:
        lines.append(f"p: {report.p}")
    if report.q is not None:
        lines.append(f"q: {report.q}")
    lines.append("embedded primes: " + (", ".join(primes) if primes else "none"))
    data = {
        "type": report.numerical_type.value,
        "n01": report.n01,
        "n10": report.n10,
        "has02": report.has02,
        "p": str(report.p) if report.p is not None else None,
        "q": str(report.q) if report.q is not None else None,
        "embedded_primes": primes,
    }
    return lines, data


def cmd_hilbert(ideal: SurfaceIdeal, args) -> Output:
    table = hilbert_table(ideal, args.imax, args.jmax)
    return table.format_rows(), {"hilbert": table.values}


def cmd_betti(ideal: SurfaceIdeal, args) -> Output:
    betti = betti_table(minimal_free_resolution(ideal, _window(args)))
    return [betti.format_row()], {"betti": betti.to_json_dict()}


def cmd_resolve(ideal: SurfaceIdeal, args) -> Output:
    resolution = minimal_free_resolution(ideal, _window(args))
    betti = betti_table(resolution)
    lines = [betti.format_row()]
    for h, differential in enumerate(resolution.differentials):
        target = "R" if h == 0 else f"F{h - 1}"
        lines.append("")
        lines.append(f"d{h}: F{h} -> {target}")
        lines.extend(differential.format_rows())
    data = {
        "betti": betti.to_json_dict(),
        "differentials": [
            [[str(entry) for entry in column] for column in differential.columns]
            for differential in resolution.differentials
        ],
    }
    return lines, data


def cmd_implicitize(ideal: SurfaceIdeal, args) -> Output:
    result = implicit_equation(ideal, oracle=args.oracle)
    lines = [
        f"det: {result.det}",
        f"reduced: {result.reduced}",
        f"multiplicity: {result.multiplicity}",
        f"birational: {_yes(result.birational)}",
    ]
    if result.oracle_checked:
        lines.append("oracle: agrees")
    data = {
        "implicit": {
            "det": str(result.det),
            "reduced": str(result.reduced),
            "multiplicity": result.multiplicity,
            "birational": result.birational,
            "oracle_checked": result.oracle_checked,
        }
    }
    return lines, data


def cmd_singular(ideal: SurfaceIdeal, args) -> Output:
    report = classify(ideal)
    result = implicit_equation(ideal, report)
    lines_found = singular_line_candidates(ideal, report, result.reduced)
    lines = [line.describe() for line in lines_found] or ["no singular coordinate lines"]
    data = {"singular_lines": [[str(f) for f in line.forms] for line in lines_found]}
    if report.numerical_type is NumericalType.TYPE_6:
        rank = quadric_rank(result.reduced)
        lines.append(f"quadric rank: {rank}")
        data["quadric_rank"] = rank
    return lines, data


def cmd_dual(ideal: SurfaceIdeal, args) -> Output:
    free = is_basepoint_free(ideal).free
    dual = dual_report(ideal, _pairing(args))
    check = cross_check(dual, classify(ideal) if free else None, basepoint_free=free)
    g = dual.g.to_string(DUAL_VARIABLES) if dual.g is not None else None
    roots = [f"{format_point(st)}x{format_point(uv)}" for st, uv in dual.residual_roots]
    lines = [
        "u-perp: " + ", ".join(format_dual_form(L) for L in dual.uperp),
        "pullbacks: " + ", ".join(f.to_string(DUAL_VARIABLES) for f in dual.pullbacks),
        f"common factor: {g if g is not None else 'none'}"
        + (f" of bidegree {dual.g_degree}" if dual.g_degree is not None else ""),
    ]
    if dual.residuals is not None:
        lines.append("residuals: " + ", ".join(h.to_string(DUAL_VARIABLES) for h in dual.residuals))
        lines.append(f"residual roots: {dual.residual_kind.value}" + (f" {', '.join(roots)}" if roots else ""))
    lines.append("predicted: " + ", ".join(dual.predicted_label()))
    lines.append(f"consistent: {_yes(check.consistent)} ({check.detail})")
    data = {
        "dual": {
            "pairing": dual.pairing.value,
            "uperp": [format_dual_form(L) for L in dual.uperp],
            "g": g,
            "g_degree": str(dual.g_degree) if dual.g_degree is not None else None,
            "residual_kind": dual.residual_kind.value,
            "residual_roots": roots,
            "predicted_type": dual.predicted_label(),
            "consistent": check.consistent,
        }
    }
    return lines, data


HANDLERS: Dict[str, Callable[[SurfaceIdeal, argparse.Namespace], Output]] = {
    "check": cmd_check,
    "classify": cmd_classify,
    "hilbert": cmd_hilbert,
    "betti": cmd_betti,
    "resolve": cmd_resolve,
    "implicitize": cmd_implicitize,
    "singular": cmd_singular,
    "dual": cmd_dual,
}

BASEPOINT_FREE_ONLY = {"classify", "implicitize", "singular"}


def _run_report(args) -> int:
    loader = InputLoader()
    texts = list(args.generator) if args.generator else loader.read_texts(args.input) if args.input else None
    if texts is None:
        raise AppException("no generators given: pass an input file or -g/--generator", sys)
    window = parse_window(args.window) if args.window else None
    output = SurfaceAnalysisWorkflow().run(
        texts, window=window, imax=args.imax, jmax=args.jmax, pairing=args.pairing, oracle=args.oracle
    )
    report = AnalysisReport(**output)
    print(report.to_json())
    return report.exit_code


def run(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logger.info(f"Command {args.command} on {args.input or 'inline generators'}")
    try:
        if args.command == "report":
            return _run_report(args)

        parsed = InputLoader().load(args.input, args.generator)
        ideal = validate(parsed.generators)
        if args.command in BASEPOINT_FREE_ONLY:
            _require_free(ideal)
        lines, data = HANDLERS[args.command](ideal, args)
        if args.json:
            print(json.dumps(data, sort_keys=True, indent=2))
        else:
            print("\n".join(lines))
        return 0
    except AppException as e:
        logger.error(f"{args.command} failed: {e.reason}")
        print(f"error: {e.reason}", file=sys.stderr)
        return e.exit_code


def main() -> None:
    sys.exit(run())
