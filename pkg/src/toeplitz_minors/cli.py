"""Command-line front end.

Subcommands: ``bd``, ``tw``, ``identity-check``, ``delta-check``,
``ratio-numeric`` and ``cross-check``. Every subcommand takes
``--format text|json``; the exit code is 0 iff every requested check passed.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from typing import Sequence

from .bd_formula import bd_poly
from .checks import PairResult, delta_check, identity_check
from .exceptions import PreconditionError, SingularDenominatorError, TruncationRangeError
from .partitions import EMPTY, Partition, parse_partition
from .symfunc import SymbolSpec, SymPoly, evaluate
from .toeplitz_numeric import cross_check, ratio_sequence
from .tw_formula import tw_poly


def _partition_arg(text: str) -> Partition:
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _n_list(text: str) -> list[int]:
    try:
        values = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed size list {text!r}") from None
    if not values or any(v < 1 for v in values):
        raise argparse.ArgumentTypeError(f"sizes must be positive integers: {text!r}")
    return values


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed number {text!r}") from None
    if not value > 0 or math.isinf(value):
        raise argparse.ArgumentTypeError(f"tolerance must be a positive number, got {text}")
    return value


def _nonnegative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed integer {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def _complex_json(z: complex) -> list[float]:
    return [z.real, z.imag]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toeplitz-minors",
        description="Exact Bump-Diaconis / Tracy-Widom polynomials and Toeplitz minor ratios.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    def pair(p):
        p.add_argument("--lambda", dest="lam", type=_partition_arg, default=EMPTY,
                       help="partition as comma-separated parts; '' or 0 for the empty partition")
        p.add_argument("--mu", type=_partition_arg, default=EMPTY)

    p = sub.add_parser("bd", help="print the Bump-Diaconis polynomial")
    pair(p)
    p.add_argument("--spec", help="symbol spec JSON; also print the specialized value")
    common(p)

    p = sub.add_parser("tw", help="print the Tracy-Widom polynomial")
    pair(p)
    p.add_argument("--d", type=int, help="matrix size (default max(length(lambda), length(mu), 1))")
    p.add_argument("--spec", help="symbol spec JSON; also print the specialized value")
    common(p)

    for name, text in (
        ("identity-check", "check bd = tw for all pairs up to a weight"),
        ("delta-check", "check the Delta-derivative identities up to a weight"),
    ):
        p = sub.add_parser(name, help=text)
        p.add_argument("--max-weight", type=_nonnegative_int, required=True)
        common(p)

    p = sub.add_parser("ratio-numeric", help="determinant ratios det M_n^{lambda mu} / det M_n")
    pair(p)
    p.add_argument("--spec", required=True)
    p.add_argument("--n", type=_n_list, default=[8, 16, 32, 64])
    common(p)

    p = sub.add_parser("cross-check", help="compare the numeric ratio with both exact formulas")
    pair(p)
    p.add_argument("--spec", required=True)
    p.add_argument("--n", type=int, default=64)
    p.add_argument("--tol", type=_positive_float, default=1e-6)
    common(p)
    return parser


def _load_spec(parser: argparse.ArgumentParser, path: str | None) -> SymbolSpec | None:
    if path is None:
        return None
    if not os.path.isfile(path):
        parser.error(f"spec file not found: {path}")
    try:
        return SymbolSpec.load(path)
    except (ValueError, TypeError) as exc:
        parser.error(f"invalid spec file {path}: {exc}")


def _emit_poly(out, args, poly: SymPoly, spec: SymbolSpec | None, extra: dict) -> None:
    value = evaluate(poly, spec) if spec is not None else None
    if args.format == "json":
        doc = {"lambda": args.lam.to_json(), "mu": args.mu.to_json(), **extra,
               "text": str(poly), "poly": poly.to_json()}
        if value is not None:
            doc["value"] = _complex_json(value)
        out.write(json.dumps(doc, sort_keys=True) + "\n")
        return
    out.write(str(poly) + "\n")
    if value is not None:
        out.write(f"value = {value!r}\n")


def _emit_checks(out, args, name: str, results: list[PairResult]) -> bool:
    ok = all(r.passed for r in results)
    if args.format == "json":
        doc = {"check": name, "max_weight": args.max_weight, "passed": ok,
               "results": [r.to_json() for r in results]}
        out.write(json.dumps(doc, sort_keys=True) + "\n")
    else:
        for r in results:
            out.write(f"{'PASS' if r.passed else 'FAIL'} {r.check} lambda={r.lam} mu={r.mu}\n")
        passed = sum(r.passed for r in results)
        out.write(f"{name}: {passed}/{len(results)} passed\n")
    return ok


def run(argv: Sequence[str] | None = None, out=None) -> int:
    """Parse ``argv``, run one subcommand, return its exit code."""
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "bd":
        spec = _load_spec(parser, args.spec)
        _emit_poly(out, args, bd_poly(args.lam, args.mu), spec, {})
        return 0

    if args.command == "tw":
        spec = _load_spec(parser, args.spec)
        try:
            poly = tw_poly(args.lam, args.mu, args.d)
        except PreconditionError as exc:
            parser.error(str(exc))
        _emit_poly(out, args, poly, spec, {"d": args.d} if args.d is not None else {})
        return 0

    if args.command == "identity-check":
        return 0 if _emit_checks(out, args, "identity-check", identity_check(args.max_weight)) else 1

    if args.command == "delta-check":
        return 0 if _emit_checks(out, args, "delta-check", delta_check(args.max_weight)) else 1

    spec = _load_spec(parser, args.spec)
    try:
        if args.command == "ratio-numeric":
            ratios = ratio_sequence(spec, args.lam, args.mu, args.n)
            if args.format == "json":
                doc = {"lambda": args.lam.to_json(), "mu": args.mu.to_json(), "n": args.n,
                       "ratios": [_complex_json(z) for z in ratios]}
                out.write(json.dumps(doc, sort_keys=True) + "\n")
            else:
                for n, z in zip(args.n, ratios):
                    out.write(f"n={n} ratio={z!r}\n")
            return 0

        report = cross_check(spec, args.lam, args.mu, args.n, args.tol)
    except PreconditionError as exc:
        parser.error(str(exc))
    except (SingularDenominatorError, TruncationRangeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    if args.format == "json":
        out.write(json.dumps(report.to_json(), sort_keys=True) + "\n")
    else:
        out.write(
            f"lambda={report.lam} mu={report.mu} n={report.n}\n"
            f"ratio_numeric = {report.ratio_numeric!r}\n"
            f"bd_value = {report.bd_value!r}\n"
            f"tw_value = {report.tw_value!r}\n"
            f"max_discrepancy = {report.max_discrepancy!r}\n"
            f"converged = {str(report.converged).lower()}\n"
        )
    return 0 if report.converged else 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
