#!/usr/bin/env python3
"""
MDM Active Sets

Construct active sets for the multivariate decomposition method with product
weights: the PW threshold sets, quasi-optimal and optimal sets, and a
brute-force oracle. Results are printed as reports, in the compressed listing
notation, or as JSON/CSV, and swept over (a, c) grids.
"""

import argparse
import logging
import sys
from typing import List, Optional

from src.config import DEFAULT_L_MAX, DEFAULT_OUTPUT_FILE, LOG_FORMAT, LOG_LEVEL
from src.display import ActiveSetDisplay
from src.exceptions import (
    CertificationError,
    EnumerationLimitError,
    InvalidParameterError,
    TruncationError,
    UniverseTooSmallError,
)
from src.models import Method
from src.processor import ActiveSetProcessor, parse_grid
from src.qopt import BREAK_RULES
from src.weights import validate_params

# Configure logging
logging.basicConfig(level=getattr(logging, LOG_LEVEL), format=LOG_FORMAT)
logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INVALID = 2
EXIT_GUARD = 3


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return value


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1: {text!r}")
    return value


def _add_search_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--p", required=True, help="space exponent: 1, any p > 1, or inf")
    parser.add_argument("--jmax", type=_positive_int, help="maximum number of intervals")
    parser.add_argument(
        "--lmax", type=_positive_int, default=DEFAULT_L_MAX, help="maximum subset cardinality"
    )
    parser.add_argument("--s", type=_positive_int, help="truncation point of the tail bounds")
    parser.add_argument(
        "--break-rule",
        choices=BREAK_RULES,
        default="listing",
        help="cardinality break: l >= c (listing) or l >= c^(1/a) (prose)",
    )
    parser.add_argument(
        "--output",
        nargs="?",
        const=DEFAULT_OUTPUT_FILE,
        help=f"also write the JSON report to a file (default {DEFAULT_OUTPUT_FILE})",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mdm-active-sets",
        description="Active sets for the multivariate decomposition method",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    construct = commands.add_parser("construct", help="construct one active set")
    _add_search_options(construct)
    construct.add_argument("--a", type=float, required=True, help="weight decay a")
    construct.add_argument("--c", type=float, default=1.0, help="weight scale c")
    construct.add_argument("--eps", type=_positive_float, required=True, help="error request")
    construct.add_argument(
        "--method",
        choices=[m.value for m in Method] + ["all"],
        default=Method.OPT.value,
        help="construction (all compares pw, qopt and opt)",
    )
    construct.add_argument(
        "--normalized", action="store_true", help="scale eps by the operator norm ||S||"
    )
    construct.add_argument("--format", choices=["text", "json", "paper"], default="text")
    construct.add_argument(
        "--list",
        dest="list_members",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="include the member listing",
    )

    sweep = commands.add_parser("sweep", help="sizes and dimensions over an (a, c) grid")
    _add_search_options(sweep)
    sweep.add_argument(
        "--eps", type=_positive_float, nargs="+", required=True, help="one or more error requests"
    )
    sweep.add_argument("--a", default="4,3,2", help="comma-separated values of a")
    sweep.add_argument("--c", default="1/2,1,2", help="comma-separated values of c")
    sweep.add_argument(
        "--method",
        choices=[Method.OPT.value, Method.QOPT.value, Method.PW.value],
        default=Method.OPT.value,
    )
    sweep.add_argument("--format", choices=["text", "csv", "json"], default="text")
    sweep.add_argument("--workers", type=_positive_int, default=1, help="parallel sweep cells")
    return parser


def _search_options(args: argparse.Namespace) -> dict:
    return {"j_max": args.jmax, "l_max": args.lmax, "s": args.s, "break_rule": args.break_rule}


def _run_construct(args: argparse.Namespace) -> None:
    params = validate_params(args.a, args.c, args.p)
    options = _search_options(args)
    # compressed notation needs the members even under --no-list
    list_members = args.list_members or args.format == "paper"

    if args.method == "all":
        comparison = ActiveSetProcessor.compare(
            params, args.eps, args.normalized, list_members, **options
        )
        payload = ActiveSetDisplay.comparison_json(comparison)
        if args.format == "json":
            print(payload)
        elif args.format == "paper":
            for report in comparison.reports:
                print(f"{report.method}: {ActiveSetDisplay.notation(report)}")
        else:
            ActiveSetDisplay.display_comparison(comparison)
    else:
        method = Method(args.method)
        run = ActiveSetProcessor.run_normalized if args.normalized else ActiveSetProcessor.run_construct
        report = run(params, args.eps, method, list_members, **options)
        payload = ActiveSetDisplay.report_json(report)
        if args.format == "json":
            print(payload)
        elif args.format == "paper":
            print(ActiveSetDisplay.notation(report))
        else:
            ActiveSetDisplay.display_report(report)

    if args.output:
        ActiveSetDisplay.save_to_json(payload, args.output)


def _run_sweep(args: argparse.Namespace) -> None:
    a_values = parse_grid(args.a)
    c_values = parse_grid(args.c)
    tables = [
        ActiveSetProcessor.run_sweep(
            args.p,
            eps,
            a_values,
            c_values,
            method=Method(args.method),
            workers=args.workers,
            **_search_options(args),
        )
        for eps in args.eps
    ]
    if args.format == "csv":
        print(ActiveSetDisplay.sweep_csv(tables), end="")
    elif args.format == "json":
        print(ActiveSetDisplay.sweep_json(tables))
    else:
        for table in tables:
            ActiveSetDisplay.display_sweep(table)

    if args.output:
        ActiveSetDisplay.save_to_json(ActiveSetDisplay.sweep_json(tables), args.output)


def main(argv: Optional[List[str]] = None) -> int:
    """Main function to run the active-set constructions."""
    args = build_parser().parse_args(argv)
    try:
        logger.info(f"Starting {args.command}...")
        if args.command == "construct":
            _run_construct(args)
        else:
            _run_sweep(args)
        logger.info("Completed successfully!")
        return EXIT_OK

    except InvalidParameterError as e:
        logger.error(f"Invalid parameters: {e}")
        print(f"❌ Invalid parameters: {e}", file=sys.stderr)
        return EXIT_INVALID

    except (
        CertificationError, EnumerationLimitError, TruncationError, UniverseTooSmallError
    ) as e:
        logger.error(f"Construction stopped: {e}")
        print(f"❌ Construction stopped: {e}", file=sys.stderr)
        return EXIT_GUARD

    except Exception as e:
        logger.error(f"Run failed: {e}")
        print(f"❌ Run failed: {e}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
