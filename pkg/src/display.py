"""
Display and output utilities for active-set reports.
"""

import csv
import io
import logging
import re
from typing import Iterable, List, Sequence

from .config import DEFAULT_OUTPUT_FILE
from .exceptions import InvalidParameterError
from .models import ConstructionReport, MethodComparison, Subset, SweepTable
from .schemas import ComparisonSchema, ReportSchema, SweepSchema

logger = logging.getLogger(__name__)

EMPTY = "∅"
MIN_BRACKET_RUN = 3

_TOKEN = re.compile(r"\[\.{2,3},?(\{[\d,]*\})\]|(\{[\d,]*\})|(∅)")


def format_subset(u: Subset) -> str:
    if not u:
        return EMPTY
    return "{" + ",".join(str(j) for j in u) + "}"


def _run_start(prefix: Subset) -> int:
    return prefix[-1] + 1 if prefix else 1


def compress_notation(members: Iterable[Subset]) -> str:
    """
    Render subsets in the compressed listing notation.

    Members are ordered by (cardinality, lexicographic). A run
    {x}+(x_k+1), ..., {x}+(x_{k+1}) starting right after its prefix becomes
    "[...{x_1,...,x_k,x_{k+1}}]" once it holds at least three subsets.
    """
    ordered = sorted(members, key=lambda u: (len(u), u))
    parts: List[str] = []
    i = 0
    while i < len(ordered):
        u = ordered[i]
        end = i + 1
        if u and u[-1] == _run_start(u[:-1]):
            while (
                end < len(ordered)
                and len(ordered[end]) == len(u)
                and ordered[end][:-1] == u[:-1]
                and ordered[end][-1] == ordered[end - 1][-1] + 1
            ):
                end += 1
        if end - i >= MIN_BRACKET_RUN:
            parts.append("[..." + format_subset(ordered[end - 1]) + "]")
        else:
            parts.extend(format_subset(v) for v in ordered[i:end])
        i = end
    return ",".join(parts)


def _parse_braces(text: str) -> Subset:
    inner = text[1:-1]
    if not inner:
        return ()
    try:
        return tuple(int(item) for item in inner.split(",") if item)
    except ValueError:
        raise InvalidParameterError(f"Malformed subset {text!r}")


def parse_notation(text: str) -> List[Subset]:
    """
    Expand compressed notation back into the listed subsets.

    Accepts "[...{...}]", "[..{...}]" and "[..., {...}]", arbitrary spaces,
    and an optional pair of braces around the whole listing.
    """
    compact = re.sub(r"\s+", "", text)
    members: List[Subset] = []
    for match in _TOKEN.finditer(compact):
        run, single, empty = match.groups()
        if empty:
            members.append(())
        elif single:
            members.append(_parse_braces(single))
        else:
            last = _parse_braces(run)
            if not last:
                raise InvalidParameterError(f"Empty run {match.group(0)!r}")
            prefix = last[:-1]
            members.extend(prefix + (k,) for k in range(_run_start(prefix), last[-1] + 1))
    return members


class ActiveSetDisplay:
    """Handle display and output of active-set reports."""

    @staticmethod
    def display_report(report: ConstructionReport) -> None:
        """Display one construction report in a formatted way."""
        params = report.params
        print("\n" + "=" * 60)
        print(f"ACTIVE SET ({report.method.upper()})")
        print("=" * 60)

        print(f"\n⚙️  p={params.p_label}, a={params.a:g}, c={params.c:g}, eps={report.eps:g}")
        if report.normalized:
            print(f"   ‖S‖={report.operator_norm:.12g}, effective eps={report.effective_eps:.6g}")
        print(f"📦 |U| = {report.size}")
        print(f"📐 d(U) = {report.d}")
        print(f"🧮 residual = {report.residual:.6e}")
        print(f"   slack bound = {report.slack_bound:.3e}")
        if report.intervals:
            print(f"   intervals processed = {report.intervals}")
        print(f"⏱️  {report.wall_time:.3f}s")

        if report.members is not None:
            print("-" * 40)
            print(compress_notation(report.members))

        print("=" * 60)

    @staticmethod
    def display_comparison(comparison: MethodComparison) -> None:
        """Display PW, quasi-optimal and optimal results side by side."""
        print("\n" + "=" * 60)
        print("METHOD COMPARISON")
        print("=" * 60)
        print(f"\n{'method':<8}{'|U|':>10}{'d(U)':>8}{'residual':>16}")
        print("-" * 42)
        for report in comparison.reports:
            print(f"{report.method:<8}{report.size:>10}{report.d:>8}{report.residual:>16.6e}")
        print()
        mark = "✅" if comparison.opt_within_pw else "⚠️ "
        print(f"{mark} optimal set within PW set: {comparison.opt_within_pw}")
        mark = "✅" if comparison.sizes_ordered else "⚠️ "
        print(f"{mark} |opt| <= |qopt| <= |pw|: {comparison.sizes_ordered}")
        print("=" * 60)

    @staticmethod
    def display_sweep(table: SweepTable) -> None:
        """Display sizes and dimensions as (c rows) x (a columns) tables."""
        for title, grid in (("|U|", table.sizes()), ("d(U)", table.dims())):
            print("\n" + "=" * 60)
            print(f"{title} of {table.method} sets for p={table.p_label}, eps={table.eps:g}")
            print("=" * 60)
            header = "c \\ a".ljust(10) + "".join(f"{a:>10g}" for a in table.a_values)
            print(header)
            print("-" * len(header))
            for c, row in zip(table.c_values, grid):
                cells = "".join(f"{'-' if v is None else v:>10}" for v in row)
                print(f"{c:<10g}{cells}")
        failed = [cell for cell in table.cells if cell.error]
        for cell in failed:
            print(f"❌ a={cell.a:g}, c={cell.c:g}: {cell.error}")
        print("=" * 60)

    @staticmethod
    def notation(report: ConstructionReport) -> str:
        if report.members is None:
            raise InvalidParameterError("compressed notation needs the member listing")
        return compress_notation(report.members)

    @staticmethod
    def report_json(report: ConstructionReport) -> str:
        return ReportSchema.from_report(report).model_dump_json(indent=2)

    @staticmethod
    def comparison_json(comparison: MethodComparison) -> str:
        schema = ComparisonSchema(
            reports=[ReportSchema.from_report(r) for r in comparison.reports],
            opt_within_pw=comparison.opt_within_pw,
            sizes_ordered=comparison.sizes_ordered,
        )
        return schema.model_dump_json(indent=2)

    @staticmethod
    def sweep_json(tables: Sequence[SweepTable]) -> str:
        return "[" + ",".join(SweepSchema.from_table(t).model_dump_json() for t in tables) + "]"

    @staticmethod
    def sweep_csv(tables: Sequence[SweepTable]) -> str:
        """CSV with header c,a,size,d; an eps column is added for several tables."""
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        several = len(tables) > 1
        writer.writerow((["eps"] if several else []) + ["c", "a", "size", "d"])
        for table in tables:
            for c in table.c_values:
                for a in table.a_values:
                    cell = table.cell(a, c)
                    row = [f"{c:g}", f"{a:g}", _blank(cell.size), _blank(cell.d)]
                    writer.writerow(([f"{table.eps:g}"] if several else []) + row)
        return buffer.getvalue()

    @staticmethod
    def save_to_json(payload: str, filename: str = DEFAULT_OUTPUT_FILE) -> None:
        """Save a JSON report to a file."""
        try:
            with open(filename, "w", encoding="utf-8") as f:
                f.write(payload)
                f.write("\n")

            logger.info(f"Report saved to {filename}")

        except OSError as e:
            logger.error(f"Failed to save report to {filename}: {e}")
            print(f"\n❌ Failed to save report to {filename}: {e}")
            raise


def _blank(value) -> str:
    return "" if value is None else str(value)
