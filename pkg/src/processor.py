"""
Run constructions and turn their results into reports.
"""

import dataclasses
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional, Sequence, Tuple

from .config import DEFAULT_L_MAX
from .exceptions import ActiveSetError, CertificationError, InvalidParameterError
from .models import (
    ActiveSet,
    ConstructionReport,
    Method,
    MethodComparison,
    SweepCell,
    SweepTable,
    WeightParams,
)
from .opt import opt_set
from .oracle import adequate_universe, oracle_opt_set
from .pw import pw_set
from .qopt import qopt_set
from .tails import operator_norm
from .weights import PValue, format_p, validate_params

logger = logging.getLogger(__name__)


class ActiveSetProcessor:
    """Dispatch constructions by method and summarise them."""

    @staticmethod
    def build(
        params: WeightParams,
        eps: float,
        method: Method,
        j_max: Optional[int] = None,
        l_max: int = DEFAULT_L_MAX,
        s: Optional[int] = None,
        break_rule: str = "listing",
    ) -> ActiveSet:
        """Construct one active set."""
        if method is Method.PW:
            if s is None:
                return pw_set(params, eps, l_max=l_max)
            return pw_set(params, eps, l_max=l_max, s=s)
        if method is Method.QOPT:
            return qopt_set(params, eps, j_max=j_max, l_max=l_max, s=s, break_rule=break_rule)
        if method is Method.OPT:
            return opt_set(params, eps, j_max=j_max, l_max=l_max, s=s, break_rule=break_rule)
        if method is Method.ORACLE:
            if params.is_p_one:
                # the p = 1 threshold set is already the exact optimum
                active = opt_set(params, eps, l_max=l_max)
                return dataclasses.replace(active, method=Method.ORACLE)
            universe = adequate_universe(params, eps, s=s)
            return oracle_opt_set(params, eps, universe, s=s)
        raise InvalidParameterError(f"Unknown method: {method}")

    @staticmethod
    def certify(active: ActiveSet) -> None:
        """Fail when the residual certificate does not meet the budget."""
        if not active.is_certified():
            logger.error(
                f"Residual {active.residual_certificate:.6e} "
                f"exceeds budget {active.budget:.6e}"
            )
            raise CertificationError(
                active.method.value, active.residual_certificate, active.budget
            )

    @staticmethod
    def _report(
        params: WeightParams,
        eps: float,
        active: ActiveSet,
        wall_time: float,
        list_members: bool,
    ) -> ConstructionReport:
        return ConstructionReport(
            method=active.method.value,
            params=params,
            eps=eps,
            size=active.size,
            d=active.dimension,
            residual=active.residual_certificate,
            slack_bound=active.slack_bound,
            intervals=active.intervals,
            wall_time=wall_time,
            members=list(active.members) if list_members else None,
            active_set=active,
        )

    @classmethod
    def run_construct(
        cls,
        params: WeightParams,
        eps: float,
        method: Method,
        list_members: bool = True,
        **options,
    ) -> ConstructionReport:
        """Build the active set for (params, eps) and report it."""
        logger.info(
            f"Constructing {method.value} set for p={params.p_label}, a={params.a:g}, "
            f"c={params.c:g}, eps={eps:g}"
        )
        started = time.perf_counter()
        active = cls.build(params, eps, method, **options)
        elapsed = time.perf_counter() - started

        cls.certify(active)
        logger.info(
            f"Constructed {active.size} subsets (d={active.dimension}) in {elapsed:.2f}s"
        )
        return cls._report(params, eps, active, elapsed, list_members)

    @classmethod
    def run_normalized(
        cls,
        params: WeightParams,
        eps: float,
        method: Method,
        list_members: bool = True,
        **options,
    ) -> ConstructionReport:
        """Construct for the normalized error eps * ||S||."""
        norm = operator_norm(params)
        effective = eps * norm
        logger.info(f"Operator norm {norm:.12g}; effective eps {effective:.6g}")
        report = cls.run_construct(params, effective, method, list_members, **options)
        report.eps = eps
        report.operator_norm = norm
        report.effective_eps = effective
        return report

    @classmethod
    def compare(
        cls,
        params: WeightParams,
        eps: float,
        normalized: bool = False,
        list_members: bool = True,
        **options,
    ) -> MethodComparison:
        """PW, quasi-optimal and optimal sets side by side."""
        run = cls.run_normalized if normalized else cls.run_construct
        reports = [
            run(params, eps, method, list_members, **options)
            for method in (Method.PW, Method.QOPT, Method.OPT)
        ]
        pw, qopt, opt = (report.active_set for report in reports)
        assert pw is not None and qopt is not None and opt is not None

        opt_within_pw = opt.member_set <= pw.member_set
        sizes_ordered = opt.size <= qopt.size <= pw.size
        if not opt_within_pw:
            logger.warning("Optimal set is not contained in the PW set")
        if not sizes_ordered:
            logger.warning(
                f"Sizes out of order: opt={opt.size}, qopt={qopt.size}, pw={pw.size}"
            )
        return MethodComparison(reports, opt_within_pw, sizes_ordered)

    @classmethod
    def run_sweep(
        cls,
        p: PValue,
        eps: float,
        a_values: Sequence[float],
        c_values: Sequence[float],
        method: Method = Method.OPT,
        workers: int = 1,
        **options,
    ) -> SweepTable:
        """Sizes and dimensions over an (a, c) grid; failed cells carry their error."""
        grid = [(p, a, c, eps, method, options) for c in c_values for a in a_values]
        if workers > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                cells = list(pool.map(_sweep_cell, grid))
        else:
            cells = [_sweep_cell(args) for args in grid]

        p_label = format_p(p)
        return SweepTable(
            p_label=p_label,
            eps=eps,
            method=method.value,
            a_values=list(a_values),
            c_values=list(c_values),
            cells=cells,
        )


def _sweep_cell(args: Tuple[PValue, float, float, float, Method, dict]) -> SweepCell:
    p, a, c, eps, method, options = args
    try:
        params = validate_params(a, c, p)
        active = ActiveSetProcessor.build(params, eps, method, **options)
        ActiveSetProcessor.certify(active)
    except ActiveSetError as e:
        logger.warning(f"Sweep cell a={a:g}, c={c:g} failed: {e}")
        return SweepCell(a=a, c=c, error=str(e))
    logger.info(f"Sweep cell a={a:g}, c={c:g}: size {active.size}, d {active.dimension}")
    return SweepCell(a=a, c=c, size=active.size, d=active.dimension)


def parse_grid(text: str) -> List[float]:
    """Comma-separated numbers; fractions such as 1/2 are accepted."""
    values = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        try:
            if "/" in item:
                numerator, denominator = item.split("/", 1)
                values.append(float(numerator) / float(denominator))
            else:
                values.append(float(item))
        except (ValueError, ZeroDivisionError):
            raise InvalidParameterError(f"Cannot parse grid value {item!r}")
    if not values:
        raise InvalidParameterError(f"Empty grid: {text!r}")
    return values
