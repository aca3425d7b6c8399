"""
Optimal active sets.

Same interval sweep as the quasi-optimal construction, but the in-interval
subsets of step j are first collected together with their total weight T_j.
When T_j cannot cover the remaining budget T, the whole interval is included.
Otherwise I_j is the final interval: its subsets are sorted by decreasing
modified weight and included one by one until T <= 0, so the result is the
shortest prefix of the weight-ordered sequence of all subsets.
"""

import dataclasses
import logging
from typing import Dict, Optional, Tuple

from .config import DEFAULT_L_MAX
from .enumeration import IntervalPartition, walk_cardinality
from .exceptions import EnumerationLimitError, InvalidParameterError
from .models import ActiveSet, Method, Subset, WeightParams
from .pw import pw_set_p1
from .qopt import SearchState, Trace, prepare_bounds
from .tails import CompensatedSum

logger = logging.getLogger(__name__)


def weight_order_key(entry: Tuple[Subset, float]) -> Tuple[float, int, Subset]:
    """Decreasing weight, then smaller cardinality, then lexicographically smaller."""
    u, w = entry
    return (-w, len(u), u)


class OptState(SearchState):
    """Search state that collects each interval into L_j^unsorted with its tally T_j."""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.unsorted: Dict[Subset, float] = {}
        self.tally = CompensatedSum()

    def start_interval(self) -> None:
        self.unsorted = {}
        self.tally = CompensatedSum()

    def collect(self, u: Subset, w: float) -> None:
        self.unsorted[u] = w
        self.tally.add(w)


def opt_search(state: OptState, j: int) -> int:
    """Replay L_j into L_j^unsorted; returns the cardinality l_next for the fresh traversal."""
    accept = state.accept_for(j)

    def visit(u: Subset) -> None:
        state.buckets.discard(j, u)
        state.record(j, u)

    l_next = 1
    while True:
        start = state.buckets.pop_first(j)
        if start is None:
            return l_next
        walk = walk_cardinality(
            start, state.weigh, accept, stop=state.unsorted.__contains__, visit=visit
        )
        for u, w, inside in walk:
            if inside:
                state.collect(u, w)
            else:
                state.buckets.push(j + 1, u)
        l_next = len(start) + 1


def opt_set(
    params: WeightParams,
    eps: float,
    j_max: Optional[int] = None,
    l_max: int = DEFAULT_L_MAX,
    s: Optional[int] = None,
    partition: Optional[IntervalPartition] = None,
    break_rule: str = "listing",
    trace: Optional[Trace] = None,
) -> ActiveSet:
    """Optimal active set; for p = 1 this is the exact PW set."""
    if params.is_p_one:
        return dataclasses.replace(pw_set_p1(params, eps, l_max=l_max), method=Method.OPT)
    if not eps > 0:
        raise InvalidParameterError(f"eps must be positive, got {eps}")

    bound, partition = prepare_bounds(params, eps, j_max, s, partition)
    state = OptState(params, eps, bound, partition, l_max, break_rule, trace)
    if state.complete:
        return state.to_active_set(Method.OPT, 0)

    for j in range(1, partition.j_max + 1):
        state.start_interval()
        l_next = opt_search(state, j)
        for u, w, inside in state.fresh_walk(j, l_next):
            if inside:
                state.collect(u, w)
            else:
                state.buckets.push(j + 1, u)

        logger.debug(
            f"Interval {j}: {len(state.unsorted)} sets, T_j={state.tally.value:.3e}, "
            f"T={state.remaining.value:.3e}"
        )
        if state.tally.value >= state.remaining.value:
            for u, w in sorted(state.unsorted.items(), key=weight_order_key):
                state.include(u, w)
                if state.complete:
                    active = state.to_active_set(Method.OPT, j)
                    logger.info(f"Optimal set: {active.size} subsets after {j} intervals")
                    return active
            # rounding left T marginally positive; keep sweeping
            continue
        for u, w in state.unsorted.items():
            state.include(u, w)

    logger.error(f"Interval guard j_max={partition.j_max} exhausted")
    raise EnumerationLimitError("j_max", partition.j_max, state.residual, state.budget)


def d_sup_upper(params: WeightParams, eps: float, **kwargs) -> int:
    """Largest cardinality in the optimal set, an upper bound on the superposition dimension."""
    return opt_set(params, eps, **kwargs).dimension
