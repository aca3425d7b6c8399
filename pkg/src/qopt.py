"""
Quasi-optimal active sets.

Subsets are processed interval by interval. Within interval I_j the sets
carried over from the previous step are replayed first (q_opt_search), then
a fresh cardinality-major traversal picks up the remaining subsets whose
modified weight falls into I_j. Every in-interval subset is included at once
and its weight subtracted from T = A_s - eps^{p*} - sum(included); the
construction stops the moment T <= 0.
"""

import dataclasses
import functools
import logging
from typing import Callable, Dict, Iterator, List, Optional, Tuple

from .config import DEFAULT_L_MAX
from .enumeration import (
    BucketList,
    IntervalPartition,
    default_j_max,
    first_of_cardinality,
    walk_cardinality,
)
from .exceptions import EnumerationLimitError, InvalidParameterError
from .models import ActiveSet, Method, Subset, TailBound, WeightParams
from .pw import pw_set_p1
from .tails import CompensatedSum, a_s_bound, choose_s
from .weights import gamma_bar

logger = logging.getLogger(__name__)

BREAK_RULES = ("listing", "prose")

# (interval, subset) pairs in the order subsets are inspected
Trace = List[Tuple[int, Subset]]


class SearchState:
    """
    Traversal state shared by the interval-bucketed constructions.

    Holds the certified remaining budget T, the carry-over buckets L_j and the
    cardinality break rule. Subclasses decide what happens to in-interval sets.
    """

    def __init__(
        self,
        params: WeightParams,
        eps: float,
        bound: TailBound,
        partition: IntervalPartition,
        l_max: int = DEFAULT_L_MAX,
        break_rule: str = "listing",
        trace: Optional[Trace] = None,
    ):
        if break_rule not in BREAK_RULES:
            raise InvalidParameterError(
                f"break rule must be one of {', '.join(BREAK_RULES)}, got {break_rule!r}"
            )
        self.params = params
        self.eps = eps
        self.budget = params.budget(eps)
        self.bound = bound
        self.partition = partition
        self.l_max = l_max
        self.trace = trace
        self.buckets = BucketList()
        self.weigh: Callable[[Subset], float] = functools.partial(gamma_bar, params)

        # the listing stops at l >= c, the prose walkthrough at l >= c^{1/a}
        if break_rule == "listing":
            self.break_length = params.c
        else:
            self.break_length = params.c ** (1.0 / params.a)

        self.members: Dict[Subset, None] = {(): None}
        self.remaining = CompensatedSum(bound.value)
        self.remaining.subtract(self.budget)
        self.remaining.subtract(1.0)

    @property
    def complete(self) -> bool:
        return self.remaining.value <= 0

    @property
    def residual(self) -> float:
        """Certified bound on the excluded mass: A_s minus everything included."""
        return max(self.remaining.value + self.budget, 0.0)

    def include(self, u: Subset, w: float) -> None:
        self.members[u] = None
        self.remaining.subtract(w)

    def accept_for(self, j: int) -> Callable[[float], bool]:
        return functools.partial(self.partition.contains, j)

    def record(self, j: int, u: Subset) -> None:
        if self.trace is not None:
            self.trace.append((j, u))

    def fresh_walk(self, j: int, l_next: int) -> Iterator[Tuple[Subset, float, bool]]:
        """Cardinality-major traversal of I_j starting at cardinality l_next."""
        accept = self.accept_for(j)
        visit = functools.partial(self.record, j)
        length = l_next
        while True:
            if length > self.l_max:
                logger.error(f"Cardinality guard l_max={self.l_max} reached in interval {j}")
                raise EnumerationLimitError("l_max", self.l_max, self.residual, self.budget)
            start = first_of_cardinality(length)
            if not accept(self.weigh(start)) and length >= self.break_length:
                return
            yield from walk_cardinality(start, self.weigh, accept, visit=visit)
            length += 1

    def to_active_set(self, method: Method, intervals: int) -> ActiveSet:
        return ActiveSet(
            members=tuple(self.members),
            method=method,
            eps=self.eps,
            residual_certificate=self.residual,
            budget=self.budget,
            slack_bound=self.bound.slack_bound,
            intervals=intervals,
            s=self.bound.s,
        )


class QoptState(SearchState):
    """Search state whose in-interval sets go straight into the result."""


def q_opt_search(state: QoptState, j: int) -> int:
    """
    Replay the sets carried over into L_j.

    Each carried set restarts the increment walk; entries met along the way
    are dropped from L_j, and a walk ends early on a set already in the result.
    Returns the cardinality l_next at which the fresh traversal resumes.
    """
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
            start, state.weigh, accept, stop=state.members.__contains__, visit=visit
        )
        for u, w, inside in walk:
            if inside:
                state.include(u, w)
                if state.complete:
                    return l_next
            else:
                state.buckets.push(j + 1, u)
        l_next = len(start) + 1


def prepare_bounds(
    params: WeightParams,
    eps: float,
    j_max: Optional[int],
    s: Optional[int],
    partition: Optional[IntervalPartition],
) -> Tuple[TailBound, IntervalPartition]:
    if s is None:
        s = choose_s(params, eps)
    bound = a_s_bound(params, s)
    if partition is None:
        partition = IntervalPartition.default(
            default_j_max(params.p_star, eps) if j_max is None else j_max
        )
    logger.info(
        f"A_s={bound.value:.12g} at s={bound.s} (slack {bound.slack_bound:.3e}), "
        f"{partition.j_max} intervals"
    )
    return bound, partition


def qopt_set(
    params: WeightParams,
    eps: float,
    j_max: Optional[int] = None,
    l_max: int = DEFAULT_L_MAX,
    s: Optional[int] = None,
    partition: Optional[IntervalPartition] = None,
    break_rule: str = "listing",
    trace: Optional[Trace] = None,
) -> ActiveSet:
    """Quasi-optimal active set; for p = 1 the exact PW set is already optimal."""
    if params.is_p_one:
        return dataclasses.replace(pw_set_p1(params, eps, l_max=l_max), method=Method.QOPT)
    if not eps > 0:
        raise InvalidParameterError(f"eps must be positive, got {eps}")

    bound, partition = prepare_bounds(params, eps, j_max, s, partition)
    state = QoptState(params, eps, bound, partition, l_max, break_rule, trace)
    if state.complete:
        return state.to_active_set(Method.QOPT, 0)

    for j in range(1, partition.j_max + 1):
        l_next = q_opt_search(state, j)
        if state.complete:
            return _finish(state, j)
        for u, w, inside in state.fresh_walk(j, l_next):
            if inside:
                state.include(u, w)
                if state.complete:
                    return _finish(state, j)
            else:
                state.buckets.push(j + 1, u)
        logger.debug(
            f"Interval {j} done: {len(state.members)} sets, T={state.remaining.value:.3e}, "
            f"{state.buckets.size(j + 1)} carried over"
        )

    logger.error(f"Interval guard j_max={partition.j_max} exhausted")
    raise EnumerationLimitError("j_max", partition.j_max, state.residual, state.budget)


def _finish(state: QoptState, j: int) -> ActiveSet:
    active = state.to_active_set(Method.QOPT, j)
    logger.info(f"Quasi-optimal set: {active.size} subsets after {j} intervals")
    return active
