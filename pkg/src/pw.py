"""
Threshold active sets.

For p = 1 the set {u : gamma_u > eps} is the smallest valid active set. For
p > 1 every u whose modified weight exceeds

    Threshold(eps, t) = (eps^{p*} / sum_u gamma_bar_u^t)^{1 / (1 - t)}

is taken, with t chosen from the grid i/40 to make the threshold as large as
possible.
"""

import functools
import logging
import math
from typing import Callable, List, Tuple

from .config import DEFAULT_L_MAX, POWER_SUM_S
from .enumeration import first_of_cardinality, walk_cardinality
from .exceptions import EnumerationLimitError, InvalidParameterError
from .models import ActiveSet, Method, Subset, WeightParams
from .tails import power_sum_bound
from .weights import extension_factor, gamma, gamma_bar

logger = logging.getLogger(__name__)

T_GRID_DENOMINATOR = 40


def _validate_eps(eps: float) -> None:
    if not (eps > 0 and math.isfinite(eps)):
        raise InvalidParameterError(f"eps must be a positive finite number, got {eps}")


def _collect_above(
    params: WeightParams,
    weigh: Callable[[Subset], float],
    threshold: float,
    l_max: int,
    budget: float,
    residual_at_limit: Callable[[List[Subset], float], float],
) -> Tuple[List[Subset], float]:
    """
    All subsets with weight strictly above threshold, cardinality by cardinality.

    Returns the members and the largest weight among the visited non-members.
    Hitting l_max reports residual_at_limit(members, largest_excluded).
    """
    members: List[Subset] = []
    largest_excluded = 0.0
    length = 0
    while True:
        if length > l_max:
            residual = residual_at_limit(members, largest_excluded)
            logger.error(
                f"Cardinality guard l_max={l_max} reached with {len(members)} subsets"
            )
            raise EnumerationLimitError("l_max", l_max, residual, budget)
        start = first_of_cardinality(length)
        head = weigh(start)
        if head > threshold:
            if length == 0:
                members.append(start)
            else:
                for u, w, inside in walk_cardinality(start, weigh, lambda v: v > threshold):
                    if inside:
                        members.append(u)
                    else:
                        largest_excluded = max(largest_excluded, w)
        else:
            largest_excluded = max(largest_excluded, head)
            # no subset of this size qualifies, and adding coordinates cannot help
            if extension_factor(params, length + 1) <= 1.0:
                break
        length += 1
    return members, largest_excluded


def pw_set_p1(params: WeightParams, eps: float, l_max: int = DEFAULT_L_MAX) -> ActiveSet:
    """The exact smallest active set {u : prod_{j in u} c/j^a > eps} for p = 1."""
    if not params.is_p_one:
        raise InvalidParameterError("pw_set_p1 requires p = 1")
    _validate_eps(eps)

    weigh = functools.partial(gamma, params)

    def heaviest_left(members: List[Subset], largest_excluded: float) -> float:
        return max(largest_excluded, weigh(first_of_cardinality(l_max + 1)))

    members, largest_excluded = _collect_above(
        params, weigh, eps, l_max, params.budget(eps), heaviest_left
    )
    logger.info(f"PW (p=1) set for eps={eps:g}: {len(members)} subsets")
    return ActiveSet(
        members=tuple(members),
        method=Method.PW,
        eps=eps,
        residual_certificate=largest_excluded,
        budget=params.budget(eps),
        threshold=eps,
    )


@functools.lru_cache(maxsize=512)
def _log_power_sum(params: WeightParams, t: float, s: int) -> float:
    return math.log(power_sum_bound(params, t, s).value)


def _require_open_t(params: WeightParams, t: float) -> None:
    if params.p_star is None:
        raise InvalidParameterError("the PW threshold needs a finite p*")
    if not 1.0 / params.decay < t < 1.0:
        raise InvalidParameterError(
            f"t must lie in ({1.0 / params.decay:g}, 1), got {t}"
        )


def _log_threshold(params: WeightParams, eps: float, t: float, s: int) -> float:
    assert params.p_star is not None
    return (params.p_star * math.log(eps) - _log_power_sum(params, t, s)) / (1.0 - t)


def pw_threshold(params: WeightParams, eps: float, t: float, s: int = POWER_SUM_S) -> float:
    """(eps^{p*} / S_t)^{1/(1-t)} with S_t the certified upper bound on sum_u gamma_bar_u^t."""
    _require_open_t(params, t)
    _validate_eps(eps)
    return math.exp(_log_threshold(params, eps, t, s))


def t_grid(params: WeightParams) -> List[int]:
    """Numerators i with 40/(a p*) < i <= 39."""
    if params.p_star is None:
        raise InvalidParameterError("the t grid needs a finite p*")
    lowest = math.floor(T_GRID_DENOMINATOR / params.decay) + 1
    return list(range(lowest, T_GRID_DENOMINATOR))


def pw_select_t(params: WeightParams, eps: float, s: int = POWER_SUM_S) -> float:
    """The grid value t = i/40 with the largest threshold; ties go to the smaller i."""
    _validate_eps(eps)
    grid = t_grid(params)
    if not grid:
        raise InvalidParameterError(
            f"no grid point i/40 lies in ({1.0 / params.decay:g}, 1)"
        )

    best_i = grid[0]
    best = _log_threshold(params, eps, best_i / T_GRID_DENOMINATOR, s)
    for i in grid[1:]:
        value = _log_threshold(params, eps, i / T_GRID_DENOMINATOR, s)
        logger.debug(f"t={i}/{T_GRID_DENOMINATOR}: log threshold {value:.6f}")
        if value > best:
            best_i, best = i, value

    t = best_i / T_GRID_DENOMINATOR
    logger.info(f"Selected t={t:g} (threshold {math.exp(best):.6e})")
    return t


def pw_set(
    params: WeightParams,
    eps: float,
    l_max: int = DEFAULT_L_MAX,
    s: int = POWER_SUM_S,
) -> ActiveSet:
    """PW active set: every u with gamma_bar_u above the best grid threshold."""
    if params.is_p_one:
        return pw_set_p1(params, eps, l_max=l_max)
    _validate_eps(eps)

    t = pw_select_t(params, eps, s)
    threshold = pw_threshold(params, eps, t, s)
    weigh = functools.partial(gamma_bar, params)
    def mass_left(members: List[Subset], largest_excluded: float) -> float:
        total = power_sum_bound(params, 1.0, s).value
        return max(total - math.fsum(weigh(u) for u in members), 0.0)

    members, _ = _collect_above(
        params, weigh, threshold, l_max, params.budget(eps), mass_left
    )

    power_sum = power_sum_bound(params, t, s)
    residual = threshold ** (1.0 - t) * power_sum.value
    logger.info(f"PW set for p={params.p_label}, eps={eps:g}: {len(members)} subsets")
    return ActiveSet(
        members=tuple(members),
        method=Method.PW,
        eps=eps,
        residual_certificate=residual,
        budget=params.budget(eps),
        slack_bound=power_sum.slack_bound,
        s=s,
        threshold=threshold,
        t=t,
    )
