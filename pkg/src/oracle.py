"""
Brute-force reference constructions on truncated universes.

A TruncatedUniverse holds every subset of {1, ..., M} with at most L
elements. Heavy-tailed weights need M in the thousands before the outside
mass is small enough, far beyond what any L >= 2 can enumerate. A
WeightFloorUniverse holds every subset whose modified weight reaches a
floor, and adequate_universe takes whichever of the two is smaller.
Either way the weights are enumerated with numpy, fully sorted, and taken
greedily; the mass outside the universe is certified against A_s.
"""

import functools
import itertools
import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from .config import ORACLE_MAX_SUBSETS
from .exceptions import InvalidParameterError, UniverseTooSmallError
from .models import ActiveSet, Method, Subset, TailBound, WeightParams
from .tails import CompensatedSum, a_s_bound, choose_s

logger = logging.getLogger(__name__)

OUTSIDE_FRACTION = 1e-2
FLOOR_STEP = 10.0


@dataclass(frozen=True)
class TruncatedUniverse:
    """All subsets of {1, ..., max_index} with at most max_card elements."""

    max_index: int
    max_card: int

    def __post_init__(self) -> None:
        if self.max_index < 1 or self.max_card < 0:
            raise InvalidParameterError(
                f"universe needs max_index >= 1 and max_card >= 0, "
                f"got ({self.max_index}, {self.max_card})"
            )

    @property
    def count(self) -> int:
        top = min(self.max_card, self.max_index)
        return sum(math.comb(self.max_index, k) for k in range(top + 1))

    def subsets(self, max_subsets: int = ORACLE_MAX_SUBSETS) -> List[np.ndarray]:
        """Index arrays per cardinality, rows in lexicographic order."""
        if self.count > max_subsets:
            raise UniverseTooSmallError(
                f"universe {self} holds {self.count} subsets, "
                f"above the guard {max_subsets}"
            )
        blocks = []
        for k in range(min(self.max_card, self.max_index) + 1):
            rows = itertools.combinations(range(1, self.max_index + 1), k)
            flat = np.fromiter(itertools.chain.from_iterable(rows), dtype=np.int64)
            empty = np.zeros((1, 0), dtype=np.int64)
            blocks.append(flat.reshape(-1, k) if k else empty)
        return blocks


@dataclass(frozen=True)
class WeightFloorUniverse(TruncatedUniverse):
    """
    The subsets of a TruncatedUniverse whose modified weight is at least min_weight.

    Built through ``covering``, the index and cardinality ranges hold every
    subset of the positive integers that reaches the floor, so a greedy cut
    above the floor is the exact weight-ordered prefix.
    """

    params: WeightParams
    min_weight: float

    def __post_init__(self) -> None:
        super().__post_init__()
        _require_finite_p_star(self.params)
        if not self.min_weight > 0:
            raise InvalidParameterError(
                f"weight floor must be positive, got {self.min_weight}"
            )

    @classmethod
    def covering(
        cls,
        params: WeightParams,
        min_weight: float,
        max_subsets: int = ORACLE_MAX_SUBSETS,
    ) -> "WeightFloorUniverse":
        _require_finite_p_star(params)
        assert params.elem_factor is not None
        factor, decay = params.elem_factor, params.decay
        # every singleton {j} with j <= (e / floor)^{1/(a p*)} is in the universe
        if (math.log(factor) - math.log(min_weight)) / decay > math.log(max_subsets):
            raise UniverseTooSmallError(
                f"weight floor {min_weight:.3e} admits more than "
                f"{max_subsets} singletons"
            )
        # coordinates with a factor above one can lift any subset
        lift = math.prod(
            factor * j**-decay for j in range(1, math.floor(factor ** (1 / decay)) + 1)
        )
        lift = max(lift, 1.0)
        max_index = max(1, math.floor((factor * lift / min_weight) ** (1 / decay)))

        # the heaviest k-subset is {1, ..., k}
        max_card, log_prefix, log_floor = 0, 0.0, math.log(min_weight)
        for j in range(1, max_index + 1):
            x = factor * j**-decay
            log_prefix += math.log(x)
            if log_prefix >= log_floor:
                max_card = j
            elif x < 1.0:
                break
        return cls(max_index, max_card, params, min_weight)

    @property
    def count(self) -> int:
        return sum(len(rows) for rows in _rows_above(self, ORACLE_MAX_SUBSETS))

    def subsets(self, max_subsets: int = ORACLE_MAX_SUBSETS) -> List[np.ndarray]:
        return [
            np.array(rows, dtype=np.int64).reshape(len(rows), k)
            for k, rows in enumerate(_rows_above(self, max_subsets))
        ]

    def __str__(self) -> str:
        return (
            f"WeightFloorUniverse(max_index={self.max_index}, "
            f"max_card={self.max_card}, "
            f"min_weight={self.min_weight:.3e})"
        )


@functools.lru_cache(maxsize=2)
def _rows_above(
    universe: WeightFloorUniverse, max_subsets: int
) -> Tuple[Tuple[Subset, ...], ...]:
    """Pruned depth-first enumeration, rows per cardinality in lexicographic order."""
    params = universe.params
    assert params.elem_factor is not None
    floor = universe.min_weight
    factors = [
        params.elem_factor * j**-params.decay for j in range(1, universe.max_index + 1)
    ]
    # reach[k]: the largest factor any extension by indices > k can still add
    reach = [1.0] * (universe.max_index + 1)
    for k in range(universe.max_index - 1, -1, -1):
        reach[k] = reach[k + 1] * max(factors[k], 1.0)

    rows: List[List[Subset]] = [[] for _ in range(universe.max_card + 1)]
    rows[0].append(())
    count = 1
    stack: List[Tuple[Subset, float, int]] = [((), 1.0, 0)]
    while stack:
        u, w, start = stack.pop()
        if len(u) == universe.max_card:
            continue
        for k in range(start, universe.max_index):
            if w * factors[k] * reach[k + 1] < floor:
                break
            v, wv = u + (k + 1,), w * factors[k]
            if wv >= floor:
                rows[len(v)].append(v)
                count += 1
                if count > max_subsets:
                    raise UniverseTooSmallError(
                        f"{universe} holds more than the guard of {max_subsets} subsets"
                    )
            stack.append((v, wv, k + 1))
    return tuple(tuple(sorted(block)) for block in rows)


def _log_weights(params: WeightParams, block: np.ndarray) -> np.ndarray:
    assert params.elem_factor is not None
    k = block.shape[1]
    if k == 0:
        return np.zeros(block.shape[0])
    return k * math.log(params.elem_factor) - params.decay * np.log(block).sum(axis=1)


def _require_finite_p_star(params: WeightParams) -> None:
    if params.p_star is None:
        raise InvalidParameterError(
            "the oracle works with modified weights and needs p > 1"
        )


def oracle_direct_sum(
    params: WeightParams,
    universe: TruncatedUniverse,
    max_subsets: int = ORACLE_MAX_SUBSETS,
) -> float:
    """Sum of gamma_bar_u over every subset in the universe."""
    _require_finite_p_star(params)
    total = CompensatedSum()
    for block in universe.subsets(max_subsets):
        total.add(float(np.sum(np.exp(_log_weights(params, block)))))
    return total.value


def index_cap(params: WeightParams, bound: TailBound, target: float, limit: int) -> int:
    """
    Smallest M whose full universe {1..M} leaves less than target outside.

    The product over j > M is majorised by exp(e / ((a p* - 1) (M + 1/2)^{a p* - 1})),
    so M only has to push that majorant below A_s / (A_s - target). Capped at limit.
    """
    assert params.elem_factor is not None
    if target >= bound.value:
        return 1
    spread = params.decay - 1.0
    room = -math.log1p(-target / bound.value)
    log_scale = math.log(params.elem_factor) - math.log(spread) - math.log(room)
    log_point = log_scale / spread
    if log_point > math.log(limit):
        return limit
    return max(1, min(limit, math.floor(math.exp(log_point) - 0.5) + 1))


def _singletons_can_suffice(
    params: WeightParams, bound: TailBound, target: float
) -> bool:
    """Whether a universe of subsets with at most one element could be adequate."""
    assert params.elem_factor is not None
    spread = params.decay - 1.0
    # sum_j e j^{-a p*} <= e (1 + 1 / ((a p* - 1) 1.5^{a p* - 1}))
    singles = params.elem_factor * (1.0 + 1.0 / (spread * 1.5**spread))
    return bound.value - (1.0 + singles) < target


def adequate_universe(
    params: WeightParams,
    eps: float,
    s: Optional[int] = None,
    max_subsets: int = ORACLE_MAX_SUBSETS,
    max_card: int = 12,
) -> TruncatedUniverse:
    """
    A universe whose outside mass is below 1e-2 eps^{p*}, the smaller of two.

    The full universe takes the smallest max_index (then max_card); its sums
    come from the elementary symmetric polynomials of the per-coordinate
    factors, grown one coordinate at a time up to index_cap. The weight floor
    universe lowers the floor a decade at a time until the subsets above it
    are adequate. The floor search stops as soon as it would hold as many
    subsets as the full universe.
    """
    _require_finite_p_star(params)
    assert params.elem_factor is not None
    bound = a_s_bound(params, choose_s(params, eps) if s is None else s)
    target = OUTSIDE_FRACTION * params.budget(eps)

    full = _full_universe(params, bound, target, max_subsets, max_card)
    if full is not None and full.count <= 1:
        return full
    guard = max_subsets if full is None else full.count - 1
    try:
        universe: TruncatedUniverse = _floor_universe(params, bound, target, guard)
    except UniverseTooSmallError:
        if full is None:
            raise
        universe = full
    logger.debug(f"Adequate universe {universe} with {universe.count} subsets")
    return universe


def _full_universe(
    params: WeightParams,
    bound: TailBound,
    target: float,
    max_subsets: int,
    max_card: int,
) -> Optional[TruncatedUniverse]:
    assert params.elem_factor is not None
    cap = index_cap(params, bound, target, max_subsets)
    pairs_needed = not _singletons_can_suffice(params, bound, target)

    elementary = [1.0] + [0.0] * max_card
    for m in range(1, cap + 1):
        x = params.elem_factor * m ** (-params.decay)
        for k in range(min(m, max_card), 0, -1):
            elementary[k] += x * elementary[k - 1]
        partial = 0.0
        for k in range(min(m, max_card) + 1):
            partial += elementary[k]
            if bound.value - partial < target:
                universe = TruncatedUniverse(m, k)
                if universe.count > max_subsets:
                    logger.debug(f"Adequate universe {universe} exceeds the guard")
                    return None
                return universe
        if pairs_needed and TruncatedUniverse(m, 2).count > max_subsets:
            break
    logger.debug(f"No full universe with max_index <= {cap} and max_card <= {max_card}")
    return None


def _floor_universe(
    params: WeightParams, bound: TailBound, target: float, max_subsets: int
) -> WeightFloorUniverse:
    floor = target
    while True:
        universe = WeightFloorUniverse.covering(params, floor, max_subsets)
        outside = bound.value - oracle_direct_sum(params, universe, max_subsets)
        logger.debug(f"{universe}: {outside:.3e} outside")
        if outside < target:
            return universe
        floor /= FLOOR_STEP


def _sorted_universe(
    params: WeightParams, universe: TruncatedUniverse, max_subsets: int
) -> Tuple[List[Subset], np.ndarray]:
    blocks = universe.subsets(max_subsets)
    weights = np.exp(np.concatenate([_log_weights(params, block) for block in blocks]))
    # generation order is already (cardinality, lexicographic)
    order = np.lexsort((np.arange(weights.size), -weights))
    rows: List[Subset] = [
        tuple(int(j) for j in row) for block in blocks for row in block
    ]
    return [rows[i] for i in order], weights[order]


def oracle_opt_set(
    params: WeightParams,
    eps: float,
    universe: TruncatedUniverse,
    s: Optional[int] = None,
    max_subsets: int = ORACLE_MAX_SUBSETS,
) -> ActiveSet:
    """Greedy prefix of the fully sorted universe, certified against A_s."""
    _require_finite_p_star(params)
    if not eps > 0:
        raise InvalidParameterError(f"eps must be positive, got {eps}")
    bound = a_s_bound(params, choose_s(params, eps) if s is None else s)
    budget = params.budget(eps)

    outside = bound.value - oracle_direct_sum(params, universe, max_subsets)
    if not outside < OUTSIDE_FRACTION * budget:
        raise UniverseTooSmallError(
            f"mass outside {universe} is {outside:.3e}, "
            f"not below {OUTSIDE_FRACTION * budget:.3e}"
        )

    ordered, weights = _sorted_universe(params, universe, max_subsets)
    remaining = CompensatedSum(bound.value)
    remaining.subtract(budget)
    remaining.subtract(1.0)

    # the empty set always opens the collection
    members: List[Subset] = [()]
    cut = 0
    for position, (u, w) in enumerate(zip(ordered, weights)):
        if remaining.value <= 0:
            break
        cut = position + 1
        if not u:
            continue
        members.append(u)
        remaining.subtract(float(w))
    if remaining.value > 0:
        raise UniverseTooSmallError(
            f"universe {universe} exhausted before meeting the budget"
        )

    tied = 0 < cut < len(weights) and math.isclose(
        weights[cut - 1], weights[cut], rel_tol=1e-12
    )
    if tied:
        logger.warning(f"Tie at the cut: {ordered[cut - 1]} and {ordered[cut]}")

    logger.info(f"Oracle set over {universe}: {len(members)} subsets")
    return ActiveSet(
        members=tuple(members),
        method=Method.ORACLE,
        eps=eps,
        residual_certificate=max(remaining.value + budget, 0.0),
        budget=budget,
        slack_bound=bound.slack_bound,
        s=bound.s,
    )
