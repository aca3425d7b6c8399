"""
Certified bounds on the infinite sums and products behind the constructions.

For product weights the total mass of the modified weights factorises:

    A = sum_u gamma_bar_u = prod_{j >= 1} (1 + e * j^{-a p*}),   e = c^{p*} / (p* + 1)

The product is evaluated exactly up to a truncation point s and the tail is
majorised by exp(e / ((a p* - 1) (s + 1/2)^{a p* - 1})), which gives A_s >= A.
The same scheme bounds the power sums sum_u gamma_bar_u^t used by the PW
threshold.
"""

import logging
import math
from typing import Optional

import numpy as np

from .config import CHUNK_SIZE, POWER_SUM_S, S_CEILING, SLACK_FRACTION
from .exceptions import InvalidParameterError, TruncationError
from .models import TailBound, WeightParams

logger = logging.getLogger(__name__)

FIRST_S = 64


class CompensatedSum:
    """
    Running sum with a Neumaier correction term.

    Keeps long chains of additions and subtractions reproducible, so sign
    tests on the running value do not flip on rounding noise.
    """

    def __init__(self, value: float = 0.0):
        self._sum = float(value)
        self._carry = 0.0

    def add(self, value: float) -> None:
        total = self._sum + value
        if abs(self._sum) >= abs(value):
            self._carry += (self._sum - total) + value
        else:
            self._carry += (value - total) + self._sum
        self._sum = total

    def subtract(self, value: float) -> None:
        self.add(-value)

    @property
    def value(self) -> float:
        return self._sum + self._carry

    def __repr__(self) -> str:
        return f"CompensatedSum({self.value!r})"


def log_product(factor: float, exponent: float, start: int, stop: int) -> float:
    """sum_{start <= j < stop} log(1 + factor * j^{-exponent}), evaluated in numpy chunks."""
    total = CompensatedSum()
    for low in range(start, stop, CHUNK_SIZE):
        high = min(low + CHUNK_SIZE, stop)
        j = np.arange(low, high, dtype=np.float64)
        total.add(float(np.sum(np.log1p(factor * np.power(j, -exponent)))))
    return total.value


def _tail_exponent(factor: float, exponent: float, s: int) -> float:
    return factor / ((exponent - 1.0) * (s + 0.5) ** (exponent - 1.0))


def _bound_from_log(log_finite: float, factor: float, exponent: float, s: int) -> TailBound:
    tail = _tail_exponent(factor, exponent, s)
    finite = math.exp(log_finite)
    return TailBound(
        value=math.exp(log_finite + tail),
        s=s,
        slack_bound=math.expm1(tail) * finite,
    )


def _product_bound(factor: float, exponent: float, s: int) -> TailBound:
    if s < 1:
        raise InvalidParameterError(f"truncation point s must be positive, got {s}")
    if exponent <= 1.0:
        raise InvalidParameterError(f"tail exponent must exceed 1, got {exponent}")
    return _bound_from_log(log_product(factor, exponent, 1, s + 1), factor, exponent, s)


def _require_finite_p_star(params: WeightParams) -> None:
    if params.p_star is None:
        raise InvalidParameterError("tail sums of modified weights need a finite p*")


def a_s_bound(params: WeightParams, s: int) -> TailBound:
    """A_s, an upper bound on the total modified-weight mass, with its certified slack."""
    _require_finite_p_star(params)
    assert params.elem_factor is not None
    return _product_bound(params.elem_factor, params.decay, s)


def power_sum_bound(params: WeightParams, t: float, s: int = POWER_SUM_S) -> TailBound:
    """Upper bound on sum_u gamma_bar_u^t for 1/(a p*) < t <= 1; t = 1 gives A_s."""
    _require_finite_p_star(params)
    assert params.elem_factor is not None
    if not (params.decay * t > 1.0 and t <= 1.0):
        raise InvalidParameterError(
            f"t must lie in (1/(a p*), 1] = ({1.0 / params.decay:g}, 1], got {t}"
        )
    return _product_bound(params.elem_factor**t, params.decay * t, s)


def choose_s(
    params: WeightParams,
    eps: float,
    fraction: float = SLACK_FRACTION,
    ceiling: int = S_CEILING,
) -> int:
    """Smallest s in 64, 128, 256, ... whose A_s slack is at most fraction * eps^{p*}."""
    _require_finite_p_star(params)
    assert params.elem_factor is not None
    target = fraction * params.budget(eps)
    factor, exponent = params.elem_factor, params.decay

    s = FIRST_S
    log_finite = log_product(factor, exponent, 1, s + 1)
    while True:
        slack = _bound_from_log(log_finite, factor, exponent, s).slack_bound
        if slack <= target:
            logger.info(f"Chose s={s} (slack {slack:.3e} <= {target:.3e})")
            return s
        if 2 * s > ceiling:
            logger.error(f"No truncation point up to {ceiling} reaches slack {target:.3e}")
            raise TruncationError(
                f"slack {slack:.3e} at s={s} still exceeds {target:.3e}; ceiling is {ceiling}"
            )
        log_finite += log_product(factor, exponent, s + 1, 2 * s + 1)
        s *= 2


def operator_norm(params: WeightParams, s: Optional[int] = None) -> float:
    """
    Norm of the integration functional S.

    (sum_u gamma_bar_u)^{1/p*} for finite p*, evaluated through the A_s bound;
    sup_u gamma_u = prod_{c/j^a > 1} c/j^a for p = 1.
    """
    if params.p_star is None:
        norm = 1.0
        j = 1
        while params.c / j**params.a > 1.0:
            norm *= params.c / j**params.a
            j += 1
        return norm

    bound = a_s_bound(params, POWER_SUM_S if s is None else s)
    return bound.value ** (1.0 / params.p_star)
