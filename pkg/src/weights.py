"""
Product weights, modified weights and per-subset functional norms.

For product weights gamma_u = prod_{j in u} c / j^a, the active-set
criterion only ever needs the modified weights

    gamma_bar_u = gamma_u^{p*} / (p* + 1)^{|u|}
                = (c^{p*} / (p* + 1))^{|u|} * prod_{j in u} j^{-a p*}

and, for p = 1, the plain weights themselves.
"""

import logging
import math
import sys
from typing import Iterable, Union

from .exceptions import InvalidParameterError
from .models import ExponentKind, Subset, WeightParams

logger = logging.getLogger(__name__)

# Subsets longer than this are always evaluated in the log domain.
LOG_DOMAIN_CARDINALITY = 16

PValue = Union[int, float, str]


def _parse_p(p: PValue) -> ExponentKind:
    if isinstance(p, str):
        text = p.strip().lower()
        if text in ("inf", "infinity", "oo", "∞"):
            return ExponentKind.INFINITY
        try:
            p = float(text)
        except ValueError:
            raise InvalidParameterError(f"Cannot parse p from {p!r}")
    if math.isnan(p):
        raise InvalidParameterError("p must not be NaN")
    if math.isinf(p) and p > 0:
        return ExponentKind.INFINITY
    if p < 1:
        raise InvalidParameterError(f"p must be in [1, inf], got {p}")
    if p == 1:
        return ExponentKind.ONE
    return ExponentKind.FINITE


def validate_params(a: float, c: float, p: PValue) -> WeightParams:
    """Build WeightParams, rejecting a <= 1/p*, c <= 0 and p < 1."""
    kind = _parse_p(p)
    a = float(a)
    c = float(c)
    if math.isnan(a) or math.isnan(c) or math.isinf(a) or math.isinf(c):
        raise InvalidParameterError(f"a and c must be finite, got a={a}, c={c}")
    if c <= 0:
        raise InvalidParameterError(f"c must be positive, got {c}")

    p_value = float(p) if kind is ExponentKind.FINITE else None
    params = WeightParams(a=a, c=c, kind=kind, p_value=p_value)

    # continuity of the integration functional: a > 1/p* (a > 0 when p = 1)
    inverse_p_star = 0.0 if params.p_star is None else 1.0 / params.p_star
    if a <= inverse_p_star:
        raise InvalidParameterError(
            f"a must exceed 1/p* = {inverse_p_star:g} for p = {params.p_label}, got a = {a:g}"
        )

    logger.debug(
        f"Validated parameters a={a:g}, c={c:g}, p={params.p_label}, "
        f"p*={params.p_star}, elem_factor={params.elem_factor}"
    )
    return params


def _log_product(base_log: float, exponent: float, u: Iterable[int], size: int) -> float:
    return math.exp(size * base_log - exponent * math.fsum(math.log(j) for j in u))


def _product(factor: float, exponent: float, u: Subset) -> float:
    """factor^{|u|} * prod_{j in u} j^{-exponent}, switching to logs for deep or tiny values."""
    if not u:
        return 1.0
    if len(u) <= LOG_DOMAIN_CARDINALITY:
        value = math.prod(factor / j**exponent for j in u)
        if value >= sys.float_info.min:
            return value
    return _log_product(math.log(factor), exponent, u, len(u))


def gamma(params: WeightParams, u: Subset) -> float:
    """Product weight gamma_u = prod_{j in u} c / j^a; 1 for the empty set."""
    return _product(params.c, params.a, u)


def gamma_bar(params: WeightParams, u: Subset) -> float:
    """Modified weight gamma_u^{p*} / (p*+1)^{|u|}; only defined for finite p*."""
    if params.p_star is None:
        raise InvalidParameterError(
            "gamma_bar needs a finite p*; the p = 1 construction works with gamma directly"
        )
    assert params.elem_factor is not None
    return _product(params.elem_factor, params.decay, u)


def s_u_norm(params: WeightParams, u: Subset) -> float:
    """Norm of the integration functional restricted to F_u: (p*+1)^{-|u|/p*}."""
    if params.p_star is None:
        return 1.0
    return (params.p_star + 1.0) ** (-len(u) / params.p_star)


def extension_factor(params: WeightParams, index: int) -> float:
    """Ratio gamma_bar(u + {index}) / gamma_bar(u), or the gamma ratio when p = 1."""
    if params.p_star is None:
        return params.c / index**params.a
    assert params.elem_factor is not None
    return params.elem_factor / index**params.decay


def format_p(p: PValue) -> str:
    """Canonical label of p: '1', 'inf' or the finite value."""
    kind = _parse_p(p)
    if kind is ExponentKind.ONE:
        return "1"
    if kind is ExponentKind.INFINITY:
        return "inf"
    return f"{float(p):g}"
