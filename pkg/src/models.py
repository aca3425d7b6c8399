"""
Data models for the active-set constructions.
"""

import enum
import functools
import math
from dataclasses import dataclass, field
from typing import FrozenSet, List, Optional, Tuple

# A subset u = {u_1 < ... < u_l} of positive coordinate indices; () is the empty set.
Subset = Tuple[int, ...]


class ExponentKind(enum.Enum):
    """How the space exponent p is encoded; p = 1 and p = inf never travel as floats."""

    ONE = "1"
    FINITE = "finite"
    INFINITY = "inf"


class Method(str, enum.Enum):
    """Construction that produced an active set."""

    PW = "pw"
    QOPT = "qopt"
    OPT = "opt"
    ORACLE = "oracle"


@dataclass(frozen=True)
class WeightParams:
    """Product-weight parameters (a, c, p) and the derived conjugate p*."""

    a: float
    c: float
    kind: ExponentKind
    p_value: Optional[float] = None
    p_star: Optional[float] = field(init=False)
    elem_factor: Optional[float] = field(init=False)

    def __post_init__(self) -> None:
        if self.kind is ExponentKind.ONE:
            p_star = None
        elif self.kind is ExponentKind.INFINITY:
            p_star = 1.0
        else:
            assert self.p_value is not None
            p_star = self.p_value / (self.p_value - 1.0)
        object.__setattr__(self, "p_star", p_star)
        object.__setattr__(
            self,
            "elem_factor",
            None if p_star is None else self.c**p_star / (p_star + 1.0),
        )

    @property
    def is_p_one(self) -> bool:
        return self.kind is ExponentKind.ONE

    @property
    def decay(self) -> float:
        """Exponent a * p* of the per-coordinate factor j^(-a p*)."""
        if self.p_star is None:
            raise ValueError("a * p* is undefined for p = 1")
        return self.a * self.p_star

    @property
    def p_label(self) -> str:
        if self.kind is ExponentKind.ONE:
            return "1"
        if self.kind is ExponentKind.INFINITY:
            return "inf"
        return f"{self.p_value:g}"

    def budget(self, eps: float) -> float:
        """Right-hand side of the active-set criterion: eps^{p*}, or eps for p = 1."""
        if self.p_star is None:
            return eps
        return eps**self.p_star


@dataclass(frozen=True)
class TailBound:
    """Certified upper bound on an infinite product-form sum."""

    value: float
    s: int
    slack_bound: float


@dataclass(frozen=True)
class ActiveSet:
    """An ordered collection of subsets together with its construction metadata."""

    members: Tuple[Subset, ...]
    method: Method
    eps: float
    residual_certificate: float
    budget: float
    slack_bound: float = 0.0
    intervals: int = 0
    s: Optional[int] = None
    threshold: Optional[float] = None
    t: Optional[float] = None

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, u: object) -> bool:
        return u in self.member_set

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def dimension(self) -> int:
        """d(U): largest cardinality among the members, 0 for an empty collection."""
        return max((len(u) for u in self.members), default=0)

    @functools.cached_property
    def member_set(self) -> FrozenSet[Subset]:
        return frozenset(self.members)

    def is_certified(self, rel_tol: float = 1e-12) -> bool:
        """Whether the residual certificate meets the budget, up to rel_tol."""
        return self.residual_certificate <= self.budget * (1.0 + rel_tol)


@dataclass
class ConstructionReport:
    """Summary of one construction run, as rendered by the command line."""

    method: str
    params: WeightParams
    eps: float
    size: int
    d: int
    residual: float
    slack_bound: float
    intervals: int
    wall_time: float
    members: Optional[List[Subset]] = None
    operator_norm: Optional[float] = None
    effective_eps: Optional[float] = None
    active_set: Optional[ActiveSet] = None

    @property
    def normalized(self) -> bool:
        return self.operator_norm is not None


@dataclass
class SweepCell:
    """One (a, c) entry of a sweep table."""

    a: float
    c: float
    size: Optional[int] = None
    d: Optional[int] = None
    error: Optional[str] = None


@dataclass
class SweepTable:
    """Sizes and dimensions of active sets over an (a, c) grid."""

    p_label: str
    eps: float
    method: str
    a_values: List[float]
    c_values: List[float]
    cells: List[SweepCell]

    def cell(self, a: float, c: float) -> SweepCell:
        for entry in self.cells:
            if math.isclose(entry.a, a) and math.isclose(entry.c, c):
                return entry
        raise KeyError((a, c))

    def sizes(self) -> List[List[Optional[int]]]:
        return [[self.cell(a, c).size for a in self.a_values] for c in self.c_values]

    def dims(self) -> List[List[Optional[int]]]:
        return [[self.cell(a, c).d for a in self.a_values] for c in self.c_values]


@dataclass
class MethodComparison:
    """PW, quasi-optimal and optimal reports for one parameter set."""

    reports: List[ConstructionReport]
    opt_within_pw: bool
    sizes_ordered: bool
