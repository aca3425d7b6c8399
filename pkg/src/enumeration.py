"""
Cardinality-major traversal of finite subsets of the positive integers.

All constructions visit subsets of a fixed cardinality in the same order:
start from {1, ..., l}, increment the last index while the visited subset is
accepted, and fall back to a lower index whenever it is rejected. Weights
only decrease along every increment, so a rejected subset closes off all of
its increments from the same index.
"""

import bisect
import logging
import math
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from .exceptions import InvalidParameterError
from .models import Subset

logger = logging.getLogger(__name__)


def increment_u(u: Subset, i: int) -> Subset:
    """Increment u from index i (1-based): u_i += 1, then u_r = u_i + r - i for r > i."""
    if not 1 <= i <= len(u):
        raise InvalidParameterError(f"index {i} out of range for subset of size {len(u)}")
    head = u[: i - 1]
    pivot = u[i - 1] + 1
    return head + tuple(range(pivot, pivot + len(u) - i + 1))


def first_of_cardinality(length: int) -> Subset:
    """The subset {1, ..., length}; the empty subset for length 0."""
    if length < 0:
        raise InvalidParameterError(f"cardinality must be non-negative, got {length}")
    return tuple(range(1, length + 1))


def default_j_max(p_star: Optional[float], eps: float) -> int:
    """Interval depth 2 * ceil(p* * log10(1/eps)) + 8, at least 1."""
    exponent = 1.0 if p_star is None else p_star
    depth = 2 * math.ceil(exponent * math.log10(1.0 / eps)) + 8
    return max(depth, 1)


class IntervalPartition:
    """
    Partition of the positive reals into I_1 = [b_1, inf) and I_j = [b_j, b_{j-1}).

    The default boundaries are the decades b_j = 10^{-j}.
    """

    def __init__(self, j_max: int, boundaries: Optional[Sequence[float]] = None):
        if j_max < 1:
            raise InvalidParameterError(f"j_max must be at least 1, got {j_max}")
        if boundaries is None:
            boundaries = [1 / 10**j for j in range(1, j_max + 1)]
        boundaries = [float(b) for b in boundaries]
        if len(boundaries) < j_max:
            raise InvalidParameterError(
                f"{len(boundaries)} boundaries given for j_max={j_max}"
            )
        boundaries = boundaries[:j_max]
        if any(b <= 0 for b in boundaries):
            raise InvalidParameterError("interval boundaries must be positive")
        if any(x <= y for x, y in zip(boundaries, boundaries[1:])):
            raise InvalidParameterError("interval boundaries must be strictly decreasing")

        self.j_max = j_max
        self.boundaries: List[float] = boundaries
        self._ascending = boundaries[::-1]

    @classmethod
    def default(cls, j_max: int) -> "IntervalPartition":
        return cls(j_max)

    def lower(self, j: int) -> float:
        """Left (closed) end b_j of I_j."""
        return self.boundaries[j - 1]

    def upper(self, j: int) -> float:
        """Right (open) end of I_j; infinity for I_1."""
        return math.inf if j == 1 else self.boundaries[j - 2]

    def contains(self, j: int, w: float) -> bool:
        return self.lower(j) <= w < self.upper(j)

    def index(self, w: float) -> Optional[int]:
        """The j <= j_max with w in I_j, or None when w lies below b_{j_max}."""
        if not w > 0:
            raise InvalidParameterError(f"weights must be positive, got {w}")
        above = len(self._ascending) - bisect.bisect_right(self._ascending, w)
        if above >= self.j_max:
            return None
        return above + 1

    def __repr__(self) -> str:
        return f"IntervalPartition(j_max={self.j_max}, b_1={self.boundaries[0]:g})"


def interval_index(partition: IntervalPartition, w: float) -> Optional[int]:
    return partition.index(w)


class BucketList:
    """Insertion-ordered queues L_j; a subset sits in at most one queue at a time."""

    def __init__(self) -> None:
        self._buckets: Dict[int, Dict[Subset, None]] = {}
        self._where: Dict[Subset, int] = {}

    def push(self, j: int, u: Subset) -> None:
        current = self._where.get(u)
        if current == j:
            return
        if current is not None:
            del self._buckets[current][u]
        self._buckets.setdefault(j, {})[u] = None
        self._where[u] = j

    def pop_first(self, j: int) -> Optional[Subset]:
        bucket = self._buckets.get(j)
        if not bucket:
            return None
        u = next(iter(bucket))
        del bucket[u]
        del self._where[u]
        return u

    def discard(self, j: int, u: Subset) -> None:
        if self._where.get(u) == j:
            del self._buckets[j][u]
            del self._where[u]

    def size(self, j: int) -> int:
        return len(self._buckets.get(j, {}))

    def __contains__(self, u: object) -> bool:
        return u in self._where

    def __len__(self) -> int:
        return len(self._where)


def walk_cardinality(
    start: Subset,
    weigh: Callable[[Subset], float],
    accept: Callable[[float], bool],
    stop: Optional[Callable[[Subset], bool]] = None,
    visit: Optional[Callable[[Subset], None]] = None,
) -> Iterator[Tuple[Subset, float, bool]]:
    """
    Walk the subsets of len(start) reachable from start by increment_u.

    Yields (u, weight, accepted). An accepted subset is followed by its
    increment from the last index; a rejected one moves the increment index
    one position down, and the walk ends once that index reaches zero. When
    ``stop`` returns True for an accepted subset the walk ends before
    yielding it. ``visit`` sees every subset before it is weighed.
    """
    u = start
    i = len(u)
    while i > 0:
        if visit is not None:
            visit(u)
        w = weigh(u)
        inside = accept(w)
        if inside and stop is not None and stop(u):
            return
        yield u, w, inside
        if inside:
            i = len(u)
        else:
            i -= 1
            if i == 0:
                return
        u = increment_u(u, i)
