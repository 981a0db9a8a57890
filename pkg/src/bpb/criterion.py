"""Statistical prospectiveness of a subset for further search.

Given sampled objective values, `prospectiveness` estimates from order
statistics how likely a subset is to contain a point at least as good as
the current record; `estimate_alpha` fits the shape parameter that the
estimate needs; `select_k` gives the sample-size-dependent order-statistic
depth.  All functions treat values as plain floats and are pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

Number = float

ALPHA_MIN = 0.1
ALPHA_MAX = 10.0

# alpha estimation uses the (k+1)-th and (m+1)-th order statistics with
# fixed depths k=10, m=2 and wants at least this many values
ALPHA_MIN_SAMPLE = 100


class InsufficientSample(Exception):
    """Not enough sample points to evaluate a statistic.

    Recoverable by design: the caller is expected to expand the sample (or
    substitute a configured fallback value) and retry.
    """


@dataclass(frozen=True)
class OrderedSample:
    """Ascending-sorted objective values y_(1) <= ... <= y_(N)."""

    values: tuple[float, ...]

    def __post_init__(self):
        if any(a > b for a, b in zip(self.values, self.values[1:])):
            raise ValueError("values must be sorted ascending")

    @classmethod
    def from_values(cls, values: Iterable[float]) -> "OrderedSample":
        return cls(tuple(sorted(values)))

    @property
    def count(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class CriterionParams:
    """Depth k, shape alpha, and removal bound delta for the criterion."""

    k: int
    alpha: float
    delta: float

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        if self.alpha <= 0:
            raise ValueError(f"alpha must be positive, got {self.alpha}")
        if not 0 < self.delta < 1:
            raise ValueError(f"delta must be in (0, 1), got {self.delta}")


def select_k(n: int) -> int:
    """Order-statistic depth for a sample of size n.

    floor(n/10) for 10 <= n < 100, 10 for n >= 100.  Below 10 the sample is
    too small and the caller must expand it.
    """
    if n < 0:
        raise ValueError(f"sample size must be >= 0, got {n}")
    if n < 10:
        raise InsufficientSample(f"need at least 10 values, have {n}")
    if n < 100:
        return n // 10
    return 10


def prospectiveness_from_stats(y1: float, yk1: float, y_star: float,
                               k: int, alpha: float) -> float:
    """Criterion value from the 1st and (k+1)-th order statistics.

    (1 - ((y1 - y*) / (yk1 - y*))**alpha)**k, clamped to [0, 1].  A zero
    denominator forces y1 == y*, i.e. the subset ties the record, and the
    value is defined as 1.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if alpha <= 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    if y_star > y1:
        raise ValueError(f"y_star {y_star} exceeds smallest value {y1}")
    span = yk1 - y_star
    if span <= 0.0:
        return 1.0
    ratio = (y1 - y_star) / span
    phi = (1.0 - ratio ** alpha) ** k
    return min(1.0, max(0.0, phi))


def prospectiveness(sub: OrderedSample | Sequence[float], y_star: float,
                    k: int, alpha: float) -> float:
    """Criterion value for a subset's sorted value sample.

    Needs at least k+1 values (the (k+1)-th order statistic); fewer raises
    InsufficientSample.
    """
    values = sub.values if isinstance(sub, OrderedSample) else sub
    if len(values) <= k:
        raise InsufficientSample(
            f"need at least {k + 1} values for depth k={k}, have {len(values)}")
    return prospectiveness_from_stats(float(values[0]), float(values[k]),
                                      y_star, k, alpha)


def estimate_alpha(full: OrderedSample | Sequence[float],
                   alpha_min: float = ALPHA_MIN,
                   alpha_max: float = ALPHA_MAX) -> float:
    """Shape estimate ln 5 / ln((y_(11) - y_(1)) / (y_(3) - y_(1))).

    Uses fixed depths 10 and 2 and wants >= 100 sorted values.  Degenerate
    spreads never fail: y_(3) == y_(1) clamps to alpha_max, a ratio <= 1
    (ties y_(11) == y_(3)) clamps to alpha_min.
    """
    values = full.values if isinstance(full, OrderedSample) else full
    if len(values) < ALPHA_MIN_SAMPLE:
        raise InsufficientSample(
            f"need at least {ALPHA_MIN_SAMPLE} values, have {len(values)}")
    y1 = float(values[0])
    y3 = float(values[2])
    y11 = float(values[10])
    if y3 == y1:
        return alpha_max
    ratio = (y11 - y1) / (y3 - y1)
    if ratio <= 1.0:
        return alpha_min
    alpha = math.log(5.0) / math.log(ratio)
    return min(alpha_max, max(alpha_min, alpha))


def criterion_over_pool(entries: Iterable[tuple[tuple, float]],
                        membership: Callable[[tuple], bool],
                        y_star: float, alpha: float,
                        delta: float | None = None) -> float:
    """Criterion for the pool subset selected by a membership predicate.

    Filters (point, value) entries, sorts the surviving values, picks the
    depth with select_k, and evaluates the criterion.  On an insufficient
    sample, returns `delta` when given (the re-weighting fallback),
    otherwise re-raises so the caller can expand the sample.
    """
    values = sorted(v for x, v in entries if membership(x))
    try:
        k = select_k(len(values))
        return prospectiveness(values, y_star, k, alpha)
    except InsufficientSample:
        if delta is None:
            raise
        return delta
