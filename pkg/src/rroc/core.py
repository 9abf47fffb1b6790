"""Error vectors, scalar metrics, the asymmetric absolute loss and RROC points.

Conventions used throughout the package:

* Errors are signed: ``e_i = predicted_i - actual_i``. Positive errors are
  over-estimations, negative errors under-estimations.
* ``OVER`` sums the strictly positive errors, ``UNDER`` the strictly negative
  ones. Exact zeros contribute to neither (they carry no loss either way).
* Variance is the population variance (divide by n, not n-1). Most statistics
  libraries default to n-1; the n divisor is what makes AOC equal
  ``variance * n**2 / 2``.
* The asymmetry ``alpha`` lives in [0, 1]; higher values make under-estimation
  costlier. ``alpha = 0`` and ``alpha = 1`` are legal and map to isometric
  slopes of infinity and zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .errors import DataError

__all__ = [
    "OperatingCondition",
    "RrocPoint",
    "SummaryMetrics",
    "as_errors",
    "error_vector",
    "over_under",
    "metrics",
    "asymmetric_loss",
    "total_loss",
]


@dataclass(frozen=True)
class OperatingCondition:
    """Cost asymmetry alpha in [0, 1] with its derived isometric slope."""

    alpha: float

    def __post_init__(self):
        if not (isinstance(self.alpha, (int, float)) and 0.0 <= self.alpha <= 1.0):
            raise DataError(f"alpha must be in [0, 1], got {self.alpha!r}")

    @property
    def slope(self) -> float:
        """Isometric slope (1 - alpha) / alpha; infinity at alpha = 0."""
        if self.alpha == 0.0:
            return math.inf
        return (1.0 - self.alpha) / self.alpha

    @classmethod
    def from_slope(cls, slope: float) -> "OperatingCondition":
        """Inverse mapping alpha = 1 / (1 + slope); slope=inf gives alpha=0."""
        if math.isnan(slope) or slope < 0.0:
            raise DataError(f"slope must be nonnegative, got {slope!r}")
        if math.isinf(slope):
            return cls(0.0)
        return cls(1.0 / (1.0 + slope))


ConditionLike = Union[OperatingCondition, float, int]


def _alpha_of(oc: ConditionLike) -> float:
    """Accept an OperatingCondition or a bare alpha and validate it."""
    if isinstance(oc, OperatingCondition):
        return oc.alpha
    return OperatingCondition(float(oc)).alpha


@dataclass(frozen=True)
class RrocPoint:
    """A model's position in RROC space: (total OVER, total UNDER).

    ``over >= 0`` and ``under <= 0``; infinities are allowed so the extreme
    models at (0, -inf) and (inf, 0) are representable.
    """

    over: float
    under: float

    def __post_init__(self):
        if math.isnan(self.over) or self.over < 0.0:
            raise DataError(f"over must be >= 0, got {self.over!r}")
        if math.isnan(self.under) or self.under > 0.0:
            raise DataError(f"under must be <= 0, got {self.under!r}")

    @property
    def is_finite(self) -> bool:
        return math.isfinite(self.over) and math.isfinite(self.under)

    @property
    def mmse(self) -> float:
        """Euclidean distance to RROC heaven (0, 0)."""
        return math.hypot(self.over, self.under)


UNDER_EXTREME = RrocPoint(0.0, -math.inf)
OVER_EXTREME = RrocPoint(math.inf, 0.0)


@dataclass(frozen=True)
class SummaryMetrics:
    """Scalar error metrics for one model on one dataset.

    ``mse = variance + bias**2`` and ``mae * n = over - under`` hold up to
    float rounding; ``mmse`` is the Euclidean distance of the (OVER, UNDER)
    point to heaven.
    """

    mae: float
    mse: float
    bias: float
    variance: float
    mmse: float


def as_errors(errors) -> np.ndarray:
    """Validate and return a 1-D float64 error vector (finite, length >= 1)."""
    e = np.asarray(errors, dtype=float)
    if e.ndim != 1:
        raise DataError(f"error vector must be 1-D, got shape {e.shape}")
    if e.size < 1:
        raise DataError("error vector must have at least one entry")
    if not np.all(np.isfinite(e)):
        raise DataError("error vector contains non-finite entries")
    return e


def error_vector(predicted: Sequence[float], actual: Sequence[float]) -> np.ndarray:
    """Signed errors ``e_i = predicted_i - actual_i``, order preserved."""
    p = np.asarray(predicted, dtype=float)
    a = np.asarray(actual, dtype=float)
    if p.ndim != 1 or a.ndim != 1:
        raise DataError("predicted and actual must be 1-D sequences")
    if p.size != a.size:
        raise DataError(f"length mismatch: {p.size} predictions vs {a.size} actuals")
    if p.size < 1:
        raise DataError("need at least one example")
    if not (np.all(np.isfinite(p)) and np.all(np.isfinite(a))):
        raise DataError("inputs contain non-finite entries")
    return p - a


def over_under(errors) -> RrocPoint:
    """Total over-estimation and under-estimation of an error vector.

    Strict inequalities: exact zero errors count toward neither sum.
    """
    e = as_errors(errors)
    over = float(e[e > 0].sum())
    under = float(e[e < 0].sum())
    return RrocPoint(over, under)


def metrics(errors) -> SummaryMetrics:
    """Summary metrics of an error vector (population variance)."""
    e = as_errors(errors)
    point = over_under(e)
    mae = float(np.mean(np.abs(e)))
    mse = float(np.mean(e * e))
    bias = float(np.mean(e))
    # np.var is the stable two-pass population variance; the mse - bias**2
    # form loses digits when the spread is tiny relative to the bias.
    variance = float(np.var(e))
    return SummaryMetrics(mae=mae, mse=mse, bias=bias, variance=variance, mmse=point.mmse)


def asymmetric_loss(predicted: float, actual: float, oc: ConditionLike) -> float:
    """Asymmetric absolute error of a single prediction.

    ``2*alpha*(actual - predicted)`` when under-estimating,
    ``2*(1-alpha)*(predicted - actual)`` otherwise; an exact prediction
    costs 0. At alpha = 0.5 this is the plain absolute error.
    """
    a = _alpha_of(oc)
    if predicted < actual:
        return 2.0 * a * (actual - predicted)
    return 2.0 * (1.0 - a) * (predicted - actual)


def total_loss(point: RrocPoint, oc: ConditionLike) -> float:
    """Total asymmetric absolute loss of a point: -2a*UNDER + 2(1-a)*OVER.

    Equals the sum of ``asymmetric_loss`` over the examples behind the point.
    Zero coefficients silence the matching coordinate, so the extreme points
    get loss 0 at their own end of the alpha range (0 * inf is taken as 0).
    """
    a = _alpha_of(oc)
    under_term = 0.0 if a == 0.0 else -2.0 * a * point.under
    over_term = 0.0 if a == 1.0 else 2.0 * (1.0 - a) * point.over
    return under_term + over_term
