"""Shift-choice (reframing) methods and cost curves over operating conditions.

A shift is the regression counterpart of a classification threshold: a
constant added to every prediction to adapt an existing model to a new cost
asymmetry. A shift-choice method maps (training errors, alpha) to a shift;
evaluating a model therefore always means evaluating a (model, method) pair.

The total asymmetric loss is piecewise linear in the shift, so its minimum is
attained at one of the candidate shifts ``-e_i`` (the negated alpha-quantile
of the errors, up to plateau choice). The search below evaluates all n sorted
candidates exactly via prefix sums instead of using a gradient method.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from .core import ConditionLike, RrocPoint, _alpha_of, as_errors, over_under, total_loss
from .errors import DataError

__all__ = [
    "ShiftMethod",
    "NoShift",
    "OptimalConstantShift",
    "TrainedConstantShift",
    "CostCurve",
    "apply_shift",
    "zero_bias_shift",
    "optimal_constant_shift",
    "trained_constant_shift",
    "cost_curve",
    "default_alpha_grid",
]


def apply_shift(predictions, s: float) -> np.ndarray:
    """The shifted model m<s>: every prediction moved by the constant s."""
    if not (isinstance(s, (int, float)) and math.isfinite(s)):
        raise DataError(f"shift must be finite, got {s!r}")
    p = np.asarray(predictions, dtype=float)
    return p + s


def zero_bias_shift(errors) -> float:
    """The shift -mean(e) that zeroes the error bias of the shifted model.

    This is the squared-error optimum, kept as a convenience; it is not the
    minimizer of the asymmetric absolute loss (see optimal_constant_shift).
    """
    return float(-np.mean(as_errors(errors)))


def _candidate_losses(q: np.ndarray, alpha: float) -> np.ndarray:
    """Total loss at every candidate shift -q[k], q sorted ascending."""
    n = q.size
    csum = np.concatenate(([0.0], np.cumsum(q)))
    k = np.arange(n)
    # With s = -q[k]: shifted errors q_i - q_k; positive part from i > k,
    # negative part from i < k (the k-th term is exactly zero).
    over_sum = (csum[-1] - csum[k + 1]) - (n - k - 1) * q
    under_sum = csum[k] - k * q
    return 2.0 * (1.0 - alpha) * over_sum - 2.0 * alpha * under_sum


def optimal_constant_shift(errors, oc: ConditionLike) -> Tuple[float, float]:
    """The constant shift minimizing the total asymmetric loss, with its loss.

    Exact search over the n candidate shifts {-e_i}; on exact loss ties
    (plateaus, e.g. alpha 0 or 1) the candidate with smallest magnitude wins.
    The returned loss equals the total loss of the matching curve vertex.
    """
    a = _alpha_of(oc)
    e = as_errors(errors)
    q = np.sort(e)
    losses = _candidate_losses(q, a)
    best = losses.min()
    ties = np.nonzero(losses == best)[0]
    winner = ties[np.argmin(np.abs(q[ties]))]
    return float(-q[winner]), float(best)


def trained_constant_shift(
    train_errors, oc: ConditionLike, test_errors
) -> Tuple[RrocPoint, float]:
    """Pick the best shift on the training errors, apply it to the test errors.

    Returns the test-set (OVER, UNDER) point and its total loss. The shift is
    optimal for the training set only, so the test loss is at least the
    optimal test loss; the gap shrinks as the two error distributions match.
    """
    a = _alpha_of(oc)
    s, _ = optimal_constant_shift(train_errors, a)
    e = as_errors(test_errors)
    point = over_under(e + s)
    return point, total_loss(point, a)


class ShiftMethod:
    """A rule mapping (errors, alpha) to a deployment shift.

    Subclasses implement ``shift_for``. ``kind`` names the method in reports.
    Non-constant methods (polynomial, per-example probabilistic) can plug in
    here but are not shipped.
    """

    kind: str = "abstract"

    def shift_for(self, errors, alpha: float) -> float:
        raise NotImplementedError


class NoShift(ShiftMethod):
    """No adjustment: the model is deployed as-is (a single RROC point)."""

    kind = "none"

    def shift_for(self, errors, alpha: float) -> float:
        return 0.0


class OptimalConstantShift(ShiftMethod):
    """Oracle method: the loss-minimizing constant shift on the target errors."""

    kind = "optimal_constant"

    def shift_for(self, errors, alpha: float) -> float:
        return optimal_constant_shift(errors, alpha)[0]


class TrainedConstantShift(ShiftMethod):
    """Constant shift fitted on held-out training errors, then reused."""

    kind = "trained_constant"

    def __init__(self, train_errors):
        self.train_errors = as_errors(train_errors)

    def shift_for(self, errors, alpha: float) -> float:
        return optimal_constant_shift(self.train_errors, alpha)[0]


def default_alpha_grid() -> np.ndarray:
    """101 evenly spaced operating conditions including both endpoints."""
    return np.linspace(0.0, 1.0, 101)


@dataclass(frozen=True)
class CostCurve:
    """Mean asymmetric loss per example against alpha, for one (model, method).

    Per-example (not total) loss keeps curves from different dataset sizes
    comparable. For the no-adjustment method the curve is affine in alpha.
    """

    alphas: np.ndarray
    losses: np.ndarray
    method: str
    model_id: Optional[str] = None


def cost_curve(
    errors,
    method: ShiftMethod,
    alphas=None,
    model_id: Optional[str] = None,
) -> CostCurve:
    """Evaluate a shift-choice method across a grid of operating conditions."""
    e = as_errors(errors)
    grid = default_alpha_grid() if alphas is None else np.asarray(alphas, dtype=float)
    if grid.ndim != 1 or grid.size < 1:
        raise DataError("alpha grid must be a nonempty 1-D sequence")
    if np.any(~np.isfinite(grid)) or grid.min() < 0.0 or grid.max() > 1.0:
        raise DataError("alpha grid values must lie in [0, 1]")
    n = e.size
    losses = np.empty_like(grid)
    for i, a in enumerate(grid):
        s = method.shift_for(e, float(a))
        losses[i] = total_loss(over_under(e + s), float(a)) / n
    return CostCurve(alphas=grid, losses=losses, method=method.kind, model_id=model_id)
