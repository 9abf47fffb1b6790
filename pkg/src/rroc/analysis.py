"""Isometrics, operating-point selection, hybrids, convex hulls and dominance.

The RROC plane is read from its heaven (0, 0) in the upper left: a point is
better the further up (less under-estimation) and left (less over-estimation)
it sits. Isometrics are the lines of constant total asymmetric loss; sliding
the isometric of slope (1-alpha)/alpha away from heaven, the first point
touched is the optimum for that alpha. The set of points that are first-touched
for some alpha forms the upper-left convex frontier, to which the symbolic
extreme models at (0, -inf) and (inf, 0) contribute a vertical and a
horizontal ray.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .core import (
    OVER_EXTREME,
    UNDER_EXTREME,
    ConditionLike,
    RrocPoint,
    _alpha_of,
    total_loss,
)
from .curve import RrocCurve, VertexPoint
from .errors import DataError

__all__ = [
    "Isometric",
    "HybridSegment",
    "HullPoint",
    "ConvexHull",
    "DominanceRegion",
    "DominanceMap",
    "isometric_through",
    "best_point_for_alpha",
    "best_vertex_for_alpha",
    "hybrid_segment",
    "convex_hull",
    "dominance_map",
]

# Relative epsilon for classifying three hull candidates as collinear.
COLLINEAR_EPS = 1e-12


@dataclass(frozen=True)
class Isometric:
    """A constant-loss line: -2a*UNDER + 2(1-a)*OVER = level.

    ``intercept`` is the UNDER-axis intercept; it is None for alpha = 0,
    where the isometric is the vertical line OVER = level / 2.
    """

    alpha: float
    slope: float
    intercept: Optional[float]
    level: float


def isometric_through(point: RrocPoint, oc: ConditionLike) -> Isometric:
    """The isometric line through ``point`` for asymmetry alpha."""
    a = _alpha_of(oc)
    level = total_loss(point, a)
    if a == 0.0:
        return Isometric(alpha=a, slope=math.inf, intercept=None, level=level)
    slope = (1.0 - a) / a
    return Isometric(alpha=a, slope=slope, intercept=point.under - slope * point.over, level=level)


def _selection_key(point, loss: float):
    # Deterministic tie-break on exact loss ties: lower over, then lower |under|.
    return (loss, point.over, abs(point.under))


def best_point_for_alpha(
    points: Sequence[RrocPoint], oc: ConditionLike
) -> Tuple[RrocPoint, float]:
    """The point of minimum total loss at asymmetry alpha, with its loss."""
    if not points:
        raise DataError("need at least one point")
    a = _alpha_of(oc)
    best = min(points, key=lambda p: _selection_key(p, total_loss(p, a)))
    return best, total_loss(best, a)


def best_vertex_for_alpha(
    curve: RrocCurve, oc: ConditionLike
) -> Tuple[VertexPoint, float]:
    """The curve vertex of minimum total loss at asymmetry alpha.

    Scans the interior vertices; the winner is always the vertex whose two
    adjacent segment slopes bracket (1-alpha)/alpha. At alpha = 0 that is the
    first vertex (OVER = 0), at alpha = 1 the last (UNDER = 0).
    """
    a = _alpha_of(oc)
    best = min(curve.interior, key=lambda v: _selection_key(v, total_loss(RrocPoint(v.over, v.under), a)))
    return best, total_loss(RrocPoint(best.over, best.under), a)


@dataclass(frozen=True)
class HybridSegment:
    """The segment of models mixable from two endpoint models.

    Choosing each prediction from endpoint a with probability p and from b
    otherwise realises (in expectation) every point of the segment. At
    ``crossover_alpha = 1 / (1 + slope)`` both endpoints have equal total
    loss; ``crossover_loss`` is the shared level in its un-doubled form
    ``alpha * |UNDER| + (1 - alpha) * OVER`` (half the total loss - the
    constant factor 2 cancels when comparing models).
    """

    endpoint_a: RrocPoint
    endpoint_b: RrocPoint
    slope: float
    crossover_alpha: float
    crossover_loss: float

    @property
    def is_vertical(self) -> bool:
        return math.isinf(self.slope)


def hybrid_segment(a: RrocPoint, b: RrocPoint) -> HybridSegment:
    """Segment between two distinct finite points with its crossover condition."""
    if not (a.is_finite and b.is_finite):
        raise DataError("hybrid endpoints must be finite points")
    if a.over == b.over and a.under == b.under:
        raise DataError("hybrid endpoints must be distinct")
    if a.over == b.over:
        # Vertical segment: only alpha = 0 weighs the two equally (both free).
        slope = math.inf
        alpha = 0.0
    else:
        slope = (b.under - a.under) / (b.over - a.over)
        alpha = 1.0 / (1.0 + slope)
    loss = alpha * -a.under + (1.0 - alpha) * a.over
    return HybridSegment(endpoint_a=a, endpoint_b=b, slope=slope, crossover_alpha=alpha, crossover_loss=loss)


@dataclass(frozen=True)
class HullPoint:
    """A hull vertex with its provenance.

    ``model_id`` is None for the two symbolic extremes. For points taken from
    a curve, ``vertex_index`` indexes that curve's distinct interior vertices.
    """

    point: RrocPoint
    model_id: Optional[str]
    vertex_index: Optional[int]


@dataclass(frozen=True)
class ConvexHull:
    """Upper-left convex frontier, ordered by increasing OVER.

    The sequence starts at the (0, -inf) extreme and ends at (inf, 0); the
    finite points in between are exactly the candidates that are loss-optimal
    for some alpha (collinear frontier points are kept: they are optimal for
    the same alpha but are distinct achievable operating points). Every input
    point not on the hull is suboptimal for every alpha.
    """

    points: tuple

    @property
    def finite_points(self) -> tuple:
        return tuple(hp for hp in self.points if hp.point.is_finite)


HullInput = Union[RrocPoint, RrocCurve]


def _candidate_points(inputs: Dict[str, HullInput]) -> List[HullPoint]:
    cands: List[HullPoint] = []
    for model_id in sorted(inputs):
        item = inputs[model_id]
        if isinstance(item, RrocPoint):
            if not item.is_finite:
                raise DataError(f"input point for {model_id!r} must be finite")
            cands.append(HullPoint(item, model_id, None))
        elif isinstance(item, RrocCurve):
            for k, v in enumerate(item.distinct_vertices()):
                cands.append(HullPoint(RrocPoint(v.over, v.under), model_id, k))
        else:
            raise DataError(f"unsupported hull input for {model_id!r}: {type(item).__name__}")
    return cands


def _pareto_frontier(cands: List[HullPoint]) -> List[HullPoint]:
    """Drop weakly dominated candidates (another point with <= over and >= under).

    Dominated points can only sit on the closed boundary via the extreme
    rays; they are never loss-optimal, and pruning them first keeps the hull
    scan free of degenerate vertical/horizontal runs.
    """
    cands = sorted(cands, key=lambda hp: (hp.point.over, -hp.point.under, hp.model_id or ""))
    out: List[HullPoint] = []
    best_under = -math.inf
    for hp in cands:
        if hp.point.under > best_under:
            out.append(hp)
            best_under = hp.point.under
    return out


def _turns_left(o: RrocPoint, a: RrocPoint, b: RrocPoint) -> bool:
    # Strictly counterclockwise o->a->b means a lies below the chord o-b.
    t1 = (a.over - o.over) * (b.under - o.under)
    t2 = (a.under - o.under) * (b.over - o.over)
    return (t1 - t2) > COLLINEAR_EPS * max(abs(t1), abs(t2), 1e-300)


def convex_hull(inputs: Dict[str, HullInput]) -> ConvexHull:
    """Convex hull of a set of RROC points and/or curves, extremes included.

    Monotone-chain scan over the non-dominated candidates sorted by OVER;
    a candidate already on the chain is removed when it falls strictly below
    the chord to the incoming point (relative epsilon ``COLLINEAR_EPS``), so
    exactly-collinear frontier points survive. The symbolic extremes are
    spliced on afterwards as the half-infinite rays.
    """
    if not inputs:
        raise DataError("need at least one point or curve")
    frontier = _pareto_frontier(_candidate_points(inputs))
    chain: List[HullPoint] = []
    for hp in frontier:
        while len(chain) >= 2 and _turns_left(chain[-2].point, chain[-1].point, hp.point):
            chain.pop()
        chain.append(hp)
    points = (HullPoint(UNDER_EXTREME, None, None), *chain, HullPoint(OVER_EXTREME, None, None))
    return ConvexHull(points=points)


@dataclass(frozen=True)
class DominanceRegion:
    """One alpha interval and the hull point optimal on it.

    The first region covers [alpha_low, alpha_high], every later one
    (alpha_low, alpha_high]: exact boundary alphas belong to the lower-alpha
    region.
    """

    alpha_low: float
    alpha_high: float
    model_id: Optional[str]
    point: RrocPoint

    def covers(self, alpha: float, first: bool) -> bool:
        if first:
            return self.alpha_low <= alpha <= self.alpha_high
        return self.alpha_low < alpha <= self.alpha_high


@dataclass(frozen=True)
class DominanceMap:
    """Partition of alpha in [0, 1] into dominance regions."""

    regions: tuple

    def model_at(self, alpha: float) -> DominanceRegion:
        a = _alpha_of(alpha)
        for i, region in enumerate(self.regions):
            if region.covers(a, first=(i == 0)):
                return region
        # Unreachable for a well-formed map; the last region ends at 1.
        raise DataError(f"no dominance region covers alpha={a!r}")


def dominance_map(inputs: Dict[str, HullInput]) -> DominanceMap:
    """Label each alpha interval with the hull point (and model) optimal there.

    Interval boundaries are the crossover alphas of consecutive hull
    segments: segment slopes decrease along the hull, so their alphas
    1/(1+slope) increase. Collinear hull points produce empty intervals,
    which are dropped (they are optimal only at the single shared alpha,
    where the tie-break prefers the lower-OVER point).
    """
    hull = convex_hull(inputs)
    finite = hull.finite_points
    regions: List[DominanceRegion] = []
    low = 0.0
    for hp, nxt in zip(finite, finite[1:]):
        high = hybrid_segment(hp.point, nxt.point).crossover_alpha
        if high > low or not regions:
            regions.append(DominanceRegion(low, high, hp.model_id, hp.point))
            low = high
    last = finite[-1]
    if not regions or low < 1.0:
        regions.append(DominanceRegion(low, 1.0, last.model_id, last.point))
    return DominanceMap(regions=tuple(regions))
