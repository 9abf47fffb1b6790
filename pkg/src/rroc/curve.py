"""RROC curve construction by constant-shift sweep, segment geometry and AOC.

A curve is the locus of (OVER, UNDER) points of the shifted model ``m<s>``
(every prediction moved by the same constant ``s``) as ``s`` sweeps the whole
real line. It is piecewise linear with ``n + 2`` vertices: the symbolic
extremes (0, -inf) and (inf, 0) plus one interior vertex per example, reached
by the shift that moves that example exactly onto the boundary between
over- and under-estimation.

Boundary convention: at a vertex shift one shifted error is exactly zero. The
vertex coordinates follow the sweep construction (the zero term is summed into
UNDER, where it adds nothing), while the ``n_over``/``n_under`` counts use
strict inequalities, so the boundary example is counted in neither. This is
the single place the two conventions meet and they agree numerically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Optional

import numpy as np

from .core import as_errors
from .errors import DataError

__all__ = [
    "VertexPoint",
    "RrocCurve",
    "SegmentSlope",
    "rroc_curve",
    "segment_slopes",
    "segment_alpha",
    "aoc",
    "default_shift_grid",
    "aoc_brute_force",
    "normalized_curve",
    "is_convex",
]


@dataclass(frozen=True)
class VertexPoint:
    """One vertex of an RROC curve.

    ``shift`` is the constant added to the predictions to land on this vertex
    (-inf and +inf for the extremes). ``n_over``/``n_under`` count the
    examples strictly over-/under-estimated there; the example(s) sitting
    exactly on the boundary are counted in neither, so
    ``n_over + n_under <= n``.
    """

    over: float
    under: float
    shift: float
    n_over: int
    n_under: int

    @property
    def is_finite(self) -> bool:
        return math.isfinite(self.over) and math.isfinite(self.under)


@dataclass(frozen=True)
class RrocCurve:
    """Ordered vertices of a shift-swept model, extremes included."""

    vertices: tuple
    n: int
    model_id: Optional[str] = None
    normalized: bool = False

    def __post_init__(self):
        if self.n < 1:
            raise DataError("curve needs n >= 1 examples")
        if len(self.vertices) < 3:
            raise DataError("curve needs the two extremes plus interior vertices")
        first, last = self.vertices[0], self.vertices[-1]
        if not (first.over == 0.0 and math.isinf(first.under)):
            raise DataError("first vertex must be the (0, -inf) extreme")
        if not (math.isinf(last.over) and last.under == 0.0):
            raise DataError("last vertex must be the (inf, 0) extreme")

    @property
    def interior(self) -> tuple:
        """The finite vertices, in sweep order."""
        return self.vertices[1:-1]

    def interior_arrays(self):
        """(overs, unders) of the interior vertices as float arrays."""
        ov = np.array([v.over for v in self.interior])
        un = np.array([v.under for v in self.interior])
        return ov, un

    def distinct_vertices(self) -> tuple:
        """Interior vertices with coincident (tied-error) runs collapsed.

        Ties in the error vector make consecutive vertices coincide; this is
        the deduplicated view used for plotting and counting visible points.
        Coincidence is judged at 1e-12 of the curve's coordinate scale, so
        ties survive the float noise of computing errors by subtraction. The
        first vertex of each run is kept.
        """
        finite = [v for v in self.interior if v.is_finite]
        scale = max((max(v.over, -v.under) for v in finite), default=0.0)
        tol = 1e-12 * scale
        out = []
        for v in self.interior:
            if out and abs(v.over - out[-1].over) <= tol and abs(v.under - out[-1].under) <= tol:
                continue
            out.append(v)
        return tuple(out)


@dataclass(frozen=True)
class SegmentSlope:
    """Slope of curve segment ``index`` (1-based, 1..n+1)."""

    index: int
    slope: float


def rroc_curve(errors, model_id: Optional[str] = None) -> RrocCurve:
    """Build the RROC curve of an error vector.

    The errors are sorted decreasingly (stable, so tied values keep their
    original order) and each error in turn is moved onto the over/under
    boundary. Interior coordinates are accumulated from the sorted adjacent
    differences, which keeps every coordinate a sum of nonnegative terms:

        over_{k+1}  = over_k + (k+1) * d_k
        under_k     = under_{k+1} - (n-k-1) * d_k,   d_k = e_(k) - e_(k+1)

    This is algebraically identical to summing the shifted errors directly
    and avoids cancellation for nearly tied errors.
    """
    e = as_errors(errors)
    n = e.size
    es = e[np.argsort(-e, kind="stable")]

    if n == 1:
        overs = np.zeros(1)
        unders = np.zeros(1)
    else:
        d = es[:-1] - es[1:]
        overs = np.concatenate(([0.0], np.cumsum(np.arange(1, n) * d)))
        w = np.arange(n - 1, 0, -1) * d
        unders = -np.concatenate((np.cumsum(w[::-1])[::-1], [0.0]))

    n_over = np.searchsorted(-es, -es, side="left")        # strictly larger errors
    n_under = n - np.searchsorted(-es, -es, side="right")  # strictly smaller errors

    vertices = [VertexPoint(0.0, -math.inf, -math.inf, 0, n)]
    for k in range(n):
        vertices.append(
            VertexPoint(
                over=float(overs[k]),
                under=float(unders[k]),
                shift=float(-es[k]),
                n_over=int(n_over[k]),
                n_under=int(n_under[k]),
            )
        )
    vertices.append(VertexPoint(math.inf, 0.0, math.inf, n, 0))
    return RrocCurve(vertices=tuple(vertices), n=n, model_id=model_id)


def segment_slopes(n: int) -> list:
    """Slopes of the n+1 curve segments: (n+1-i)/(i-1) for i = 1..n+1.

    They depend only on n, not on the error values; curves of equal-sized
    datasets differ in segment lengths, never in slopes.
    """
    if n < 1:
        raise DataError(f"n must be >= 1, got {n}")
    out = [SegmentSlope(1, math.inf)]
    for i in range(2, n + 2):
        out.append(SegmentSlope(i, (n + 1 - i) / (i - 1)))
    return out


def segment_alpha(n: int, i: int) -> float:
    """Operating condition alpha = (i-1)/n for which segment i hosts the optimum."""
    if n < 1:
        raise DataError(f"n must be >= 1, got {n}")
    if not 1 <= i <= n + 1:
        raise DataError(f"segment index must be in 1..{n + 1}, got {i}")
    return (i - 1) / n


def aoc(curve: RrocCurve) -> float:
    """Area over the RROC curve (trapezoid sum over the interior vertices).

    The extreme trapezoids contribute nothing for finite models, so the sum
    runs over consecutive interior vertex pairs. Equals
    ``population_variance(e) * n**2 / 2`` for the curve of ``e``.
    """
    interior = curve.interior
    if not interior or not all(v.is_finite for v in interior):
        raise DataError("AOC needs a curve with finite interior vertices")
    ov, un = curve.interior_arrays()
    return float(np.sum(-(un[1:] + un[:-1]) / 2.0 * (ov[1:] - ov[:-1])))


def default_shift_grid(errors) -> np.ndarray:
    """Default sweep grid for the brute-force AOC oracle.

    10*n^2 evenly spaced shifts across the shift range (-max e to -min e)
    padded by one range-width on each side, plus the exact boundary shifts
    -e_i so the sweep lands on every vertex.
    """
    e = as_errors(errors)
    n = e.size
    lo, hi = float(-e.max()), float(-e.min())
    span = max(hi - lo, 1.0)
    even = np.linspace(lo - span, hi + span, 10 * n * n)
    return np.unique(np.concatenate((even, -e)))


def aoc_brute_force(errors, grid=None) -> float:
    """AOC by sweeping shifts pointwise and integrating -UNDER d(OVER).

    Independent of the vertex construction: each grid shift recomputes OVER
    and UNDER from scratch and the area comes from trapezoid quadrature over
    consecutive grid points. Converges to ``aoc(rroc_curve(errors))`` as the
    grid refines.
    """
    e = as_errors(errors)
    if grid is None:
        grid = default_shift_grid(e)
    g = np.asarray(grid, dtype=float)
    if g.ndim != 1 or g.size < 2:
        raise DataError("shift grid must be a 1-D sequence of at least 2 shifts")
    if not np.all(np.isfinite(g)):
        raise DataError("shift grid contains non-finite entries")
    if np.any(np.diff(g) <= 0):
        raise DataError("shift grid must be strictly increasing")

    t = e[None, :] + g[:, None]
    over = np.where(t > 0, t, 0.0).sum(axis=1)
    under = np.where(t < 0, t, 0.0).sum(axis=1)
    return float(np.sum(-(under[1:] + under[:-1]) / 2.0 * (over[1:] - over[:-1])))


def normalized_curve(curve: RrocCurve) -> RrocCurve:
    """Divide both coordinates of every vertex by n.

    Makes curves of different dataset sizes comparable; the normalized AOC is
    ``variance / 2``. Shifts and counts are metadata and stay untouched.
    """
    n = curve.n
    vertices = tuple(
        replace(v, over=v.over / n, under=v.under / n) for v in curve.vertices
    )
    return RrocCurve(vertices=vertices, n=n, model_id=curve.model_id, normalized=True)


def is_convex(curve: RrocCurve, rel_tol: float = 1e-9) -> bool:
    """True iff the finite-segment slopes are nonincreasing left to right.

    Curves produced by ``rroc_curve`` are always convex (their slopes follow
    the fixed (n+1-i)/(i-1) ladder); this check exists for hand-built vertex
    lists. Coincident vertices are skipped; slope comparisons allow a small
    relative tolerance for float noise.
    """
    pts = [(v.over, v.under) for v in curve.distinct_vertices()]
    slopes = []
    for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
        if x1 == x0:
            slopes.append(math.inf)
        else:
            slopes.append((y1 - y0) / (x1 - x0))
    for prev, cur in zip(slopes, slopes[1:]):
        if cur > prev + rel_tol * max(abs(prev), abs(cur), 1.0):
            return False
    return True
