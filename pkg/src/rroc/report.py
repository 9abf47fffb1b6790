"""End-to-end evaluation pipeline and the JSON report it produces."""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np

from . import __version__
from .analysis import best_point_for_alpha, convex_hull, dominance_map, isometric_through
from .core import RrocPoint, metrics, over_under, total_loss
from .curve import aoc, normalized_curve, rroc_curve
from .data import Dataset, load_predictions
from .errors import ConfigError
from .shift import NoShift, OptimalConstantShift, cost_curve, default_alpha_grid

__all__ = ["OUTPUT_KINDS", "RunConfig", "EvaluationReport", "run", "error_density"]

SCHEMA_VERSION = "1"
OUTPUT_KINDS = ("points", "curves", "hull", "dominance", "cost", "density")
DEFAULT_OUTPUTS = ("points", "curves", "hull", "dominance")


@dataclass(frozen=True)
class RunConfig:
    """Configuration of one evaluation run."""

    input: Optional[str] = None
    alphas: Tuple[float, ...] = ()
    outputs: Tuple[str, ...] = DEFAULT_OUTPUTS
    normalize: bool = False
    json_path: Optional[str] = None
    svg_path: Optional[str] = None
    reproducible: bool = False

    def __post_init__(self):
        unknown = [o for o in self.outputs if o not in OUTPUT_KINDS]
        if unknown:
            raise ConfigError(
                f"unknown outputs {unknown!r} (choose from {', '.join(OUTPUT_KINDS)})"
            )
        if not self.outputs:
            raise ConfigError("at least one output kind is required")
        bad = [a for a in self.alphas if not 0.0 <= a <= 1.0]
        if bad:
            raise ConfigError(f"alpha values outside [0, 1]: {bad!r}")

    def as_dict(self) -> dict:
        return {
            "input": self.input,
            "alphas": list(self.alphas),
            "outputs": list(self.outputs),
            "normalize": self.normalize,
            "reproducible": self.reproducible,
        }


@dataclass
class EvaluationReport:
    """Aggregate of metrics, curves, hull, dominance and cost curves.

    Serializes losslessly to strict JSON: no NaN/Infinity tokens are ever
    emitted. Curves carry their interior vertices only and hulls their finite
    frontier points; the symbolic extremes at (0, -inf) and (inf, 0) are
    implied by the schema.
    """

    schema_version: str
    tool_version: str
    config: dict
    n: int
    models: Dict[str, dict]
    hull: Optional[dict] = None
    dominance: Optional[List[dict]] = None
    alpha_queries: Optional[List[dict]] = None
    generated_at: Optional[str] = None

    def as_dict(self) -> dict:
        out = {
            "schema_version": self.schema_version,
            "tool_version": self.tool_version,
            "config": self.config,
            "n": self.n,
            "models": self.models,
        }
        if self.hull is not None:
            out["hull"] = self.hull
        if self.dominance is not None:
            out["dominance"] = self.dominance
        if self.alpha_queries is not None:
            out["alpha_queries"] = self.alpha_queries
        if self.generated_at is not None:
            out["generated_at"] = self.generated_at
        return out

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.as_dict(), indent=indent, allow_nan=False) + "\n"


def error_density(errors, points: int = 256):
    """Gaussian kernel density of an error vector, Silverman bandwidth.

    Bandwidth 0.9 * min(std, IQR/1.34) * n**(-1/5); degenerate spreads fall
    back to a narrow kernel so constant error vectors still render as a
    spike.
    """
    e = np.asarray(errors, dtype=float)
    n = e.size
    q75, q25 = np.percentile(e, [75, 25])
    candidates = [c for c in (float(np.std(e)), (q75 - q25) / 1.34) if c > 0]
    spread = min(candidates) if candidates else 0.0
    h = 0.9 * spread * n ** (-0.2)
    if h <= 0:
        h = max(1e-3 * max(abs(float(e[0])), 1.0), 1e-12)
    xs = np.linspace(e.min() - 3 * h, e.max() + 3 * h, points)
    z = (xs[:, None] - e[None, :]) / h
    density = np.exp(-0.5 * z * z).sum(axis=1) / (n * h * np.sqrt(2 * np.pi))
    return xs, density


def _point_dict(point: RrocPoint, scale: float = 1.0) -> dict:
    return {"over": point.over / scale, "under": point.under / scale}


def _analyze_model(model_id: str, e: np.ndarray, config: RunConfig) -> dict:
    wants = set(config.outputs)
    m = metrics(e)
    point = over_under(e)
    curve = rroc_curve(e, model_id=model_id)
    scale = float(e.size) if config.normalize else 1.0

    entry: dict = {
        "metrics": {
            "mae": m.mae,
            "mse": m.mse,
            "bias": m.bias,
            "variance": m.variance,
            "mmse": m.mmse,
        },
        "aoc": aoc(curve),
        "normalized_aoc": aoc(curve) / curve.n**2,
    }
    if "points" in wants:
        entry["point"] = _point_dict(point, scale)
    if "curves" in wants:
        reported = normalized_curve(curve) if config.normalize else curve
        entry["curve"] = {
            "normalized": reported.normalized,
            "distinct_vertex_count": len(reported.distinct_vertices()),
            "vertices": [
                {
                    "over": v.over,
                    "under": v.under,
                    "shift": v.shift,
                    "n_over": v.n_over,
                    "n_under": v.n_under,
                }
                for v in reported.interior
            ],
        }
    if "cost" in wants:
        grid = default_alpha_grid()
        none_curve = cost_curve(e, NoShift(), grid, model_id=model_id)
        opt_curve = cost_curve(e, OptimalConstantShift(), grid, model_id=model_id)
        entry["cost_curves"] = {
            "alphas": grid.tolist(),
            "none": none_curve.losses.tolist(),
            "optimal_constant": opt_curve.losses.tolist(),
        }
    if "density" in wants:
        xs, density = error_density(e)
        entry["density"] = {"x": xs.tolist(), "density": density.tolist()}
    entry["_point"] = point
    entry["_curve"] = curve
    return entry


def run(config: RunConfig, dataset: Optional[Dataset] = None) -> EvaluationReport:
    """Load, analyze every model, and assemble the report.

    Per-model analysis runs concurrently (models are independent); assembly
    and serialization are single-threaded, so reports are deterministic for a
    given config and input.
    """
    if dataset is None:
        if config.input is None:
            raise ConfigError("no input file configured")
        dataset = load_predictions(config.input)

    model_ids = dataset.model_ids
    with ThreadPoolExecutor(max_workers=min(8, len(model_ids))) as pool:
        entries = dict(
            zip(
                model_ids,
                pool.map(lambda m: _analyze_model(m, dataset.errors(m), config), model_ids),
            )
        )

    wants = set(config.outputs)
    scale = float(dataset.n) if config.normalize else 1.0
    hull_dict = None
    dominance_list = None
    if "hull" in wants or "dominance" in wants:
        if "curves" in wants:
            hull_inputs = {m: entries[m]["_curve"] for m in model_ids}
        else:
            hull_inputs = {m: entries[m]["_point"] for m in model_ids}
        if "hull" in wants:
            hull = convex_hull(hull_inputs)
            hull_dict = {
                "level": "curves" if "curves" in wants else "points",
                "points": [
                    {
                        "over": hp.point.over / scale,
                        "under": hp.point.under / scale,
                        "model": hp.model_id,
                        "vertex_index": hp.vertex_index,
                    }
                    for hp in hull.finite_points
                ],
            }
        if "dominance" in wants:
            dominance_list = [
                {
                    "alpha_low": r.alpha_low,
                    "alpha_high": r.alpha_high,
                    "model": r.model_id,
                    "point": _point_dict(r.point, scale),
                }
                for r in dominance_map(hull_inputs).regions
            ]

    alpha_queries = None
    if config.alphas:
        alpha_queries = []
        for a in config.alphas:
            losses = {m: total_loss(entries[m]["_point"], a) for m in model_ids}
            best_point, _ = best_point_for_alpha(
                [entries[m]["_point"] for m in model_ids], a
            )
            best_id = min(m for m in model_ids if entries[m]["_point"] == best_point)
            iso = isometric_through(best_point, a)
            alpha_queries.append(
                {
                    "alpha": a,
                    "losses": losses,
                    "best": best_id,
                    "isometric": {
                        "slope": iso.slope if np.isfinite(iso.slope) else None,
                        "intercept": iso.intercept,
                        "level": iso.level,
                    },
                }
            )

    models = {}
    for m in model_ids:
        entry = dict(entries[m])
        entry.pop("_point")
        entry.pop("_curve")
        models[m] = entry

    return EvaluationReport(
        schema_version=SCHEMA_VERSION,
        tool_version=__version__,
        config=config.as_dict(),
        n=dataset.n,
        models=models,
        hull=hull_dict,
        dominance=dominance_list,
        alpha_queries=alpha_queries,
        generated_at=None if config.reproducible else time.strftime("%Y-%m-%dT%H:%M:%S%z"),
    )
