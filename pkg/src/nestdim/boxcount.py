"""Empirical dimension estimation: mesh box counting, 1-D sausages, log-log fits."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional

import numpy as np

from .nests import Scene
from .split import ResourceLimitError

__all__ = [
    "CounterKind", "CountSeries", "EstimateReport", "grid_count", "sausage_measure_1d",
    "regression_dimension", "relative_error", "epsilon_schedule", "DEFAULT_CELL_CAP",
]

DEFAULT_CELL_CAP = 50_000_000
# arcs are sampled every eps/ARC_STEPS of arc length
ARC_STEPS = 4


class CounterKind(str, Enum):
    PRIMITIVE = "primitive"
    GRID = "grid"


@dataclass(frozen=True)
class CountSeries:
    eps: tuple
    count: tuple
    counter_kind: CounterKind = CounterKind.PRIMITIVE

    def __post_init__(self):
        eps = tuple(float(e) for e in self.eps)
        count = tuple(int(c) for c in self.count)
        object.__setattr__(self, "eps", eps)
        object.__setattr__(self, "count", count)
        object.__setattr__(self, "counter_kind", CounterKind(self.counter_kind))
        if len(eps) != len(count):
            raise ValueError("eps and count columns differ in length")
        if any(b >= a for a, b in zip(eps, eps[1:])):
            raise ValueError("eps must be strictly decreasing")
        if any(c <= 0 for c in count):
            raise ValueError("counts must be positive")

    def __len__(self) -> int:
        return len(self.eps)


@dataclass(frozen=True)
class EstimateReport:
    slope: float
    intercept: float
    residuals: tuple
    theory_value: Optional[float] = None
    relative_error: Optional[float] = None


def _point_cells(x: np.ndarray, y: np.ndarray, eps: float) -> np.ndarray:
    i = np.floor(x / eps).astype(np.int64)
    j = np.floor(y / eps).astype(np.int64)
    # rows fit in 32 bits for any eps the nests accept
    return (i << 32) + (j & 0xFFFFFFFF)


def _arc_samples(radius, lo, hi, eps):
    step = eps / ARC_STEPS
    n = np.ceil(radius * (hi - lo) / step).astype(np.int64) + 1
    total = int(n.sum())
    owner = np.repeat(np.arange(len(n)), n)
    start = np.cumsum(n) - n
    t = (np.arange(total) - start[owner]) / np.maximum(n[owner] - 1, 1)
    theta = lo[owner] + t * (hi - lo)[owner]
    rho = radius[owner]
    return rho * np.cos(theta), rho * np.sin(theta)


def grid_count(scene: Scene, eps: float, cell_cap: int = DEFAULT_CELL_CAP) -> int:
    """Number of cells of the origin-anchored ``eps``-mesh the scene meets.

    Cells are half-open ``[i*eps, (i+1)*eps)``. A point occupies its cell;
    an arc is sampled every ``eps/4`` of arc length and marks every cell a
    sample falls in.

    Raises
    ------
    ResourceLimitError
        When more than ``cell_cap`` samples would have to be binned.
    """
    if len(scene) == 0:
        raise ValueError("cannot box-count an empty scene")
    if not eps > 0:
        raise ValueError(f"eps must be positive, got {eps}")
    n_samples = len(scene.point_radius)
    if len(scene.arc_radius):
        lengths = scene.arc_radius * (scene.arc_hi - scene.arc_lo)
        n_samples += int(np.ceil(lengths / (eps / ARC_STEPS)).sum()) + len(lengths)
    if n_samples > cell_cap:
        raise ResourceLimitError(
            f"grid count at eps={eps:g} needs {n_samples} samples, cap is {cell_cap}"
        )
    keys = []
    if len(scene.point_radius):
        x = scene.point_radius * np.cos(scene.point_angle)
        y = scene.point_radius * np.sin(scene.point_angle)
        keys.append(_point_cells(x, y, eps))
    if len(scene.arc_radius):
        keys.append(_point_cells(*_arc_samples(scene.arc_radius, scene.arc_lo,
                                               scene.arc_hi, eps), eps))
    return int(np.unique(np.concatenate(keys)).size)


def sausage_measure_1d(items: Iterable, eps: float) -> float:
    """Exact length of the ``eps``-neighbourhood of points and intervals on a line.

    ``items`` may mix scalars (points) and ``(lo, hi)`` pairs (intervals).
    """
    lo, hi = [], []
    for it in items:
        if np.ndim(it) == 0:
            lo.append(float(it))
            hi.append(float(it))
        else:
            a, b = it
            lo.append(float(a))
            hi.append(float(b))
    if not lo:
        return 0.0
    lo = np.asarray(lo) - eps
    hi = np.asarray(hi) + eps
    order = np.argsort(lo, kind="stable")
    lo, hi = lo[order], hi[order]
    reach = np.maximum.accumulate(hi)
    # a new run starts where an interval begins past everything before it
    starts = np.concatenate([[True], lo[1:] > reach[:-1]])
    run = np.cumsum(starts) - 1
    run_lo = lo[starts]
    run_hi = np.full(len(run_lo), -np.inf)
    np.maximum.at(run_hi, run, hi)
    return float((run_hi - run_lo).sum())


def regression_dimension(series: CountSeries, theory: Optional[float] = None) -> EstimateReport:
    """Least-squares slope of ``ln N`` against ``-ln eps``."""
    if len(series) < 3:
        raise ValueError(f"need at least 3 (eps, count) rows, got {len(series)}")
    x = -np.log(np.asarray(series.eps))
    y = np.log(np.asarray(series.count, dtype=float))
    if np.ptp(x) == 0:
        raise ValueError("degenerate regression: all eps equal")
    xm, ym = x.mean(), y.mean()
    slope = float(((x - xm) * (y - ym)).sum() / ((x - xm) ** 2).sum())
    intercept = float(ym - slope * xm)
    residuals = tuple((y - (intercept + slope * x)).tolist())
    rel = None if theory is None else relative_error(slope, theory)
    return EstimateReport(slope, intercept, residuals, theory, rel)


def relative_error(estimate, theory: float) -> float:
    """``|slope - theory| / theory``; accepts a report or a bare slope."""
    if not theory > 0:
        raise ValueError(f"theory value must be positive, got {theory}")
    slope = estimate.slope if isinstance(estimate, EstimateReport) else float(estimate)
    return abs(slope - theory) / theory


def epsilon_schedule(eps_hi: float, eps_lo: float, samples: int) -> list[float]:
    """Geometrically spaced resolutions from ``eps_hi`` down to ``eps_lo`` inclusive."""
    if not 0 < eps_lo < eps_hi:
        raise ValueError(f"need 0 < eps_lo < eps_hi, got ({eps_hi}, {eps_lo})")
    if samples < 3:
        raise ValueError(f"need at least 3 samples, got {samples}")
    ratio = eps_lo / eps_hi
    out = [eps_hi * ratio ** (k / (samples - 1)) for k in range(samples)]
    out[0], out[-1] = float(eps_hi), float(eps_lo)
    return out
