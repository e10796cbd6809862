"""Estimation runs and parameter sweeps over nests of prescribed dimension."""
from __future__ import annotations

import csv
import io
import math
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .basesets import DBeta, UniformCantor
from .boxcount import (
    CounterKind, CountSeries, EstimateReport, epsilon_schedule, grid_count,
    regression_dimension,
)
from .nests import Kind, NestSpec, generate_scene, primitive_count
from .theory import ParameterRangeError, centered_alpha, nest_dimension, solve_parameters

# eps range and sample count used for the sweeps
SWEEP_SCHEDULE = (2.0**-10, 2.0**-22, 10)


def fmt(x) -> str:
    """Six significant digits, the precision of every CSV this package writes."""
    return f"{x:.6g}"


def theory_dimension(spec: NestSpec) -> float:
    return nest_dimension(spec.kind, spec.alpha, spec.base.delta).value


def count_series(spec: NestSpec, eps: Sequence[float], counter="primitive") -> CountSeries:
    counter = CounterKind(counter)
    if counter is CounterKind.PRIMITIVE:
        counts = [primitive_count(spec, e) for e in eps]
    else:
        counts = [grid_count(generate_scene(spec, e), e) for e in eps]
    return CountSeries(tuple(eps), tuple(counts), counter)


def estimate(spec: NestSpec, eps_hi: float, eps_lo: float, samples: int,
             counter="primitive") -> tuple[CountSeries, EstimateReport]:
    """Count the nest across a geometric eps schedule and fit the log-log slope."""
    series = count_series(spec, epsilon_schedule(eps_hi, eps_lo, samples), counter)
    return series, regression_dimension(series, theory_dimension(spec))


def estimate_csv(series: CountSeries, report: EstimateReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["epsilon", "count", "neg_ln_eps", "ln_count", "residual"])
    for e, c, res in zip(series.eps, series.count, report.residuals):
        w.writerow([fmt(e), c, fmt(-math.log(e)), fmt(math.log(c)), fmt(res)])
    return buf.getvalue()


def summary_line(report: EstimateReport) -> str:
    return (f"slope={fmt(report.slope)} theory={fmt(report.theory_value)} "
            f"rel_err={fmt(report.relative_error)}")


@dataclass(frozen=True)
class SweepRow:
    family: str
    d_target: float
    alpha: float
    beta_or_r: float
    slope: float
    rel_err: float


FAMILIES = ("dbeta", "cantor")


def family_spec(family: str, params) -> NestSpec:
    if family == "dbeta":
        return NestSpec(Kind.CENTRE, params.alpha, DBeta(params.beta))
    if family == "cantor":
        return NestSpec(Kind.CENTRE, params.alpha, UniformCantor(params.N, params.r))
    raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")


def _run_point(job) -> SweepRow:
    family, params, schedule = job
    spec = family_spec(family, params)
    series = count_series(spec, epsilon_schedule(*schedule))
    report = regression_dimension(series, params.d)
    return SweepRow(family, params.d, params.alpha,
                    params.beta if family == "dbeta" else params.r,
                    report.slope, report.relative_error)


def run_sweep(points: Iterable[tuple[float, float]], N: int = 3, schedule=SWEEP_SCHEDULE,
              families=FAMILIES, strict: bool = True, workers: int = 1) -> list[SweepRow]:
    """Estimate every ``(d, alpha)`` grid point for every family.

    Grid points outside the admissible exponent interval are skipped with a
    warning. Rows come back in grid order whatever ``workers`` is.
    """
    jobs = []
    for d, alpha in points:
        try:
            params = solve_parameters(d, alpha, N, strict=strict)
        except ParameterRangeError as exc:
            warnings.warn(f"skipping grid point: {exc}", stacklevel=2)
            continue
        jobs.extend((f, params, schedule) for f in families)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_run_point, jobs))
    return [_run_point(j) for j in jobs]


def fixed_dimension_grid(d: float, alpha_lo: float, alpha_hi: float, points: int):
    return [(d, float(a)) for a in np.linspace(alpha_lo, alpha_hi, points)]


def varying_dimension_grid(d_lo: float, d_hi: float, points: int):
    return [(float(d), centered_alpha(float(d))) for d in np.linspace(d_lo, d_hi, points)]


def sweep_csv(rows: Sequence[SweepRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["family", "d_target", "alpha", "beta_or_r", "slope", "rel_err"])
    for r in rows:
        w.writerow([r.family, fmt(r.d_target), fmt(r.alpha), fmt(r.beta_or_r),
                    fmt(r.slope), fmt(r.rel_err)])
    return buf.getvalue()
