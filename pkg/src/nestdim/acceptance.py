"""Desk-scale acceptance checks for the whole package.

Each ``criterion_*`` function returns a :class:`CriterionResult`; the report
text is deterministic so two runs print identical lines.
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from . import basesets, theory
from .basesets import DBeta, Singleton, UniformCantor
from .boxcount import epsilon_schedule, regression_dimension, sausage_measure_1d
from .experiments import (
    count_series, fixed_dimension_grid, run_sweep, varying_dimension_grid,
)
from .nests import Kind, NestSpec
from .split import split_arrays

# Previously published values for the standard Cantor set's contents, shown for comparison.
PUBLISHED_CANTOR_UPPER = 2.27
PUBLISHED_CANTOR_LOWER = 2.19
RUNTIME_BUDGET_S = 300.0


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.number}. {self.name}: {self.detail}"


def criterion_1() -> CriterionResult:
    """Fixed total dimension 3/4 across twelve exponents, both families."""
    start = time.perf_counter()
    grid = fixed_dimension_grid(0.75, 1 / 3 + 0.05, 4 / 3 - 0.15, 12)
    rows = run_sweep(grid, N=3)
    elapsed = time.perf_counter() - start
    good = sum(r.rel_err < 0.10 for r in rows)
    frac = good / len(rows)
    worst = max(r.rel_err for r in rows)
    ok = len(rows) == 24 and frac >= 0.80 and elapsed <= RUNTIME_BUDGET_S
    return CriterionResult(1, "fixed-dimension sweep", ok,
                           f"{good}/{len(rows)} points under 10% (worst {worst:.4f})")


def criterion_2() -> CriterionResult:
    """Varying dimension with the exponent centred in its interval."""
    start = time.perf_counter()
    rows = run_sweep(varying_dimension_grid(0.3, 0.95, 8), N=3)
    elapsed = time.perf_counter() - start
    worst = max(r.rel_err for r in rows)
    ok = len(rows) == 16 and worst < 0.05 and elapsed <= RUNTIME_BUDGET_S
    return CriterionResult(2, "varying-dimension sweep", ok,
                           f"{len(rows)} points, worst relative error {worst:.4f} (< 0.05)")


def critical_runs(samples: int = 300) -> dict:
    """Bi-fractals of dimension 3/4 at exponents below, at and above 1/delta."""
    eps = epsilon_schedule(2.0**-5, 2.0**-35, samples)
    out = {}
    for alpha in (4 / 5, 4 / 3, 3.0):
        p = theory.solve_parameters(0.75, alpha, strict=False)
        spec = NestSpec(Kind.CENTRE, alpha, DBeta(p.beta))
        out[alpha] = regression_dimension(count_series(spec, eps), 0.75)
    return out


def criterion_3() -> CriterionResult:
    runs = critical_runs()
    slopes = {a: r.slope for a, r in runs.items()}
    maxres = {a: max(abs(x) for x in r.residuals) for a, r in runs.items()}
    ratio = maxres[4 / 3] / max(maxres[4 / 5], maxres[3.0])
    ok = (all(0.74 <= slopes[a] <= 0.76 for a in (4 / 5, 3.0))
          and 0.78 <= slopes[4 / 3] <= 0.86 and ratio > 1.5)
    return CriterionResult(
        3, "critical-point behaviour", ok,
        f"slopes a=4/5:{slopes[4 / 5]:.4f} a=4/3:{slopes[4 / 3]:.4f} a=3:{slopes[3.0]:.4f}; "
        f"max-residual ratio {ratio:.2f}")


def criterion_4() -> CriterionResult:
    g = basesets.gamma_coeff
    checks = [
        abs(g(0) - 1) <= 1e-12, abs(g(1) - 2) <= 1e-12, abs(g(2) - math.pi) <= 1e-12,
    ]
    for e in (0.1, 0.01):
        checks.append(abs(basesets.cube_sausage_volume(2, 2, e) - (1 + 4 * e + math.pi * e * e)) <= 1e-12)
    nd = theory.nest_dimension
    for a in (0.3, 1.0, 2.5):
        checks.append(abs(nd("centre", a, 0.0).value - 1 / (a + 1)) <= 1e-12)
    crit = nd("centre", 4 / 3, 0.75)
    checks.append(abs(crit.value - 0.75) <= 1e-12 and not crit.nondegenerate)
    checks.append(abs(nd("outer", 1.0, 1.0).value - 1.5) <= 1e-12)
    checks.append(abs(theory.bifractal_dimension(1, 1) - 0.75) <= 1e-12)
    checks.append(abs(theory.cantor_nest_dimension("centre", 1, 3, 1 / 9) - 0.75) <= 1e-12)
    checks.append(abs(theory.cantor_nest_dimension("outer", 1, 2, 1 / 3)
                      - (0.5 + math.log(2) / math.log(3))) <= 1e-12)
    checks.append(abs(theory.hypersphere_nest_dimension(2, 1, "centre") - 1) <= 1e-12)
    checks.append(abs(theory.hypersphere_nest_dimension(2, 1 / 3, "centre") - 1.5) <= 1e-12)
    return CriterionResult(4, "closed-form unit checks", all(checks),
                           f"{sum(checks)}/{len(checks)} exact values to 1e-12")


def split_sample(n: int = 10_000, seed: int = 0):
    """Random exponents in (0.1, 4) and log-uniform eps in (2**-30, 0.2)."""
    rng = np.random.default_rng(seed)
    alpha = rng.uniform(0.1, 4.0, n)
    eps = np.exp(rng.uniform(math.log(2.0**-30), math.log(0.2), n))
    return alpha, eps


def split_ratio_band(alpha, eps):
    """Ratios of m1, m2 to their predicted size, for every sample with m1 >= 1.

    The predicted sizes are ``(alpha/2)**(1/(1+alpha)) * eps**(-1/(1+alpha))``
    for ``m1`` and ``(2/alpha)**(alpha/(1+alpha)) * eps**(-1/(1+alpha))`` for
    ``m2``.
    """
    chains_ok = True
    r1, r2 = [], []
    for a, e in zip(alpha.tolist(), eps.tolist()):
        m1, m2 = (int(v[0]) for v in split_arrays(a, np.array([e])))
        if m1 < 1:
            continue
        lhs = (m1 + 1) ** -a - (m1 + 2) ** -a < 2 * e <= m1**-a - (m1 + 1) ** -a
        rhs = (m1 + 1) ** -a <= 2 * m2 * e <= m1**-a
        chains_ok &= lhs and rhs
        scale = e ** (-1 / (1 + a))
        r1.append(m1 / ((a / 2) ** (1 / (1 + a)) * scale))
        r2.append(m2 / ((2 / a) ** (a / (1 + a)) * scale))
    return chains_ok, np.array(r1), np.array(r2)


SPLIT_BAND = 4.0


def criterion_5() -> CriterionResult:
    chains_ok, r1, r2 = split_ratio_band(*split_sample())
    both = np.concatenate([r1, r2])
    in_band = bool(np.all((both >= 1 / SPLIT_BAND) & (both <= SPLIT_BAND)))
    return CriterionResult(
        5, "tail/core split property suite", chains_ok and in_band,
        f"{len(r1)} samples with m1>=1; inequality chains {'hold' if chains_ok else 'FAIL'}; "
        f"m1 ratio in [{r1.min():.3f}, {r1.max():.3f}], m2 ratio in [{r2.min():.3f}, {r2.max():.3f}] "
        f"(band [1/{SPLIT_BAND:g}, {SPLIT_BAND:g}])")


def e_alpha_sausage_ratio(alpha: float, eps: float) -> float:
    """Normalised sausage length of ``E_alpha`` computed exactly.

    Past the tail all gaps are below ``2*eps``, so the sausage of the remaining
    terms is that of the interval ``[0, (m1+1)**-alpha]``.
    """
    m1 = int(split_arrays(alpha, np.array([eps]))[0][0])
    tail = (np.arange(1, m1 + 1, dtype=float) ** -alpha).tolist()
    length = sausage_measure_1d(tail + [(0.0, (m1 + 1.0) ** -alpha)], eps)
    return theory.normalized_content_ratio(length, 1, 1 / (1 + alpha), eps)


def cantor_ratio_series(N: int = 2, r: float = 1 / 3, depth: int = 8, samples: int = 80):
    """Normalised sausage lengths of the level-``depth`` Cantor construction.

    Only eps at which the level-``depth`` intervals give the exact sausage of
    the limit set are used (``2*eps`` at least the next-level gap).
    """
    spec = UniformCantor(N, r)
    # min_len just above the gap a level-`depth` split would open: exactly `depth` levels
    segs = basesets.cantor_segments(N, r, spec.gap_ratio * r**depth * (1 + 1e-9))
    eps_min = spec.gap_ratio * r**depth / 2
    eps = np.geomspace(0.1, eps_min, samples)
    return eps, np.array([theory.normalized_content_ratio(sausage_measure_1d(segs, e), 1, spec.delta, e)
                          for e in eps])


def criterion_6() -> CriterionResult:
    target = basesets.e_alpha_content(1.0)
    a = e_alpha_sausage_ratio(1.0, 2.0**-20)
    ok_e = abs(a - target) / target < 0.05
    upper, lower = basesets.cantor_minkowski_contents(2, 1 / 3)
    _, ratios = cantor_ratio_series()
    ok_c = bool(np.all((ratios >= 0.8 * lower) & (ratios <= 1.2 * upper)))
    return CriterionResult(
        6, "content cross-checks", ok_e and ok_c,
        f"E_1: numeric {a:.5f} vs formula {target:.5f}; "
        f"C_2^(1/3): formula upper/lower {upper:.4f}/{lower:.4f}, "
        f"printed {PUBLISHED_CANTOR_UPPER}/{PUBLISHED_CANTOR_LOWER}, "
        f"numeric ratios in [{ratios.min():.4f}, {ratios.max():.4f}]")


def counter_corpus() -> list[NestSpec]:
    bases = (Singleton(), DBeta(1.0), UniformCantor(3, 1 / 9))
    return [NestSpec(k, 1.0, b) for b in bases for k in (Kind.CENTRE, Kind.OUTER)]


def criterion_7() -> CriterionResult:
    eps = epsilon_schedule(2.0**-8, 2.0**-16, 9)
    diffs = []
    for spec in counter_corpus():
        a = regression_dimension(count_series(spec, eps, "primitive")).slope
        b = regression_dimension(count_series(spec, eps, "grid")).slope
        diffs.append(abs(a - b))
    return CriterionResult(7, "counter cross-validation", max(diffs) <= 0.15,
                           f"max |primitive - grid| slope difference {max(diffs):.4f} over 6 nests")


CRITERIA = (criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7)


def run_all(stream=None) -> list[CriterionResult]:
    results = []
    for crit in CRITERIA:
        res = crit()
        results.append(res)
        if stream is not None:
            print(res.line(), file=stream, flush=True)
    return results
