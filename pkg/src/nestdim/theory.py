"""Closed-form box-counting dimensions of nests and parameter synthesis."""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .basesets import UniformCantor, gamma_coeff
from .nests import Kind

__all__ = [
    "Regime", "DimensionResult", "SynthesisedParams", "ParameterRangeError",
    "nest_dimension", "bifractal_dimension", "cantor_nest_dimension",
    "hypersphere_nest_dimension", "solve_parameters", "centered_alpha",
    "alpha_interval", "normalized_content_ratio",
]

# alpha*delta within this relative distance of 1 counts as the critical point
CRITICAL_RTOL = 1e-12


class Regime(str, Enum):
    TAIL_DOMINANT = "tail-dominant"
    CORE_DOMINANT = "core-dominant"
    CRITICAL = "critical"
    OUTER = "outer"


@dataclass(frozen=True)
class DimensionResult:
    value: float
    nondegenerate: bool
    regime: Regime


@dataclass(frozen=True)
class SynthesisedParams:
    d: float
    alpha: float
    delta: float
    beta: float
    r: float
    N: int


class ParameterRangeError(ValueError):
    """alpha lies outside the open interval where it controls the nest dimension."""


def nest_dimension(kind, alpha: float, delta: float) -> DimensionResult:
    """Box dimension of a nest over a base of dimension ``delta`` in ``[0, 1]``.

    Centre nests have ``(delta+1)/(alpha+1)`` while ``alpha*delta < 1`` and
    ``delta`` otherwise, with Minkowski degeneracy exactly at
    ``alpha*delta == 1``. Outer nests have ``delta + 1/(alpha+1)``.
    """
    kind = Kind(kind)
    if not alpha > 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    if not 0.0 <= delta <= 1.0:
        raise ValueError(f"base dimension must lie in [0, 1] for planar nests, got {delta}")
    if kind is Kind.OUTER:
        return DimensionResult(delta + 1.0 / (alpha + 1.0), True, Regime.OUTER)
    ad = alpha * delta
    if math.isclose(ad, 1.0, rel_tol=CRITICAL_RTOL):
        return DimensionResult(delta, False, Regime.CRITICAL)
    if ad < 1.0:
        return DimensionResult((delta + 1.0) / (alpha + 1.0), True, Regime.CORE_DOMINANT)
    return DimensionResult(delta, True, Regime.TAIL_DOMINANT)


def bifractal_dimension(alpha: float, beta: float) -> float:
    """Dimension of the centre nest over ``D_beta`` when ``alpha/(1+beta) < 1``."""
    return (beta + 2.0) / ((beta + 1.0) * (alpha + 1.0))


def cantor_nest_dimension(kind, alpha: float, N: int, r: float) -> float:
    kind = Kind(kind)
    log_r_n = math.log(N) / math.log(UniformCantor(N, r).r)
    if kind is Kind.CENTRE:
        return (1.0 - log_r_n) / (1.0 + alpha)
    return 1.0 / (1.0 + alpha) - log_r_n


def hypersphere_nest_dimension(n: int, alpha: float, kind) -> float:
    """Dimension of nests of full ``(n-1)``-spheres in ``R**n``."""
    if n < 2:
        raise ValueError(f"ambient dimension must be >= 2, got {n}")
    if Kind(kind) is Kind.CENTRE:
        return max(n - 1.0, n / (alpha + 1.0))
    return n - alpha / (alpha + 1.0)


def alpha_interval(d: float) -> tuple[float, float]:
    """Open interval of exponents for which a centre nest of dimension ``d`` exists
    with ``alpha * delta < 1``."""
    return 1.0 / d - 1.0, 1.0 / d


def solve_parameters(d: float, alpha: float, N: int = 3, *, strict: bool = True) -> SynthesisedParams:
    """Base-set parameters giving a centre nest of total dimension ``d``.

    Returns ``delta = d*alpha + d - 1``, ``beta = 1/delta - 1`` and
    ``r = N**(-1/delta)``.

    Parameters
    ----------
    d : float
        Target dimension in ``(0, 1]``.
    alpha : float
        Nest exponent; must lie strictly inside ``(1/d - 1, 1/d)``.
    N : int
        Number of pieces for the Cantor family.
    strict : bool
        With ``strict=False`` exponents at or above ``1/d`` are accepted and
        the base dimension is set to ``d`` itself (the tail-dominant branch,
        including the degenerate point ``alpha = 1/d``).

    Raises
    ------
    ParameterRangeError
        If ``alpha`` is outside the admissible interval.
    """
    if not 0 < d <= 1:
        raise ValueError(f"target dimension must lie in (0, 1], got {d}")
    if int(N) != N or N < 2:
        raise ValueError(f"N must be an integer >= 2, got {N}")
    lo, hi = alpha_interval(d)
    inside = lo < alpha < hi
    delta = d * alpha + d - 1.0 if inside else d
    # delta > 0 also catches alpha a rounding error above the lower end
    if not (inside and delta > 0) and not (not strict and alpha >= hi):
        raise ParameterRangeError(
            f"alpha={alpha:g} must lie in the open interval ({lo:g}, {hi:g}) "
            f"so that alpha*delta < 1 (the admissible exponent interval for d={d:g})"
        )
    if delta >= 1.0:
        raise ParameterRangeError(
            f"d={d:g}, alpha={alpha:g} needs a base of dimension {delta:g} >= 1"
        )
    r = float(N) ** (-1.0 / delta)
    if r == 0.0:
        raise ParameterRangeError(
            f"d={d:g}, alpha={alpha:g} gives delta={delta:g}; r = N**(-1/delta) underflows"
        )
    return SynthesisedParams(
        d=d, alpha=alpha, delta=delta, beta=1.0 / delta - 1.0, r=r, N=int(N),
    )


def centered_alpha(d: float) -> float:
    """Exponent in the middle of the admissible interval, ``1/d - 1/2``."""
    if not 0 < d <= 1:
        raise ValueError(f"target dimension must lie in (0, 1], got {d}")
    return 1.0 / d - 0.5


def normalized_content_ratio(sausage_volume: float, n: int, delta: float, eps: float) -> float:
    """Sausage volume divided by ``gamma_{n-delta} * eps**(n-delta)``."""
    if not 0 <= delta <= n:
        raise ValueError(f"need 0 <= delta <= n, got delta={delta}, n={n}")
    if not eps > 0:
        raise ValueError(f"eps must be positive, got {eps}")
    return sausage_volume / (gamma_coeff(n - delta) * eps ** (n - delta))
