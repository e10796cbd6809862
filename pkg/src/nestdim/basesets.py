"""Base sets on the unit interval / unit circle and their closed-form contents."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Union

import numpy as np

from .split import split_arrays

__all__ = [
    "Singleton", "EAlpha", "DBeta", "UniformCantor", "FullCircle", "CubeFace",
    "BaseSetSpec", "Interval", "base_dimension", "e_alpha_points", "d_beta_angles",
    "cantor_segments", "cantor_depth", "phi1", "gamma_coeff", "e_alpha_content",
    "cantor_minkowski_contents", "cube_sausage_volume",
]


@dataclass(frozen=True)
class Singleton:
    """The single point ``1`` (angle 0 on the circle)."""

    @property
    def delta(self) -> float:
        return 0.0


@dataclass(frozen=True)
class EAlpha:
    """The sequence ``{k**-alpha : k >= 1}``."""

    alpha: float

    def __post_init__(self):
        if not self.alpha > 0:
            raise ValueError(f"EAlpha needs alpha > 0, got {self.alpha}")

    @property
    def delta(self) -> float:
        return 1.0 / (1.0 + self.alpha)


@dataclass(frozen=True)
class DBeta:
    """Two mirrored copies of ``E_beta`` placed at angles ``pi/4 * (1 -+ x)``."""

    beta: float

    def __post_init__(self):
        if not self.beta > 0:
            raise ValueError(f"DBeta needs beta > 0, got {self.beta}")

    @property
    def delta(self) -> float:
        return 1.0 / (1.0 + self.beta)


@dataclass(frozen=True)
class UniformCantor:
    """Cantor set keeping ``N`` equally spaced pieces of relative length ``r``."""

    N: int
    r: float

    def __post_init__(self):
        if int(self.N) != self.N or self.N < 2:
            raise ValueError(f"UniformCantor needs an integer N >= 2, got {self.N}")
        if not 0 < self.r < 1.0 / self.N:
            raise ValueError(f"UniformCantor needs 0 < r < 1/N = {1 / self.N:g}, got r={self.r}")

    @property
    def delta(self) -> float:
        return -math.log(self.N) / math.log(self.r)

    @property
    def gap_ratio(self) -> float:
        """Length of one first-level gap relative to the parent interval."""
        return (1.0 - self.N * self.r) / (self.N - 1)


@dataclass(frozen=True)
class FullCircle:
    @property
    def delta(self) -> float:
        return 1.0


@dataclass(frozen=True)
class CubeFace:
    """Unit ``m``-cube; only its closed forms are used."""

    m: int

    def __post_init__(self):
        if int(self.m) != self.m or self.m < 0:
            raise ValueError(f"CubeFace needs an integer m >= 0, got {self.m}")

    @property
    def delta(self) -> float:
        return float(self.m)


BaseSetSpec = Union[Singleton, EAlpha, DBeta, UniformCantor, FullCircle, CubeFace]


class Interval(NamedTuple):
    lo: float
    hi: float

    @property
    def length(self) -> float:
        return self.hi - self.lo


def base_dimension(spec: BaseSetSpec) -> float:
    """Box-counting dimension of a base set."""
    return spec.delta


def e_alpha_points(alpha: float, eps: float) -> np.ndarray:
    """Resolution-``eps`` representation of ``E_alpha``, sorted descending.

    The isolated terms ``k**-alpha`` (``k <= m1``) are kept as they are and
    the unresolvable remainder is replaced by the core points ``2*k*eps``
    (``k <= m2``). A core point that would overshoot 1 (possible only when
    ``m1 == 0``) is clamped to 1.
    """
    if not eps > 0:
        raise ValueError(f"e_alpha_points needs eps > 0, got {eps}")
    m1, m2 = split_arrays(alpha, np.array([eps]))
    m1, m2 = int(m1[0]), int(m2[0])
    tail = np.arange(1, m1 + 1, dtype=float) ** -alpha
    core = np.minimum(2.0 * eps * np.arange(m2, 0, -1, dtype=float), 1.0)
    return np.concatenate([tail, core])


def d_beta_angles(beta: float, eps_rel: float) -> np.ndarray:
    """Angles of the resolution-``eps_rel`` representation of ``D_beta``, ascending."""
    x = e_alpha_points(beta, eps_rel)
    q = math.pi / 4
    return np.sort(np.concatenate([q * (1.0 - x), q * (1.0 + x)]))


def cantor_depth(N: int, r: float, min_len) -> np.ndarray:
    """Number of subdivision levels :func:`cantor_segments` performs, vectorised.

    The first subdivision of ``[0, 1]`` always happens; a level-``j``
    interval (length ``r**j``) is split further only while the gap it would
    create, ``r**j * (1 - N*r)/(N - 1)``, exceeds ``min_len``.
    """
    spec = UniformCantor(N, r)
    min_len = np.asarray(min_len, dtype=float)
    depth = np.ones(min_len.shape, dtype=np.int64)
    length = r
    while True:
        more = length * spec.gap_ratio > min_len
        if not more.any():
            return depth
        depth += more
        length *= r


def cantor_segments(N: int, r: float, min_len: float) -> list[Interval]:
    """Retained intervals of the uniform Cantor construction, ascending.

    Parameters
    ----------
    N, r : int, float
        ``N >= 2`` pieces of relative length ``0 < r < 1/N`` per level.
    min_len : float
        Stop subdividing once the gap the next level would open is
        ``<= min_len``. ``[0, 1]`` itself is always split once.
    """
    if not min_len > 0:
        raise ValueError(f"min_len must be positive, got {min_len}")
    spec = UniformCantor(N, r)
    depth = int(cantor_depth(N, r, min_len))
    # Left ends at depth D are sums of digits * step_j, step_j = r**(j-1) * (r + gap)
    lo = np.zeros(1)
    parent = 1.0
    for _ in range(depth):
        step = parent * (r + spec.gap_ratio)
        lo = (lo[:, None] + step * np.arange(N)[None, :]).ravel()
        parent *= r
    return [Interval(float(a), float(a + parent)) for a in lo]


def phi1(theta):
    """Map an angle to the unit circle, ``(cos theta, sin theta)``."""
    return np.cos(theta), np.sin(theta)


def gamma_coeff(x: float) -> float:
    """Volume of the unit ball in ``x`` dimensions, ``pi**(x/2) / Gamma(x/2 + 1)``."""
    if x < 0:
        raise ValueError(f"gamma_coeff needs x >= 0, got {x}")
    return math.pi ** (x / 2) / math.gamma(x / 2 + 1)


def e_alpha_content(alpha: float) -> float:
    """Normalised Minkowski content of ``E_alpha`` at its dimension."""
    if not alpha > 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    return (
        (2 / (alpha * math.sqrt(math.pi))) ** (alpha / (alpha + 1))
        * (alpha + 1)
        * math.gamma(alpha / (2 * (alpha + 1)) + 1)
    )


def cantor_minkowski_contents(N: int, r: float) -> tuple[float, float]:
    """Closed-form (upper, lower) normalised Minkowski contents of ``C_N^r``.

    The upper formula carries a length scale ``s``; it is taken to be the
    first-level gap ``(1 - N*r)/(N - 1)``.
    """
    spec = UniformCantor(N, r)
    d = spec.delta
    s = spec.gap_ratio
    g = gamma_coeff(1 - d)
    upper = 2 * N * (s / 2) ** d * (1 - r) / (1 - N * r) / g
    lower = 2 / (1 - d) * ((1 - d) / (2 * d)) ** d / g
    return upper, lower


def cube_sausage_volume(m: int, n: int, eps: float) -> float:
    """Volume of the ``eps``-sausage of the unit ``m``-cube in ``R**n``.

    >>> round(cube_sausage_volume(2, 2, 0.1), 6)
    1.431416
    """
    if not 0 <= m <= n:
        raise ValueError(f"cube_sausage_volume needs 0 <= m <= n, got m={m}, n={n}")
    total = gamma_coeff(n - m)
    for k in range(m):
        edges = 2 ** (m - k) * math.comb(m, k)
        total += gamma_coeff(n - k) * (eps / 2) ** (m - k) * edges
    return total * eps ** (n - m)
