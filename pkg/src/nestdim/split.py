"""Tail/core index splitting for sequences of the form ``k**-alpha``.

For a resolution ``eps`` the first ``m1`` terms of ``k**-alpha`` are more than
``2*eps`` apart from their successor (the isolated *tail*); everything after
them is replaced by ``m2`` points spaced exactly ``2*eps`` apart (the *core*).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# Largest index we accept; above this float64 can no longer tell k from k+1.
MAX_INDEX = 2**52
# Relative slack for ">=" so exact ties (alpha=1, eps=1/40) resolve as in exact arithmetic.
TIE_RTOL = 1e-12


class ResourceLimitError(RuntimeError):
    """Raised when a requested resolution needs more indices/cells than allowed."""


@dataclass(frozen=True)
class SplitIndices:
    m1: int
    m2: int
    eps: float
    alpha: float

    def check(self) -> bool:
        """Return True if both defining inequality chains hold (ties up to ``TIE_RTOL``)."""
        a, e, m1, m2 = self.alpha, self.eps, self.m1, self.m2
        lo = 2 * e * (1 - TIE_RTOL)
        if m1 == 0:
            return 2 * m2 * e >= 1.0 * (1 - TIE_RTOL) and 1.0 - 2.0**-a < lo
        lower = (m1 + 1) ** -a - (m1 + 2) ** -a < lo and lo <= m1**-a - (m1 + 1) ** -a
        core = (m1 + 1) ** -a * (1 - TIE_RTOL) <= 2 * m2 * e <= m1**-a * (1 + TIE_RTOL)
        return lower and core


def _gap(m, alpha):
    # m**-a - (m+1)**-a, evaluated exactly as the defining inequality is written
    return m ** (-alpha) - (m + 1.0) ** (-alpha)


def split_arrays(alpha: float, eps) -> tuple[np.ndarray, np.ndarray]:
    """Vectorised ``(m1, m2)`` for an array of resolutions at a fixed exponent.

    Parameters
    ----------
    alpha : float
        Positive exponent of the sequence ``k**-alpha``.
    eps : array_like
        Positive resolutions.

    Returns
    -------
    m1, m2 : ndarray of int64
    """
    if alpha <= 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    eps = np.asarray(eps, dtype=float)
    if np.any(~(eps > 0)):
        raise ValueError("eps must be positive")
    two_eps = 2.0 * eps
    bar = two_eps * (1 - TIE_RTOL)
    # gap(m) ~ alpha * m**-(alpha+1), so m1 sits just below this estimate
    est = (alpha / two_eps) ** (1.0 / (alpha + 1.0))
    if np.any(est > MAX_INDEX):
        raise ResourceLimitError(
            f"eps={float(eps.min()):g} needs more than 2**52 nest indices at alpha={alpha}"
        )
    m = np.maximum(np.floor(est), 1.0)
    # Walk to the exact boundary; converges in a couple of steps.
    for _ in range(64):
        up = _gap(m + 1.0, alpha) >= bar
        down = (m >= 1.0) & (_gap(np.maximum(m, 1.0), alpha) < bar)
        if not (up.any() or down.any()):
            break
        m = m + up - down
    m1 = m.astype(np.int64)

    top = np.where(m1 > 0, (m1 + 1.0) ** (-alpha), 1.0)
    m2 = np.ceil(top / two_eps)
    # ceil() of a rounded quotient can overshoot by one
    over = (m2 > 1) & (2 * (m2 - 1) * eps >= top * (1 - TIE_RTOL))
    m2 = m2 - over
    under = 2 * m2 * eps < top * (1 - TIE_RTOL)
    m2 = m2 + under
    return m1, m2.astype(np.int64)


def split_indices(alpha: float, eps: float) -> SplitIndices:
    """Tail length ``m1`` and core length ``m2`` of ``k**-alpha`` at resolution ``eps``.

    ``m1`` is the largest ``m >= 1`` with ``m**-alpha - (m+1)**-alpha >= 2*eps``
    (0 when even the first gap is smaller), and
    ``m2 = ceil((m1+1)**-alpha / (2*eps))``, reading ``(m1+1)**-alpha`` as 1
    when ``m1 == 0``.

    >>> split_indices(1.0, 1 / 40)
    SplitIndices(m1=4, m2=4, eps=0.025, alpha=1.0)
    """
    m1, m2 = split_arrays(alpha, np.array([eps]))
    return SplitIndices(int(m1[0]), int(m2[0]), float(eps), float(alpha))
