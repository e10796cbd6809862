"""Resolution-eps geometry of centre and outer fractal nests in the plane."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, NamedTuple

import numpy as np

from .basesets import (
    BaseSetSpec, CubeFace, DBeta, EAlpha, FullCircle, Singleton, UniformCantor,
    cantor_depth, cantor_segments, d_beta_angles, e_alpha_points,
)
from .split import ResourceLimitError, SplitIndices, split_arrays, split_indices

__all__ = [
    "Kind", "NestSpec", "Point", "Arc", "Scene", "SplitIndices", "ResourceLimitError",
    "split_indices", "ring_radii", "generate_scene", "primitive_count", "scene_weight",
    "UnsupportedBaseError",
]

QUARTER = math.pi / 2


class Kind(str, Enum):
    CENTRE = "centre"
    OUTER = "outer"


class UnsupportedBaseError(ValueError):
    """The base set has closed forms only and cannot be drawn."""


@dataclass(frozen=True)
class NestSpec:
    kind: Kind
    alpha: float
    base: BaseSetSpec

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        if not self.alpha > 0:
            raise ValueError(f"nest exponent alpha must be positive, got {self.alpha}")


class Point(NamedTuple):
    ring_radius: float
    angle: float


class Arc(NamedTuple):
    ring_radius: float
    angle_lo: float
    angle_hi: float

    @property
    def length(self) -> float:
        return self.ring_radius * (self.angle_hi - self.angle_lo)


def _frozen(a) -> np.ndarray:
    a = np.array(a, dtype=float)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class Scene:
    """Flat collection of drawing primitives on concentric rings.

    Points and arcs are stored column-wise; iterating yields
    :class:`Point` then :class:`Arc` tuples.
    """

    eps: float
    point_radius: np.ndarray = field(default_factory=lambda: _frozen([]))
    point_angle: np.ndarray = field(default_factory=lambda: _frozen([]))
    arc_radius: np.ndarray = field(default_factory=lambda: _frozen([]))
    arc_lo: np.ndarray = field(default_factory=lambda: _frozen([]))
    arc_hi: np.ndarray = field(default_factory=lambda: _frozen([]))

    def __post_init__(self):
        for name in ("point_radius", "point_angle", "arc_radius", "arc_lo", "arc_hi"):
            object.__setattr__(self, name, _frozen(getattr(self, name)))
        if len(self.point_radius) != len(self.point_angle):
            raise ValueError("point columns differ in length")
        if not len(self.arc_radius) == len(self.arc_lo) == len(self.arc_hi):
            raise ValueError("arc columns differ in length")
        if np.any(self.point_radius <= 0) or np.any(self.arc_radius <= 0):
            raise ValueError("ring radii must be positive")
        if np.any(self.arc_lo >= self.arc_hi):
            raise ValueError("arcs need angle_lo < angle_hi")

    def __len__(self) -> int:
        return len(self.point_radius) + len(self.arc_radius)

    def __iter__(self) -> Iterator[Point | Arc]:
        for p in zip(self.point_radius.tolist(), self.point_angle.tolist()):
            yield Point(*p)
        for a in zip(self.arc_radius.tolist(), self.arc_lo.tolist(), self.arc_hi.tolist()):
            yield Arc(*a)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Scene):
            return NotImplemented
        return self.eps == other.eps and all(
            np.array_equal(getattr(self, f), getattr(other, f))
            for f in ("point_radius", "point_angle", "arc_radius", "arc_lo", "arc_hi")
        )

    @property
    def points(self) -> list[Point]:
        return [Point(*p) for p in zip(self.point_radius.tolist(), self.point_angle.tolist())]

    @property
    def arcs(self) -> list[Arc]:
        return [Arc(*a) for a in zip(self.arc_radius.tolist(), self.arc_lo.tolist(),
                                     self.arc_hi.tolist())]


def _check_eps(eps: float) -> None:
    if not 0 < eps < 0.25:
        raise ValueError(f"nest resolution must satisfy 0 < eps < 1/4, got {eps}")


def ring_radii(spec: NestSpec, eps: float) -> tuple[np.ndarray, np.ndarray]:
    """Tail and core ring radii of a nest at resolution ``eps``.

    Centre nests use ``k**-alpha`` for the tail and ``2*k*eps`` for the core;
    outer nests use ``1 - k**-alpha`` and ``1 - 2*k*eps``, dropping
    nonpositive radii.
    """
    _check_eps(eps)
    s = split_indices(spec.alpha, eps)
    k1 = np.arange(1, s.m1 + 1, dtype=float)
    k2 = np.arange(1, s.m2 + 1, dtype=float)
    if spec.kind is Kind.CENTRE:
        return k1**-spec.alpha, np.minimum(2.0 * eps * k2, 1.0)
    tail = 1.0 - k1**-spec.alpha
    core = 1.0 - 2.0 * eps * k2
    return tail[tail > 0], core[core > 0]


def _all_radii(spec: NestSpec, eps: float) -> np.ndarray:
    tail, core = ring_radii(spec, eps)
    return np.concatenate([tail, core])


def scene_weight(length, eps: float):
    """Number of eps-scale drawing points an arc of the given length needs."""
    return np.maximum(np.ceil(np.asarray(length) / (2.0 * eps)), 1.0)


def _resolution(base: BaseSetSpec, rho, eps: float):
    """Per-ring resolution on the base set's own parameter scale."""
    if isinstance(base, DBeta):
        return 4.0 * eps / (math.pi * rho)
    if isinstance(base, UniformCantor):
        # gap of 2*eps along an arc of radius rho, on [0,1] mapped to a quarter circle
        return 2.0 * eps / rho * (2.0 / math.pi)
    if isinstance(base, EAlpha):
        return eps / rho
    return None


def _check_base(base: BaseSetSpec) -> None:
    if isinstance(base, CubeFace):
        raise UnsupportedBaseError(
            f"CubeFace(m={base.m}) has closed forms only; it cannot be drawn on a ring"
        )


def generate_scene(spec: NestSpec, eps: float) -> Scene:
    """Drawing primitives of a nest at resolution ``eps``.

    Every ring carries a copy of the base set drawn at a resolution scaled by
    the ring radius, so small rings get coarser copies.
    """
    _check_base(spec.base)
    base = spec.base
    rho = _all_radii(spec, eps)
    pr, pa, ar, alo, ahi = [], [], [], [], []
    if isinstance(base, Singleton):
        pr, pa = [rho], [np.zeros_like(rho)]
    elif isinstance(base, (DBeta, EAlpha)):
        rel = _resolution(base, rho, eps)
        for ring, e in zip(rho.tolist(), rel.tolist()):
            if isinstance(base, DBeta):
                angles = d_beta_angles(base.beta, e)
            else:
                angles = e_alpha_points(base.alpha, e)[::-1]
            pr.append(np.full(len(angles), ring))
            pa.append(angles)
    elif isinstance(base, UniformCantor):
        rel = _resolution(base, rho, eps)
        for ring, e in zip(rho.tolist(), rel.tolist()):
            segs = np.array(cantor_segments(base.N, base.r, e))
            ar.append(np.full(len(segs), ring))
            alo.append(QUARTER * segs[:, 0])
            ahi.append(QUARTER * segs[:, 1])
    elif isinstance(base, FullCircle):
        ar, alo, ahi = [rho], [np.zeros_like(rho)], [np.full_like(rho, 2 * math.pi)]
    else:  # pragma: no cover - union is closed
        raise TypeError(f"unknown base set {base!r}")

    def cat(parts):
        return np.concatenate(parts) if parts else np.zeros(0)

    return Scene(eps, cat(pr), cat(pa), cat(ar), cat(alo), cat(ahi))


def scene_count(scene: Scene) -> int:
    """Weighted primitive count of an already generated scene."""
    lengths = scene.arc_radius * (scene.arc_hi - scene.arc_lo)
    return int(len(scene.point_radius) + scene_weight(lengths, scene.eps).sum())


def primitive_count(spec: NestSpec, eps: float) -> int:
    """Number of eps-scale primitives needed to draw the nest.

    Points count once; an arc counts ``ceil(length / (2*eps))``. The count is
    evaluated ring by ring in closed form, so it matches
    ``scene_count(generate_scene(spec, eps))`` without building the scene.
    """
    _check_base(spec.base)
    base = spec.base
    rho = _all_radii(spec, eps)
    if isinstance(base, Singleton):
        return int(len(rho))
    if isinstance(base, (DBeta, EAlpha)):
        param = base.beta if isinstance(base, DBeta) else base.alpha
        m1, m2 = split_arrays(param, _resolution(base, rho, eps))
        branches = 2 if isinstance(base, DBeta) else 1
        return int(branches * (m1 + m2).sum())
    if isinstance(base, UniformCantor):
        depth = cantor_depth(base.N, base.r, _resolution(base, rho, eps))
        # segment lengths multiplied out exactly as the recursive construction does
        top = int(depth.max(initial=0))
        seg = np.cumprod(np.concatenate([[1.0], np.full(top, base.r)]))[depth]
        pieces = float(base.N) ** depth
        w = scene_weight(rho * (QUARTER * seg), eps)
        return int((pieces * w).sum())
    if isinstance(base, FullCircle):
        return int(scene_weight(rho * 2 * math.pi, eps).sum())
    raise TypeError(f"unknown base set {base!r}")  # pragma: no cover

