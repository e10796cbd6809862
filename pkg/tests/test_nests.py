import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from nestdim.basesets import (
    CubeFace, DBeta, EAlpha, FullCircle, Singleton, UniformCantor, cantor_segments,
)
from nestdim.nests import (
    Arc, Kind, NestSpec, Point, Scene, UnsupportedBaseError, generate_scene, primitive_count,
    ring_radii, scene_count, split_indices,
)
from nestdim.split import split_arrays

CORPUS = [
    NestSpec(kind, alpha, base)
    for kind in (Kind.CENTRE, Kind.OUTER)
    for alpha in (0.5, 1.0, 2.5)
    for base in (Singleton(), EAlpha(1.5), DBeta(1.0), DBeta(0.4), UniformCantor(3, 1 / 9),
                 UniformCantor(2, 0.3), FullCircle())
]


def test_ring_radii_worked_example():
    tail, core = ring_radii(NestSpec("centre", 1.0, Singleton()), 1 / 40)
    np.testing.assert_allclose(tail, [1, 1 / 2, 1 / 3, 1 / 4], rtol=0, atol=1e-15)
    np.testing.assert_allclose(core, [1 / 20, 2 / 20, 3 / 20, 4 / 20], rtol=0, atol=1e-15)


def test_outer_drops_degenerate_ring():
    for alpha in (0.3, 1.0, 4.0):
        tail, core = ring_radii(NestSpec("outer", alpha, Singleton()), 1e-3)
        assert split_indices(alpha, 1e-3).m1 == len(tail) + 1
        assert np.all(tail > 0) and np.all(np.diff(tail) > 0)
        assert np.all((core > 0) & (core <= 1))


@pytest.mark.parametrize("alpha", [0.3, 1.0, 2.0, 5.0])
@pytest.mark.parametrize("eps", [0.2, 1 / 40, 1e-3, 1e-6])
def test_centre_radii_layout(alpha, eps):
    tail, core = ring_radii(NestSpec("centre", alpha, Singleton()), eps)
    both = np.concatenate([tail, core])
    assert np.all((both > 0) & (both <= 1))
    assert np.all(np.diff(tail) < 0)
    if len(tail):
        # core cap sits below the tail floor (they may touch at m1**-alpha)
        assert core.max() <= tail.min() * (1 + 1e-12)
        # consecutive core radii step by exactly 2*eps: the annulus is covered
        np.testing.assert_allclose(np.diff(core), 2 * eps, rtol=1e-9)
        assert core[-1] >= (len(tail) + 1.0) ** -alpha * (1 - 1e-12)


def test_ring_radii_rejects_coarse_eps():
    with pytest.raises(ValueError):
        ring_radii(NestSpec("centre", 1.0, Singleton()), 0.25)


def test_singleton_scene_worked_example():
    scene = generate_scene(NestSpec("centre", 1.0, Singleton()), 1 / 40)
    assert len(scene) == 8 and not scene.arcs
    assert all(isinstance(p, Point) and p.angle == 0 for p in scene)
    np.testing.assert_allclose(sorted(p.ring_radius for p in scene),
                               sorted([1, 1 / 2, 1 / 3, 1 / 4, 0.05, 0.1, 0.15, 0.2]), atol=1e-15)


@pytest.mark.parametrize("alpha, eps", [(1.0, 1 / 40), (0.5, 1e-3), (3.0, 1e-4)])
def test_full_circle_one_arc_per_ring(alpha, eps):
    s = split_indices(alpha, eps)
    scene = generate_scene(NestSpec("centre", alpha, FullCircle()), eps)
    assert len(scene.arcs) == s.m1 + s.m2 and not scene.points
    assert all(a.angle_lo == 0 and a.angle_hi == 2 * math.pi for a in scene.arcs)


def test_dbeta_count_formula():
    eps = 1 / 40
    spec = NestSpec("centre", 1.0, DBeta(1.0))
    tail, core = ring_radii(spec, eps)
    rho = np.concatenate([tail, core])
    m1, m2 = split_arrays(1.0, 4 * eps / (math.pi * rho))
    expected = int((2 * (m1 + m2)).sum())
    assert len(generate_scene(spec, eps)) == expected
    assert primitive_count(spec, eps) == expected


def test_singleton_count_is_m1_plus_m2():
    for eps in (0.1, 1e-3, 2.0**-20):
        s = split_indices(0.7, eps)
        assert primitive_count(NestSpec("centre", 0.7, Singleton()), eps) == s.m1 + s.m2


@pytest.mark.parametrize("spec", CORPUS, ids=repr)
def test_closed_form_count_matches_scene(spec):
    for eps in (0.2, 1 / 40, 2.0**-9):
        assert primitive_count(spec, eps) == scene_count(generate_scene(spec, eps))


@pytest.mark.parametrize("spec", CORPUS, ids=repr)
def test_doubling_eps_never_increases_count(spec):
    counts = [primitive_count(spec, 2.0**-k) for k in range(3, 21)]
    assert all(a <= b for a, b in zip(counts, counts[1:]))


def test_full_circle_regression_close_to_one():
    from nestdim.boxcount import CountSeries, epsilon_schedule, regression_dimension

    spec = NestSpec("centre", 1.0, FullCircle())
    eps = epsilon_schedule(2.0**-10, 2.0**-20, 10)
    slope = regression_dimension(CountSeries(eps, [primitive_count(spec, e) for e in eps])).slope
    assert abs(slope - 1) < 0.1


def test_scene_is_deterministic():
    spec = NestSpec("centre", 0.8, UniformCantor(3, 0.2))
    a, b = generate_scene(spec, 1e-3), generate_scene(spec, 1e-3)
    assert a == b
    assert list(a) == list(b)


@pytest.mark.parametrize("eps", [1 / 40, 1e-3])
def test_cantor_ring_is_scaled_base(eps):
    base = UniformCantor(3, 1 / 9)
    scene = generate_scene(NestSpec("centre", 1.0, base), eps)
    for rho in np.unique(scene.arc_radius):
        on_ring = scene.arc_radius == rho
        segs = np.array(cantor_segments(3, 1 / 9, (4 / math.pi) * eps / rho))
        np.testing.assert_array_equal(scene.arc_lo[on_ring], math.pi / 2 * segs[:, 0])
        np.testing.assert_array_equal(scene.arc_hi[on_ring], math.pi / 2 * segs[:, 1])


def test_smaller_rings_get_coarser_copies():
    scene = generate_scene(NestSpec("centre", 1.0, UniformCantor(2, 1 / 3)), 1e-4)
    radii, per_ring = np.unique(scene.arc_radius, return_counts=True)
    assert np.all(np.diff(per_ring) >= 0)


def test_cube_face_is_theory_only():
    with pytest.raises(UnsupportedBaseError):
        generate_scene(NestSpec("centre", 1.0, CubeFace(2)), 0.1)
    with pytest.raises(UnsupportedBaseError):
        primitive_count(NestSpec("centre", 1.0, CubeFace(2)), 0.1)


class TestScene:
    def test_arrays_are_read_only(self):
        scene = generate_scene(NestSpec("centre", 1.0, Singleton()), 0.1)
        with pytest.raises(ValueError):
            scene.point_radius[0] = 2.0

    def test_validation(self):
        with pytest.raises(ValueError):
            Scene(0.1, point_radius=[0.0], point_angle=[0.0])
        with pytest.raises(ValueError):
            Scene(0.1, arc_radius=[1.0], arc_lo=[1.0], arc_hi=[0.5])
        with pytest.raises(ValueError):
            Scene(0.1, point_radius=[1.0, 0.5], point_angle=[0.0])

    def test_iteration_order(self):
        scene = Scene(0.1, [0.5], [0.0], [1.0], [0.0], [1.0])
        assert list(scene) == [Point(0.5, 0.0), Arc(1.0, 0.0, 1.0)]
        assert scene.arcs[0].length == 1.0


def test_spec_validation():
    with pytest.raises(ValueError):
        NestSpec("sideways", 1.0, Singleton())
    with pytest.raises(ValueError):
        NestSpec("centre", 0.0, Singleton())


@settings(max_examples=40, deadline=None)
@given(alpha=st.floats(0.2, 4.0), beta=st.floats(0.2, 4.0), log_eps=st.floats(-12, -2))
def test_dbeta_points_stay_on_quarter_circle(alpha, beta, log_eps):
    scene = generate_scene(NestSpec("centre", alpha, DBeta(beta)), math.exp(log_eps))
    assert np.all((scene.point_angle >= 0) & (scene.point_angle <= math.pi / 2 + 1e-12))
    assert np.all((scene.point_radius > 0) & (scene.point_radius <= 1))
