import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from nestdim.basesets import DBeta, FullCircle, Singleton, UniformCantor
from nestdim.boxcount import (
    CountSeries, EstimateReport, epsilon_schedule, grid_count, regression_dimension,
    relative_error, sausage_measure_1d,
)
from nestdim.nests import NestSpec, Scene, generate_scene, primitive_count
from nestdim.split import ResourceLimitError


def dense_cells(radius, lo, hi, eps, per_cell=64):
    """Mesh cells met by an arc, sampled far more finely than grid_count does."""
    n = int(math.ceil(radius * (hi - lo) / (eps / per_cell))) + 1
    t = np.linspace(lo, hi, n)
    i = np.floor(radius * np.cos(t) / eps).astype(np.int64)
    j = np.floor(radius * np.sin(t) / eps).astype(np.int64)
    return set(zip(i.tolist(), j.tolist()))


def brute_sausage(items, eps, h):
    """Measure of the eps-neighbourhood by counting covered cells of width h."""
    lo = min(np.min(i) for i in items) - eps
    hi = max(np.max(i) for i in items) + eps
    x = np.arange(lo, hi, h) + h / 2
    covered = np.zeros_like(x, dtype=bool)
    for it in items:
        a, b = (it, it) if np.ndim(it) == 0 else it
        covered |= (x >= a - eps) & (x <= b + eps)
    return covered.sum() * h


class TestGridCount:
    @pytest.mark.parametrize("eps", [0.1, 1 / 64, 0.03, 2.0**-10])
    def test_unit_segment(self, eps):
        x = np.arange(0, 1, eps / 4)[1:]
        scene = Scene(eps, np.r_[x, 1.0], np.zeros(len(x) + 1))
        assert grid_count(scene, eps) in (math.ceil(1 / eps), math.ceil(1 / eps) + 1)

    @pytest.mark.parametrize("eps", [1.0, 0.1, 1e-6])
    def test_single_point(self, eps):
        assert grid_count(Scene(0.1, [0.5], [1.0]), eps) == 1

    def test_circle_against_dense_sampling(self):
        eps = 2.0**-8
        scene = Scene(eps, arc_radius=[1.0], arc_lo=[0.0], arc_hi=[2 * math.pi])
        count = grid_count(scene, eps)
        oracle = len(dense_cells(1.0, 0.0, 2 * math.pi, eps))
        assert 0.5 <= count / (2 * math.pi / eps) <= 2
        # eps/4 sampling misses cells the arc only clips at a corner (about 7% here)
        assert 0.90 * oracle <= count <= oracle

    def test_deterministic(self):
        scene = generate_scene(NestSpec("centre", 1.0, UniformCantor(3, 1 / 9)), 1e-3)
        assert grid_count(scene, 1e-3) == grid_count(scene, 1e-3)

    @pytest.mark.parametrize("spec", [
        NestSpec(k, 1.0, b) for k in ("centre", "outer")
        for b in (Singleton(), DBeta(1.0), UniformCantor(3, 1 / 9), FullCircle())
    ], ids=repr)
    def test_halving_at_most_ninefold(self, spec):
        scene = generate_scene(spec, 2.0**-8)
        for k in range(3, 12):
            coarse, fine = grid_count(scene, 2.0**-k), grid_count(scene, 2.0 ** -(k + 1))
            assert coarse <= fine <= 9 * coarse

    def test_resource_guard(self):
        scene = Scene(1e-3, arc_radius=[1.0], arc_lo=[0.0], arc_hi=[6.0])
        with pytest.raises(ResourceLimitError):
            grid_count(scene, 1e-3, cell_cap=1000)

    def test_rejects_empty_scene(self):
        with pytest.raises(ValueError):
            grid_count(Scene(0.1), 0.1)


class TestSausage:
    def test_single_point(self):
        assert sausage_measure_1d([0.3], 0.01) == pytest.approx(0.02)

    def test_two_points(self):
        assert sausage_measure_1d([0.0, 0.5], 0.1) == pytest.approx(0.4)
        assert sausage_measure_1d([0.0, 0.15], 0.1) == pytest.approx(0.35)

    def test_interval_and_empty(self):
        assert sausage_measure_1d([(0.0, 1.0)], 0.25) == pytest.approx(1.5)
        assert sausage_measure_1d([], 0.1) == 0.0

    def test_e1_against_content(self):
        from nestdim.basesets import e_alpha_content
        from nestdim.theory import normalized_content_ratio

        eps = 2.0**-20
        pts = np.arange(1, 2**11, dtype=float) ** -1.0
        # beyond k = 2**11 the gaps are below 2*eps: that stretch is one interval
        items = pts.tolist() + [(0.0, 2.0**-11)]
        ratio = normalized_content_ratio(sausage_measure_1d(items, eps), 1, 0.5, eps)
        assert ratio == pytest.approx(e_alpha_content(1.0), rel=0.05)

    @settings(max_examples=50, deadline=None)
    @given(pts=st.lists(st.floats(0, 1), min_size=1, max_size=12),
           ivs=st.lists(st.tuples(st.floats(0, 1), st.floats(0, 0.2)), max_size=5),
           eps=st.floats(0.005, 0.2))
    def test_against_brute_force(self, pts, ivs, eps):
        items = pts + [(a, a + w) for a, w in ivs]
        h = 1e-4
        assert sausage_measure_1d(items, eps) == pytest.approx(brute_sausage(items, eps, h),
                                                               abs=4 * h * len(items))

    @given(pts=st.lists(st.floats(-5, 5), min_size=1, max_size=30),
           e1=st.floats(1e-4, 1), e2=st.floats(1e-4, 1))
    def test_monotone_in_eps(self, pts, e1, e2):
        lo, hi = sorted((e1, e2))
        assert sausage_measure_1d(pts, lo) <= sausage_measure_1d(pts, hi) + 1e-12

    @given(a=st.lists(st.floats(-5, 5), min_size=1, max_size=20),
           b=st.lists(st.floats(-5, 5), min_size=1, max_size=20), eps=st.floats(1e-4, 1))
    def test_subadditive(self, a, b, eps):
        assert sausage_measure_1d(a + b, eps) <= (
            sausage_measure_1d(a, eps) + sausage_measure_1d(b, eps) + 1e-9)


class TestRegression:
    def test_segment_counts(self):
        eps = epsilon_schedule(2.0**-10, 2.0**-20, 11)
        r = regression_dimension(CountSeries(eps, [math.ceil(1 / e) for e in eps]))
        assert r.slope == pytest.approx(1.0, abs=0.01)

    def test_exact_power_law(self):
        eps = epsilon_schedule(0.1, 1e-6, 12)
        # integer rounding perturbs the power law slightly
        counts = [round(5 * e**-0.7) for e in eps]
        r = regression_dimension(CountSeries(eps, counts), theory=0.7)
        assert r.slope == pytest.approx(0.7, abs=1e-3)
        assert len(r.residuals) == len(eps)

    def test_exact_power_law_dyadic(self):
        eps = [2.0**-k for k in range(4, 16)]
        counts = [2 ** (3 * k) for k in range(4, 16)]  # count = eps**-3 exactly
        r = regression_dimension(CountSeries(eps, counts))
        assert r.slope == pytest.approx(3.0, abs=1e-10)
        assert max(abs(x) for x in r.residuals) < 1e-10
        assert r.theory_value is None and r.relative_error is None

    def test_singleton_nest(self):
        spec = NestSpec("centre", 1.0, Singleton())
        eps = epsilon_schedule(2.0**-10, 2.0**-25, 10)
        r = regression_dimension(CountSeries(eps, [primitive_count(spec, e) for e in eps]), 0.5)
        assert r.relative_error < 0.10
        assert r.relative_error == pytest.approx(abs(r.slope - 0.5) / 0.5)

    def test_needs_three_rows(self):
        with pytest.raises(ValueError):
            regression_dimension(CountSeries([0.1, 0.01], [10, 100]))


class TestCountSeries:
    def test_validation(self):
        with pytest.raises(ValueError):
            CountSeries([0.1, 0.1, 0.01], [1, 2, 3])
        with pytest.raises(ValueError):
            CountSeries([0.1, 0.01], [1, 0])
        with pytest.raises(ValueError):
            CountSeries([0.1, 0.01], [1])
        with pytest.raises(ValueError):
            CountSeries([0.1, 0.01], [1, 2], "rulers")

    def test_coerces(self):
        s = CountSeries(np.array([0.5, 0.25]), np.array([2, 4]), "grid")
        assert s.eps == (0.5, 0.25) and s.count == (2, 4) and len(s) == 2


class TestRelativeError:
    def test_values(self):
        assert relative_error(0.75, 0.75) == 0
        assert relative_error(0.82, 0.75) == pytest.approx(0.0933333, rel=1e-5)
        assert relative_error(0.68, 0.75) == relative_error(0.82, 0.75)

    def test_accepts_report(self):
        rep = EstimateReport(slope=0.5, intercept=0.0, residuals=())
        assert relative_error(rep, 0.4) == pytest.approx(0.25)

    def test_rejects_nonpositive_theory(self):
        with pytest.raises(ValueError):
            relative_error(0.5, 0.0)


class TestSchedule:
    def test_constant_ratio(self):
        e = epsilon_schedule(2.0**-10, 2.0**-25, 10)
        assert len(e) == 10 and e[0] == 2.0**-10 and e[-1] == 2.0**-25
        np.testing.assert_allclose(np.array(e[1:]) / e[:-1], 2.0 ** (-15 / 9), rtol=1e-12)

    def test_small(self):
        assert epsilon_schedule(1, 0.25, 3) == pytest.approx([1, 0.5, 0.25])

    @given(hi=st.floats(1e-6, 10), frac=st.floats(1e-6, 0.999), n=st.integers(3, 50))
    def test_endpoints_and_order(self, hi, frac, n):
        e = epsilon_schedule(hi, hi * frac, n)
        assert e[0] == hi and e[-1] == hi * frac
        assert all(a > b for a, b in zip(e, e[1:]))

    @pytest.mark.parametrize("args", [(0.1, 0.1, 5), (0.1, 0.2, 5), (0.1, 0.01, 2), (0.1, 0, 5)])
    def test_rejects(self, args):
        with pytest.raises(ValueError):
            epsilon_schedule(*args)
