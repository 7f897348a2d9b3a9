import math

import numpy as np
import pytest
import scipy.special as sp

from circwin import WindowSpec, evaluate, profile, sample

ALL_SPECS = [
    WindowSpec("rectangular", 2.0),
    WindowSpec("generalized_cosine", 2.0, alpha=0.5),
    WindowSpec("generalized_cosine", 2.0, alpha=0.54),
    WindowSpec("cosine_tip", 2.0),
    WindowSpec("kaiser", 2.0, beta=5.0),
    WindowSpec("von_mises", 2.0, beta=5.0),
]


class TestSpecValidation:
    def test_unknown_family(self):
        with pytest.raises(ValueError):
            WindowSpec("blackman", 2.0)

    def test_length_positive(self):
        with pytest.raises(ValueError):
            WindowSpec("rectangular", 0.0)
        with pytest.raises(ValueError):
            WindowSpec("rectangular", -1.0)

    def test_alpha_gating(self):
        with pytest.raises(ValueError):
            WindowSpec("generalized_cosine", 2.0)  # missing alpha
        with pytest.raises(ValueError):
            WindowSpec("generalized_cosine", 2.0, alpha=1.2)
        with pytest.raises(ValueError):
            WindowSpec("rectangular", 2.0, alpha=0.5)

    def test_beta_gating(self):
        with pytest.raises(ValueError):
            WindowSpec("kaiser", 2.0)  # missing beta
        with pytest.raises(ValueError):
            WindowSpec("von_mises", 2.0, beta=-1.0)
        with pytest.raises(ValueError):
            WindowSpec("cosine_tip", 2.0, beta=3.0)

    def test_alignment(self):
        with pytest.raises(ValueError):
            WindowSpec("rectangular", 2.0, "sideways")

    def test_support(self):
        assert WindowSpec("rectangular", 4.0).support() == (-2.0, 2.0)
        assert WindowSpec("rectangular", 4.0, "causal").support() == (0.0, 4.0)


class TestEvaluate:
    def test_von_mises_peak(self):
        for beta in (0.0, 1.0, 7.3):
            assert evaluate(WindowSpec("von_mises", 2.0, beta=beta), 0.0) == 1.0

    def test_von_mises_edge(self):
        spec = WindowSpec("von_mises", 2.0, beta=5.0)
        assert evaluate(spec, 1.0) == pytest.approx(math.exp(-5.0), rel=1e-15)

    def test_hann_endpoint(self):
        spec = WindowSpec("generalized_cosine", 2.0, alpha=0.5)
        assert evaluate(spec, 1.0) == pytest.approx(0.0, abs=1e-16)

    def test_hamming_peak(self):
        spec = WindowSpec("generalized_cosine", 2.0, alpha=0.54)
        assert evaluate(spec, 0.0) == 1.0

    def test_kaiser_edge(self):
        spec = WindowSpec("kaiser", 2.0, beta=5.0)
        assert evaluate(spec, 1.0) == pytest.approx(1.0 / sp.i0(5.0), rel=1e-13)

    def test_cosine_tip_edge(self):
        spec = WindowSpec("cosine_tip", 2.0)
        assert evaluate(spec, 1.0) == pytest.approx(-1.0, rel=1e-15)

    def test_outside_support_is_zero(self):
        for spec in ALL_SPECS:
            assert evaluate(spec, 1.0001) == 0.0
            assert evaluate(spec, -73.0) == 0.0

    def test_kaiser_matches_scipy_profile(self):
        spec = WindowSpec("kaiser", 2.0, beta=5.0)
        ts = np.linspace(-1.0, 1.0, 11)
        ref = sp.i0(5.0 * np.sqrt(1.0 - ts**2)) / sp.i0(5.0)
        assert np.max(np.abs(profile(spec, ts) - ref)) < 1e-13

    def test_rejects_nonfinite(self):
        with pytest.raises(ValueError):
            evaluate(WindowSpec("rectangular", 2.0), math.nan)


class TestProperties:
    @pytest.mark.parametrize("spec", ALL_SPECS, ids=lambda s: s.family + str(s.shape_param))
    def test_centered_symmetry(self, spec):
        ts = np.linspace(0.0, 1.5, 301)
        assert np.array_equal(profile(spec, ts), profile(spec, -ts))

    @pytest.mark.parametrize("spec", ALL_SPECS, ids=lambda s: s.family + str(s.shape_param))
    def test_causal_is_shifted_centered(self, spec):
        import dataclasses

        causal = dataclasses.replace(spec, alignment="causal")
        ts = np.linspace(-1.0, 3.0, 401)
        assert np.array_equal(profile(causal, ts), profile(spec, ts - spec.length / 2))

    @pytest.mark.parametrize("spec", ALL_SPECS, ids=lambda s: s.family + str(s.shape_param))
    def test_peak_normalisation(self, spec):
        assert evaluate(spec, 0.0) == 1.0

    def test_von_mises_beta_zero_is_rectangular(self):
        vm = WindowSpec("von_mises", 2.0, beta=0.0)
        box = WindowSpec("rectangular", 2.0)
        ts = np.linspace(-1.5, 1.5, 601)
        assert np.array_equal(profile(vm, ts), profile(box, ts))

    def test_von_mises_monotone_decay(self):
        spec = WindowSpec("von_mises", 2.0, beta=3.0)
        ts = np.linspace(1e-3, 1.0, 200)
        vals = profile(spec, ts)
        assert np.all(np.diff(vals) < 0)

    def test_von_mises_range(self):
        for beta in (0.5, 2.0, 8.0):
            spec = WindowSpec("von_mises", 2.0, beta=beta)
            vals = profile(spec, np.linspace(-1.0, 1.0, 501))
            assert np.all(vals >= math.exp(-beta) - 1e-15)
            assert np.all(vals <= 1.0)


class TestSample:
    def test_rectangular_grid(self):
        table = sample(WindowSpec("rectangular", 2.0), 3)
        assert np.array_equal(table.times, [-1.0, 0.0, 1.0])
        assert np.array_equal(table.values, [1.0, 1.0, 1.0])

    def test_von_mises_endpoints(self):
        table = sample(WindowSpec("von_mises", 2.0, beta=1.0), 3)
        assert table.values[0] == pytest.approx(math.exp(-1.0), rel=1e-15)
        assert table.values[1] == 1.0
        assert table.values[2] == pytest.approx(math.exp(-1.0), rel=1e-15)

    def test_kaiser_beta_zero_flat(self):
        table = sample(WindowSpec("kaiser", 2.0, beta=0.0), 5)
        assert np.array_equal(table.values, np.ones(5))

    def test_causal_support(self):
        table = sample(WindowSpec("rectangular", 4.0, "causal"), 5)
        assert table.times[0] == 0.0
        assert table.times[-1] == 4.0

    def test_count_validation(self):
        with pytest.raises(ValueError):
            sample(WindowSpec("rectangular", 2.0), 1)

    def test_times_strictly_increasing_and_readonly(self):
        table = sample(WindowSpec("von_mises", 2.0, beta=2.0), 33)
        assert np.all(np.diff(table.times) > 0)
        with pytest.raises(ValueError):
            table.values[0] = 7.0
