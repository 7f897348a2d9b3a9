import math

import numpy as np
import pytest
import scipy.integrate as si
import scipy.optimize as so

from circwin import (
    MetricSearchError,
    UndefinedMetricError,
    WindowSpec,
    coherent_gain,
    compute_metrics,
    enbw,
    first_null,
    mainlobe_width,
    peak_sidelobe,
)

RECT = WindowSpec("rectangular", 2.0)
HANN = WindowSpec("generalized_cosine", 2.0, alpha=0.5)
COSINE_TIP = WindowSpec("cosine_tip", 2.0)


class TestCoherentGain:
    def test_rectangular(self):
        assert coherent_gain(RECT) == pytest.approx(1.0, abs=1e-12)

    def test_hann(self):
        assert coherent_gain(HANN) == pytest.approx(0.5, abs=1e-9)

    def test_cosine_tip_zero(self):
        assert coherent_gain(COSINE_TIP) == pytest.approx(0.0, abs=1e-12)

    def test_von_mises_beta_zero(self):
        assert coherent_gain(WindowSpec("von_mises", 2.0, beta=0.0)) == pytest.approx(
            1.0, abs=1e-12)


class TestEnbw:
    def test_rectangular(self):
        assert enbw(RECT) == pytest.approx(1.0, abs=1e-9)

    def test_hann(self):
        assert enbw(HANN) == pytest.approx(1.5, abs=1e-6)

    def test_von_mises_reference(self):
        # independent recomputation: N * int w^2 / (int w)^2 via scipy
        beta = 5.0
        shape = lambda t: math.exp(beta * (math.cos(math.pi * t / 2.0) - 1.0))
        num, _ = si.quad(lambda t: shape(t) ** 2, -1.0, 1.0, epsabs=1e-14)
        den, _ = si.quad(shape, -1.0, 1.0, epsabs=1e-14)
        expected = 2.0 * num / den**2
        assert enbw(WindowSpec("von_mises", 2.0, beta=beta)) == pytest.approx(
            expected, rel=1e-9)

    def test_cosine_tip_undefined(self):
        with pytest.raises(UndefinedMetricError):
            enbw(COSINE_TIP)


class TestPeakSidelobe:
    def test_rectangular_against_dense_scan(self):
        # independent oracle: dense scan of |N*sa(w*N/2)| past the first null
        xs = np.linspace(math.pi, 3.0 * math.pi, 400001)
        ref_db = 20.0 * math.log10(np.max(np.abs(np.sin(xs) / xs)))
        assert peak_sidelobe(RECT) == pytest.approx(ref_db, abs=0.05)

    def test_hann_against_dense_scan(self):
        # independent oracle: the exact closed-form spectrum of the window
        def hann_mag(w):
            def sa_(x):
                return 1.0 if x == 0 else math.sin(x) / x
            return abs(0.5 * 2.0 * sa_(w) + 0.5 * (sa_(w - math.pi) + sa_(w + math.pi)))

        ws = np.linspace(2.0 * math.pi, 12.0 * math.pi, 400001)
        ref_db = 20.0 * math.log10(max(hann_mag(float(w)) for w in ws) / hann_mag(0.0))
        assert peak_sidelobe(HANN) == pytest.approx(ref_db, abs=0.05)

    def test_taper_lowers_sidelobes(self):
        lobes = {
            beta: peak_sidelobe(WindowSpec("von_mises", 2.0, beta=beta))
            for beta in (1.0, 5.0)
        }
        assert lobes[5.0] <= lobes[1.0]

    def test_undefined_for_zero_gain(self):
        with pytest.raises(UndefinedMetricError):
            peak_sidelobe(COSINE_TIP)


class TestMainlobeWidth:
    def test_rectangular_against_root_solve(self):
        # independent oracle: solve |sa(x)| = 10^(-3/20) with scipy brentq
        target = 10.0 ** (-3.0 / 20.0)
        x_star = so.brentq(lambda x: math.sin(x) / x - target, 0.5, 2.0, xtol=1e-14)
        expected_bins = 2.0 * x_star / math.pi
        assert mainlobe_width(RECT) == pytest.approx(expected_bins, abs=1e-9)

    def test_von_mises_beta_zero_equals_rect(self):
        vm0 = WindowSpec("von_mises", 2.0, beta=0.0)
        assert mainlobe_width(vm0) == pytest.approx(mainlobe_width(RECT), abs=1e-9)

    def test_taper_widens_lobe(self):
        vm5 = WindowSpec("von_mises", 2.0, beta=5.0)
        assert mainlobe_width(vm5) > mainlobe_width(RECT)

    def test_level_validation(self):
        with pytest.raises(ValueError):
            mainlobe_width(RECT, level_db=1.0)

    def test_level_not_reached(self):
        with pytest.raises(MetricSearchError):
            mainlobe_width(RECT, level_db=-400.0, band_bins=2.0)


class TestFirstNull:
    def test_rectangular(self):
        assert first_null(RECT) == pytest.approx(1.0, abs=1e-9)

    def test_hann(self):
        # the window's spectrum first vanishes at two bins
        assert first_null(HANN) == pytest.approx(2.0, abs=1e-6)


class TestScaleInvariance:
    @pytest.mark.parametrize("family,kw", [
        ("rectangular", {}),
        ("von_mises", {"beta": 5.0}),
    ], ids=["rect", "von_mises"])
    def test_bin_metrics_independent_of_length(self, family, kw):
        short = WindowSpec(family, 1.0, **kw)
        long = WindowSpec(family, 16.0, **kw)
        assert enbw(short) == pytest.approx(enbw(long), abs=1e-6)
        assert mainlobe_width(short) == pytest.approx(mainlobe_width(long), abs=1e-6)
        assert peak_sidelobe(short) == pytest.approx(peak_sidelobe(long), abs=1e-6)
        assert coherent_gain(short) == pytest.approx(coherent_gain(long), abs=1e-9)


class TestComputeMetrics:
    def test_bundle_fields(self):
        m = compute_metrics(WindowSpec("von_mises", 2.0, beta=3.0))
        assert m.coherent_gain > 0
        assert m.enbw_bins > 1
        assert m.mainlobe_width_3db_bins > 0
        assert m.first_null_bins > 0
        assert m.peak_sidelobe_db < 0
        assert "samples/bin" in m.metrics_grid

    def test_cosine_tip_undefined_entries(self):
        m = compute_metrics(COSINE_TIP)
        assert m.coherent_gain == pytest.approx(0.0, abs=1e-12)
        assert m.enbw_bins is None
        assert m.mainlobe_width_3db_bins is None
        assert m.peak_sidelobe_db is None

    def test_causal_equals_centered(self):
        centered = compute_metrics(WindowSpec("von_mises", 2.0, beta=3.0))
        causal = compute_metrics(WindowSpec("von_mises", 2.0, "causal", beta=3.0))
        assert causal.coherent_gain == pytest.approx(centered.coherent_gain, abs=1e-12)
        assert causal.enbw_bins == pytest.approx(centered.enbw_bins, abs=1e-12)
        assert causal.peak_sidelobe_db == pytest.approx(centered.peak_sidelobe_db, abs=1e-9)
