"""Spectral figures of merit for comparing window families.

All metrics are computed on the quadrature oracle route, never on the
closed forms, so their correctness does not hinge on any printed
spectrum formula.  Frequencies are normalised to bins of 2*pi/N rad/s,
which makes results comparable across support lengths:

* coherent gain       W(0)/N, the DC amplitude scaling
* ENBW                N * int w^2 dt / (int w dt)^2, in bins
* main-lobe width     full width where |W| first falls a given number of
                      dB below |W(0)|, found by bisection
* first null          location of the first sign change of the (real,
                      even) centered spectrum
* peak sidelobe       strongest |W| beyond the first null, in dB
                      relative to |W(0)|, with parabolic refinement of
                      the sampled maximum

Metrics of a causal spec equal those of its centered twin (the spectra
differ by a unit-modulus phase), and are computed on the twin.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._quadrature import integrate
from .spectra import ctft_quadrature
from .windows import WindowSpec, profile

__all__ = [
    "UndefinedMetricError",
    "MetricSearchError",
    "WindowMetrics",
    "coherent_gain",
    "enbw",
    "first_null",
    "peak_sidelobe",
    "mainlobe_width",
    "compute_metrics",
]

DEFAULT_BAND_BINS = 40.0
DEFAULT_RESOLUTION = 64
DEFAULT_QUAD_TOL = 1e-12


class UndefinedMetricError(ValueError):
    """The metric is undefined for this window (zero coherent gain)."""


class MetricSearchError(RuntimeError):
    """A spectral feature was not found within the search band."""


@dataclass(frozen=True)
class WindowMetrics:
    """Metric bundle for one window; None marks undefined entries."""

    coherent_gain: float
    enbw_bins: float | None
    mainlobe_width_3db_bins: float | None
    first_null_bins: float | None
    peak_sidelobe_db: float | None
    metrics_grid: str


def _bin_width(spec: WindowSpec) -> float:
    return 2.0 * math.pi / spec.length


def _dc_value(spec: WindowSpec, abs_tol: float) -> float:
    return ctft_quadrature(spec.centered(), 0.0, abs_tol).real


def coherent_gain(spec: WindowSpec, abs_tol: float = DEFAULT_QUAD_TOL) -> float:
    """W(0)/N via the quadrature oracle."""
    return _dc_value(spec, abs_tol) / spec.length


def enbw(spec: WindowSpec, abs_tol: float = DEFAULT_QUAD_TOL) -> float:
    """Equivalent noise bandwidth N * int w^2 / (int w)^2, in bins."""
    area = _dc_value(spec, abs_tol)
    if abs(area) < 1e-9 * spec.length:
        raise UndefinedMetricError(
            f"coherent gain of {spec.family} is zero; ENBW is undefined"
        )
    a, b = spec.support()
    power = float(integrate(lambda t: profile(spec, t) ** 2, a, b, abs_tol, min_panels=32))
    return spec.length * power / (area * area)


def _real_samples(spec: WindowSpec, ws: np.ndarray, abs_tol: float) -> np.ndarray:
    cspec = spec.centered()
    return np.array([ctft_quadrature(cspec, w, abs_tol).real for w in ws])


def _bisect(fn, lo: float, hi: float, iters: int = 64) -> float:
    flo = fn(lo)
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        fmid = fn(mid)
        if (flo > 0) == (fmid > 0):
            lo, flo = mid, fmid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _find_first_null(spec: WindowSpec, band_bins: float, resolution: int,
                     abs_tol: float) -> tuple[float, np.ndarray, np.ndarray]:
    """First positive-frequency zero crossing of the centered spectrum.

    Returns (w_null, ws, vals) so callers can reuse the scan samples.
    """
    bin_w = _bin_width(spec)
    count = int(round(band_bins * resolution)) + 1
    ws = np.linspace(0.0, band_bins * bin_w, count)
    vals = _real_samples(spec, ws, abs_tol)
    sign_change = np.nonzero((vals[:-1] * vals[1:] <= 0) & (vals[:-1] != 0))[0]
    if sign_change.size == 0:
        raise MetricSearchError(
            f"no spectral null of {spec.family} within {band_bins} bins"
        )
    i = int(sign_change[0])
    cspec = spec.centered()
    w_null = _bisect(
        lambda w: ctft_quadrature(cspec, w, abs_tol).real, ws[i], ws[i + 1]
    )
    return w_null, ws, vals


def first_null(spec: WindowSpec, band_bins: float = DEFAULT_BAND_BINS,
               resolution: int = DEFAULT_RESOLUTION,
               abs_tol: float = DEFAULT_QUAD_TOL) -> float:
    """Location of the first spectral null, in bins."""
    w_null, _, _ = _find_first_null(spec, band_bins, resolution, abs_tol)
    return w_null / _bin_width(spec)


def peak_sidelobe(spec: WindowSpec, band_bins: float = DEFAULT_BAND_BINS,
                  resolution: int = DEFAULT_RESOLUTION,
                  abs_tol: float = DEFAULT_QUAD_TOL) -> float:
    """Peak sidelobe level in dB relative to |W(0)| (negative when present).

    Scans |W| beyond the first null at ``resolution`` samples per bin and
    refines the sampled maximum with a three-point parabola.
    """
    dc = _dc_value(spec, abs_tol)
    if abs(dc) < 1e-9 * spec.length:
        raise UndefinedMetricError(
            f"coherent gain of {spec.family} is zero; sidelobe level has no reference"
        )
    w_null, ws, vals = _find_first_null(spec, band_bins, resolution, abs_tol)
    mags = np.abs(vals)
    beyond = np.nonzero(ws > w_null)[0]
    if beyond.size < 3:
        raise MetricSearchError(
            f"search band of {band_bins} bins leaves no room beyond the first null"
        )
    start = int(beyond[0])
    j = start + int(np.argmax(mags[start:]))
    peak = mags[j]
    if 0 < j < len(ws) - 1:
        ym, y0, yp = mags[j - 1], mags[j], mags[j + 1]
        denom = ym - 2.0 * y0 + yp
        if denom < 0:  # genuine local maximum; refine
            delta = 0.5 * (ym - yp) / denom
            peak = y0 - 0.25 * (ym - yp) * delta
    return 20.0 * math.log10(peak / abs(dc))


def mainlobe_width(spec: WindowSpec, level_db: float = -3.0,
                   band_bins: float = 8.0, resolution: int = DEFAULT_RESOLUTION,
                   abs_tol: float = DEFAULT_QUAD_TOL) -> float:
    """Full width, in bins, where |W| first falls ``level_db`` below |W(0)|."""
    level_db = float(level_db)
    if not level_db < 0:
        raise ValueError(f"level_db must be negative, got {level_db!r}")
    dc = abs(_dc_value(spec, abs_tol))
    if dc < 1e-9 * spec.length:
        raise UndefinedMetricError(
            f"coherent gain of {spec.family} is zero; lobe width has no reference"
        )
    target = dc * 10.0 ** (level_db / 20.0)
    bin_w = _bin_width(spec)
    count = int(round(band_bins * resolution)) + 1
    ws = np.linspace(0.0, band_bins * bin_w, count)
    cspec = spec.centered()
    below = None
    for i in range(1, count):
        if abs(ctft_quadrature(cspec, ws[i], abs_tol)) < target:
            below = i
            break
    if below is None:
        raise MetricSearchError(
            f"|W| never fell {level_db} dB within {band_bins} bins"
        )
    w_cross = _bisect(
        lambda w: abs(ctft_quadrature(cspec, w, abs_tol)) - target,
        ws[below - 1], ws[below],
    )
    return 2.0 * w_cross / bin_w


def compute_metrics(spec: WindowSpec, band_bins: float = DEFAULT_BAND_BINS,
                    resolution: int = DEFAULT_RESOLUTION,
                    abs_tol: float = DEFAULT_QUAD_TOL) -> WindowMetrics:
    """All metrics for one window; undefined or unfound entries become None."""
    cg = coherent_gain(spec, abs_tol)
    try:
        bw = enbw(spec, abs_tol)
    except UndefinedMetricError:
        bw = None
    try:
        width = mainlobe_width(spec, -3.0, resolution=resolution, abs_tol=abs_tol)
    except (UndefinedMetricError, MetricSearchError):
        width = None
    try:
        null_bins = first_null(spec, band_bins, resolution, abs_tol)
    except MetricSearchError:
        null_bins = None
    try:
        psl = peak_sidelobe(spec, band_bins, resolution, abs_tol)
    except (UndefinedMetricError, MetricSearchError):
        psl = None
    grid = (
        f"band={band_bins:g} bins at {resolution} samples/bin, "
        f"parabolic sidelobe refinement, quadrature abs_tol={abs_tol:g}"
    )
    return WindowMetrics(
        coherent_gain=cg,
        enbw_bins=bw,
        mainlobe_width_3db_bins=width,
        first_null_bins=null_bins,
        peak_sidelobe_db=psl,
        metrics_grid=grid,
    )
