"""Window spectra by three independent routes, plus cardinal reconstruction.

The continuous-time Fourier transform of a window is

    W(w) = int w(t) * exp(-j*w*t) dt        (w in rad/s),

real and even for every centered family here.  Three routes compute it:

1. :func:`ctft_quadrature` -- the numerical oracle: adaptive panelised
   Gauss-Legendre over the exact support, with panels no wider than
   pi/|w| so the oscillation stays resolved.
2. Closed forms: :func:`rect_spectrum`, :func:`cosine_tip_spectrum`,
   :func:`general_cosine_spectrum` and :func:`kaiser_spectrum` are exact
   transforms of their windows; :func:`vonmises_spectrum_series` is the
   exact Bessel/sa series for the von Mises window.
3. :func:`vonmises_spectrum_closed` -- a *candidate* closed form for the
   von Mises window obtained by reading the series coefficients as
   samples of a cardinal expansion taken at half the critical rate.
   That oversampled expansion is not unique, so the candidate is not an
   identity: at beta = 0 it returns 2N at w = 0 where the true value is
   N.  The gap shrinks as the window edge value exp(-beta) vanishes; the
   verify module measures it rather than assuming it away.

A causal window is the centered one delayed by N/2, so its spectrum is
the centered spectrum times the unit-modulus factor exp(-j*w*N/2).
"""

from __future__ import annotations

import cmath
import math
from typing import Callable, Iterable, NamedTuple

import numpy as np

from ._quadrature import integrate
from .special import ConvergenceError, SeriesTruncation, bessel_i, bessel_i_scaled, sa
from .windows import CAUSAL, VON_MISES, WindowSpec, profile

__all__ = [
    "SpectrumPoint",
    "ROUTES",
    "ctft_quadrature",
    "rect_spectrum",
    "cosine_tip_spectrum",
    "general_cosine_spectrum",
    "kaiser_spectrum",
    "vonmises_spectrum_series",
    "vonmises_spectrum_closed",
    "causal_spectrum",
    "cardinal_reconstruct",
    "spectrum_value",
    "spectrum_points",
]

ROUTES = ("oracle", "series", "closed")

DEFAULT_QUAD_TOL = 1e-11


class SpectrumPoint(NamedTuple):
    """One spectrum sample: angular frequency (rad/s) and complex value (s)."""

    w: float
    value: complex


def _check_length(length: float) -> float:
    length = float(length)
    if not (math.isfinite(length) and length > 0):
        raise ValueError(f"length must be finite and > 0, got {length!r}")
    return length


def ctft_quadrature(spec: WindowSpec, w: float, abs_tol: float = DEFAULT_QUAD_TOL) -> complex:
    """Numerical Fourier transform of the window at angular frequency w.

    Integrates w(t)*exp(-j*w*t) over the exact support with panels no
    wider than min(N/8, pi/|w|); the panel count is doubled until the
    estimate is stable to ``abs_tol``.  For centered windows the
    imaginary part of the result is below ``abs_tol``.
    """
    w = float(w)
    if not math.isfinite(w):
        raise ValueError(f"w must be finite, got {w!r}")
    a, b = spec.support()
    min_panels = max(8, math.ceil(spec.length * abs(w) / math.pi))

    def integrand(t: np.ndarray) -> np.ndarray:
        return profile(spec, t) * np.exp(-1j * w * t)

    return complex(integrate(integrand, a, b, abs_tol, min_panels=min_panels))


def rect_spectrum(length: float, w: float) -> complex:
    """Transform of the centered rectangular window: N * sa(w*N/2)."""
    length = _check_length(length)
    return complex(length * sa(w * length / 2.0))


def cosine_tip_spectrum(length: float, w: float) -> complex:
    """Transform of the full-cycle cosine window:
    (N/2) * [sa(N*w/2 - pi) + sa(N*w/2 + pi)]."""
    length = _check_length(length)
    x = length * w / 2.0
    return complex(length / 2.0 * (sa(x - math.pi) + sa(x + math.pi)))


def general_cosine_spectrum(alpha: float, length: float, w: float) -> complex:
    """Transform of the alpha-cosine family, by linearity:
    alpha * rect_spectrum + (1-alpha) * cosine_tip_spectrum."""
    alpha = float(alpha)
    if not (0.0 <= alpha <= 1.0):
        raise ValueError(f"alpha must lie in [0, 1], got {alpha!r}")
    return alpha * rect_spectrum(length, w) + (1.0 - alpha) * cosine_tip_spectrum(length, w)


def kaiser_spectrum(beta: float, length: float, w: float) -> complex:
    """Transform of the continuous Kaiser window:
    (N / I0(beta)) * sa(sqrt((N*w/2)^2 - beta^2)).

    Inside the main lobe, where (N*w/2)^2 < beta^2, the sa of an
    imaginary argument continues analytically to sinh(y)/y.
    """
    length = _check_length(length)
    beta = float(beta)
    if not (math.isfinite(beta) and beta >= 0):
        raise ValueError(f"beta must be finite and >= 0, got {beta!r}")
    x2 = (length * w / 2.0) ** 2 - beta * beta
    if x2 >= 0.0:
        val = sa(math.sqrt(x2))
    else:
        y = math.sqrt(-x2)
        if y < 1e-4:
            y2 = y * y
            val = 1.0 + y2 / 6.0 * (1.0 + y2 / 20.0)
        else:
            val = math.sinh(y) / y
    return complex(length * val / bessel_i(0.0, beta))


def _vm_scaled_coeffs(beta: float, trunc: SeriesTruncation) -> list[float]:
    """Scaled coefficients exp(-beta)*I_n(beta) for n = 0..M, where M is the
    smallest order whose ratio to the n = 0 coefficient is below trunc.tol."""
    c0 = bessel_i_scaled(0.0, beta)
    coeffs = [c0]
    for n in range(1, trunc.max_terms + 1):
        cn = bessel_i_scaled(float(n), beta)
        coeffs.append(cn)
        if cn < trunc.tol * c0:
            return coeffs
    raise ConvergenceError(
        f"Bessel coefficient ratio did not drop below {trunc.tol} within "
        f"{trunc.max_terms} orders (beta={beta})"
    )


def vonmises_spectrum_series(
    beta: float, length: float, w: float, trunc: SeriesTruncation | None = None
) -> complex:
    """Exact series for the centered von Mises window spectrum:

        W(w) = N * exp(-beta) * sum_n I_|n|(beta) * sa(N*w/2 - n*pi/2),

    summed symmetrically over |n| <= M with M set by ``trunc``.  The
    expansion comes from the cosine Fourier series of exp(beta*cos) and
    the transform of a gated cosine; its agreement with the quadrature
    oracle is at truncation level.
    """
    length = _check_length(length)
    beta = float(beta)
    if not (math.isfinite(beta) and beta >= 0):
        raise ValueError(f"beta must be finite and >= 0, got {beta!r}")
    if trunc is None:
        trunc = SeriesTruncation()
    coeffs = _vm_scaled_coeffs(beta, trunc)
    top = len(coeffs) - 1
    x = length * w / 2.0
    total = 0.0
    for n in range(-top, top + 1):
        total += coeffs[abs(n)] * sa(x - n * math.pi / 2.0)
    return complex(length * total)


def vonmises_spectrum_closed(beta: float, length: float, w: float) -> complex:
    """Candidate closed form 2*N*I_nu(beta)*exp(-beta) with real order nu = |N*w/pi|.

    Interpolates the series coefficients through the Bessel order.  Not
    an identity for the true transform (see the module docstring); the
    verify module quantifies the gap, which decays with exp(-beta).
    """
    length = _check_length(length)
    nu = abs(length * w / math.pi)
    return complex(2.0 * length * bessel_i_scaled(nu, beta))


def causal_spectrum(route: Callable[..., complex], spec: WindowSpec, w: float, **route_kwargs) -> complex:
    """Spectrum of a causal window from any centered route.

    Applies the time-shift factor exp(-j*w*N/2) to the value the given
    route produces for the centered twin of ``spec``.
    """
    if spec.alignment != CAUSAL:
        raise ValueError("causal_spectrum requires a causal WindowSpec")
    base = route(spec.centered(), w, **route_kwargs)
    return base * cmath.exp(-1j * w * spec.length / 2.0)


def cardinal_reconstruct(
    samples: Iterable[tuple[int, complex]], w_s: float, t_m: float, w: float
) -> complex:
    """Cardinal-series reconstruction of a time-limited signal's spectrum.

    For a signal confined to [-t_m, t_m], the spectrum is recovered from
    uniform samples F(n*w_s) by

        F(w) = (w_s*t_m/pi) * sum_n F(n*w_s) * sa(w*t_m - n*t_m*w_s),

    exact whenever the rate satisfies w_s <= pi/t_m.  ``samples`` is an
    iterable of (n, F(n*w_s)) pairs covering enough indices that the
    omitted tail is negligible for the caller's purpose.
    """
    w_s = float(w_s)
    t_m = float(t_m)
    if not (math.isfinite(w_s) and w_s > 0):
        raise ValueError(f"w_s must be finite and > 0, got {w_s!r}")
    if not (math.isfinite(t_m) and t_m > 0):
        raise ValueError(f"t_m must be finite and > 0, got {t_m!r}")
    if w_s > math.pi / t_m * (1.0 + 1e-12):
        raise ValueError(
            f"sampling rate w_s={w_s} violates the restriction w_s <= pi/t_m={math.pi / t_m}"
        )
    w = float(w)
    if not math.isfinite(w):
        raise ValueError(f"w must be finite, got {w!r}")
    total = 0.0 + 0.0j
    for n, value in samples:
        total += complex(value) * sa(w * t_m - n * t_m * w_s)
    return (w_s * t_m / math.pi) * total


def spectrum_value(
    spec: WindowSpec,
    w: float,
    route: str = "oracle",
    trunc: SeriesTruncation | None = None,
    abs_tol: float = DEFAULT_QUAD_TOL,
) -> complex:
    """Spectrum of ``spec`` at ``w`` by the named route.

    ``"oracle"`` integrates any family over its exact support (centered
    or causal).  ``"series"`` and ``"closed"`` are defined for the
    von Mises family only; for a causal spec they carry the time-shift
    phase factor.
    """
    if route == "oracle":
        return ctft_quadrature(spec, w, abs_tol)
    if route not in ROUTES:
        raise ValueError(f"unknown route {route!r}; expected one of {ROUTES}")
    if spec.family != VON_MISES:
        raise ValueError(f"route {route!r} is defined only for the von_mises family")
    if route == "series":
        base = vonmises_spectrum_series(spec.beta, spec.length, w, trunc)
    else:
        base = vonmises_spectrum_closed(spec.beta, spec.length, w)
    if spec.alignment == CAUSAL:
        base *= cmath.exp(-1j * float(w) * spec.length / 2.0)
    return base


def spectrum_points(
    spec: WindowSpec,
    ws: Iterable[float],
    route: str = "oracle",
    trunc: SeriesTruncation | None = None,
    abs_tol: float = DEFAULT_QUAD_TOL,
) -> list[SpectrumPoint]:
    """Evaluate :func:`spectrum_value` over a frequency grid."""
    return [
        SpectrumPoint(float(w), spectrum_value(spec, w, route, trunc, abs_tol))
        for w in ws
    ]
