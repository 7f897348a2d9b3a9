"""The von Mises (circular normal) distribution and its scaled variants.

Density, circular variance, numerically trusted CDF, and two
rescalings of the density onto a support ``[0, N]``:

* ``full_cycle`` wraps one full period of the angular argument across
  the support (angular factor ``2*pi/N``);
* ``half_cycle`` wraps half a period (factor ``pi/N``), producing the
  single-hump profile that the von Mises window is built from.

``vm_cdf_paper_series`` evaluates a published closed-form CDF series
*literally as printed*; it intentionally makes no claim of correctness
and exists so the verify module can measure how far that printed
formula sits from the quadrature CDF.  (It is far: the series returns
0.5 at x = pi for a zero-mean distribution, where the true CDF is 1.)
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._quadrature import integrate
from .special import SeriesTruncation, ConvergenceError, bessel_i_scaled, sa, _require_finite

__all__ = [
    "VonMisesParams",
    "ScaledCircularParams",
    "FULL_CYCLE",
    "HALF_CYCLE",
    "wrap_angle",
    "vm_pdf",
    "vm_pdf_periodic",
    "vm_circular_variance",
    "vm_cdf_numeric",
    "vm_cdf_paper_series",
    "scaled_pdf",
]

TWO_PI = 2.0 * math.pi

FULL_CYCLE = "full_cycle"
HALF_CYCLE = "half_cycle"


def wrap_angle(x: float) -> float:
    """Reduce an angle to [-pi, pi).

    Uses the IEEE round-half-to-even remainder; the boundary +pi maps
    to -pi so the reduced interval is half-open.
    """
    x = _require_finite("x", x)
    r = math.remainder(x, TWO_PI)
    return -math.pi if r == math.pi else r


@dataclass(frozen=True)
class VonMisesParams:
    """Location mu (radians; stored reduced to [-pi, pi)) and concentration kappa >= 0.

    mu is simultaneously the mean, mode and median; kappa = 0 gives the
    uniform distribution on the circle and large kappa approaches a
    normal with variance 1/kappa.
    """

    mu: float = 0.0
    kappa: float = 0.0

    def __post_init__(self) -> None:
        kappa = float(self.kappa)
        if not (math.isfinite(kappa) and kappa >= 0):
            raise ValueError(f"kappa must be finite and >= 0, got {self.kappa!r}")
        object.__setattr__(self, "mu", wrap_angle(self.mu))
        object.__setattr__(self, "kappa", kappa)


def _check_support(x: float) -> float:
    x = float(x)
    if not (-math.pi <= x <= math.pi):
        raise ValueError(
            f"x={x!r} outside [-pi, pi]; use vm_pdf_periodic for the periodic extension"
        )
    return x


def vm_pdf(p: VonMisesParams, x: float) -> float:
    """Density exp(kappa*cos(x - mu)) / (2*pi*I0(kappa)) on [-pi, pi].

    Evaluated through the exponentially scaled Bessel function, so any
    kappa that fits in a double is acceptable.
    """
    x = _check_support(x)
    if p.kappa == 0.0:
        return 1.0 / TWO_PI
    return math.exp(p.kappa * (math.cos(x - p.mu) - 1.0)) / (
        TWO_PI * bessel_i_scaled(0.0, p.kappa)
    )


def vm_pdf_periodic(p: VonMisesParams, x: float) -> float:
    """Periodic extension of :func:`vm_pdf`: x reduced mod 2*pi into [-pi, pi)."""
    return vm_pdf(p, wrap_angle(x))


def vm_circular_variance(p: VonMisesParams) -> float:
    """Circular variance 1 - I1(kappa)/I0(kappa), in [0, 1]."""
    if p.kappa == 0.0:
        return 1.0
    return 1.0 - bessel_i_scaled(1.0, p.kappa) / bessel_i_scaled(0.0, p.kappa)


def vm_cdf_numeric(p: VonMisesParams, x: float, abs_tol: float = 1e-12) -> float:
    """CDF by adaptive quadrature of the density from -pi to x.

    This is the trusted CDF route: monotone, 0 at -pi and 1 at +pi to
    within the quadrature tolerance.
    """
    x = _check_support(x)
    if x == -math.pi:
        return 0.0
    mu, kappa = p.mu, p.kappa
    i0e = bessel_i_scaled(0.0, kappa)

    def density(t: np.ndarray) -> np.ndarray:
        return np.exp(kappa * (np.cos(t - mu) - 1.0)) / (TWO_PI * i0e)

    # resolve a possible spike of width ~1/sqrt(kappa) at mu
    min_panels = max(8, math.ceil((x + math.pi) * (1.0 + math.sqrt(kappa)) / math.pi))
    return float(integrate(density, -math.pi, x, abs_tol, min_panels=min_panels))


def vm_cdf_paper_series(
    p: VonMisesParams, x: float, trunc: SeriesTruncation | None = None
) -> float:
    """Literal evaluation of a published CDF series (verification subject).

    Sums (1/2pi) * I_|n|(kappa)/I0(kappa) * (x - |n|) * sa(n*(x - mu))
    over |n| <= M, where M is the smallest order whose Bessel ratio
    drops below ``trunc.tol`` (the n = 0 factor sa(0) is 1).  The result
    is reported as-is; agreement with :func:`vm_cdf_numeric` is measured,
    not assumed.
    """
    x = _check_support(x)
    if trunc is None:
        trunc = SeriesTruncation()
    i0e = bessel_i_scaled(0.0, p.kappa)
    ratios = [1.0]
    for n in range(1, trunc.max_terms + 1):
        r = bessel_i_scaled(float(n), p.kappa) / i0e
        ratios.append(r)
        if r < trunc.tol:
            break
    else:
        raise ConvergenceError(
            f"CDF series ratio did not drop below {trunc.tol} within "
            f"{trunc.max_terms} orders (kappa={p.kappa})"
        )
    top = len(ratios) - 1
    total = 0.0
    for n in range(-top, top + 1):
        total += ratios[abs(n)] * (x - abs(n)) * sa(n * (x - p.mu))
    return total / TWO_PI


@dataclass(frozen=True)
class ScaledCircularParams:
    """Density parameters after rescaling the circle onto [0, length].

    ``variant`` selects the angular factor: 2*pi/length for
    ``full_cycle``, pi/length for ``half_cycle``.
    """

    beta: float
    length: float
    variant: str = FULL_CYCLE

    def __post_init__(self) -> None:
        if not (math.isfinite(self.beta) and self.beta >= 0):
            raise ValueError(f"beta must be finite and >= 0, got {self.beta!r}")
        if not (math.isfinite(self.length) and self.length > 0):
            raise ValueError(f"length must be finite and > 0, got {self.length!r}")
        if self.variant not in (FULL_CYCLE, HALF_CYCLE):
            raise ValueError(f"variant must be {FULL_CYCLE!r} or {HALF_CYCLE!r}, got {self.variant!r}")

    @property
    def angular_factor(self) -> float:
        return (TWO_PI if self.variant == FULL_CYCLE else math.pi) / self.length


def scaled_pdf(params: ScaledCircularParams, x: float) -> float:
    """Density exp(beta*cos(a*x)) / (length*I0(beta)) for 0 <= x <= length.

    Both variants integrate to 1 over the support: for ``half_cycle``
    this follows from the integral form I0(beta) = (1/pi) * int_0^pi
    exp(beta*cos(u)) du, the same identity behind ``full_cycle``.
    """
    x = float(x)
    if not (0.0 <= x <= params.length):
        raise ValueError(f"x={x!r} outside the support [0, {params.length}]")
    return math.exp(params.beta * (math.cos(params.angular_factor * x) - 1.0)) / (
        params.length * bessel_i_scaled(0.0, params.beta)
    )
