"""Continuous-time window (taper) families, centered or causal.

All families are peak-normalised so the value at the support centre is 1,
and all vanish outside their support (the gate boundary is closed, so the
endpoint carries the shape value).  With support length ``N``:

* ``rectangular``          rect(t/N)
* ``generalized_cosine``   [alpha + (1-alpha)*cos(2*pi*t/N)] * rect(t/N);
                           alpha = 0.5 is the von Hann window and
                           alpha = 0.54 the Hamming window
* ``cosine_tip``           cos(2*pi*t/N) * rect(t/N) -- a full cosine
                           cycle across the support (alpha = 0 above), so
                           the edges go negative; some references use a
                           half cycle pi/N instead, this family does not
* ``kaiser``               I0(beta*sqrt(1-(2t/N)^2)) / I0(beta) * rect(t/N)
* ``von_mises``            exp(beta*cos(pi*t/N)) / exp(beta) * rect(t/N),
                           the circular-normal taper; beta = 0 degenerates
                           to the rectangular window exactly

``alignment="centered"`` puts the support on [-N/2, N/2]; ``"causal"``
replaces t by t - N/2 inside both the shape and the gate, moving the
support to [0, N].
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass

import numpy as np

from .special import _i0_array, _require_finite

__all__ = [
    "FAMILIES",
    "CENTERED",
    "CAUSAL",
    "WindowSpec",
    "SampledWindow",
    "evaluate",
    "profile",
    "sample",
]

RECTANGULAR = "rectangular"
GENERALIZED_COSINE = "generalized_cosine"
COSINE_TIP = "cosine_tip"
KAISER = "kaiser"
VON_MISES = "von_mises"

FAMILIES = (RECTANGULAR, GENERALIZED_COSINE, COSINE_TIP, KAISER, VON_MISES)

CENTERED = "centered"
CAUSAL = "causal"


@dataclass(frozen=True)
class WindowSpec:
    """A window family plus its shape parameter, support length and alignment.

    ``alpha`` is required (in [0, 1]) for ``generalized_cosine``;
    ``beta`` is required (>= 0) for ``kaiser`` and ``von_mises``; the
    other families take no shape parameter.
    """

    family: str
    length: float
    alignment: str = CENTERED
    alpha: float | None = None
    beta: float | None = None

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        length = float(self.length)
        if not (math.isfinite(length) and length > 0):
            raise ValueError(f"length must be finite and > 0, got {self.length!r}")
        object.__setattr__(self, "length", length)
        if self.alignment not in (CENTERED, CAUSAL):
            raise ValueError(f"alignment must be {CENTERED!r} or {CAUSAL!r}, got {self.alignment!r}")
        if self.family == GENERALIZED_COSINE:
            if self.alpha is None:
                raise ValueError("generalized_cosine requires alpha")
            alpha = float(self.alpha)
            if not (0.0 <= alpha <= 1.0):
                raise ValueError(f"alpha must lie in [0, 1], got {self.alpha!r}")
            object.__setattr__(self, "alpha", alpha)
        elif self.alpha is not None:
            raise ValueError(f"family {self.family!r} takes no alpha")
        if self.family in (KAISER, VON_MISES):
            if self.beta is None:
                raise ValueError(f"{self.family} requires beta")
            beta = float(self.beta)
            if not (math.isfinite(beta) and beta >= 0):
                raise ValueError(f"beta must be finite and >= 0, got {self.beta!r}")
            object.__setattr__(self, "beta", beta)
        elif self.beta is not None:
            raise ValueError(f"family {self.family!r} takes no beta")

    def support(self) -> tuple[float, float]:
        """(start, end) of the window support in seconds."""
        if self.alignment == CAUSAL:
            return 0.0, self.length
        return -self.length / 2.0, self.length / 2.0

    def centered(self) -> "WindowSpec":
        """The centered twin of this spec (identity if already centered)."""
        if self.alignment == CENTERED:
            return self
        return dataclasses.replace(self, alignment=CENTERED)

    @property
    def shape_param(self) -> float | None:
        """alpha or beta, whichever the family carries."""
        return self.alpha if self.family == GENERALIZED_COSINE else self.beta


def profile(spec: WindowSpec, times) -> np.ndarray:
    """Window values over an array of times (vectorised evaluate)."""
    t = np.asarray(times, dtype=float)
    if not np.all(np.isfinite(t)):
        raise ValueError("times must be finite")
    flat = np.atleast_1d(t)
    u = flat - spec.length / 2.0 if spec.alignment == CAUSAL else flat
    half = spec.length / 2.0
    out = np.zeros_like(flat)
    inside = np.abs(u) <= half
    v = u[inside]
    if spec.family == RECTANGULAR:
        shape = np.ones_like(v)
    elif spec.family == GENERALIZED_COSINE:
        a = spec.alpha
        shape = a + (1.0 - a) * np.cos(2.0 * math.pi * v / spec.length)
    elif spec.family == COSINE_TIP:
        shape = np.cos(2.0 * math.pi * v / spec.length)
    elif spec.family == KAISER:
        arg = spec.beta * np.sqrt(np.maximum(0.0, 1.0 - (v / half) ** 2))
        # normalise with the same series path so the peak value is exactly 1
        shape = _i0_array(arg) / _i0_array(np.asarray(spec.beta))
    else:  # VON_MISES
        shape = np.exp(spec.beta * (np.cos(math.pi * v / spec.length) - 1.0))
    out[inside] = shape
    return out.reshape(t.shape)


def evaluate(spec: WindowSpec, t: float) -> float:
    """Window value at a single time; zero outside the support."""
    t = _require_finite("t", t)
    return float(profile(spec, t))


@dataclass(frozen=True)
class SampledWindow:
    """A spec together with a time grid and the window values on it."""

    spec: WindowSpec
    times: np.ndarray
    values: np.ndarray

    def __post_init__(self) -> None:
        times = np.asarray(self.times, dtype=float)
        values = np.asarray(self.values, dtype=float)
        if times.ndim != 1 or times.shape != values.shape:
            raise ValueError("times and values must be 1-d arrays of equal length")
        if times.size >= 2 and not np.all(np.diff(times) > 0):
            raise ValueError("times must be strictly increasing")
        times.setflags(write=False)
        values.setflags(write=False)
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "values", values)


def sample(spec: WindowSpec, count: int) -> SampledWindow:
    """Uniform sampling of the window over its support, endpoints included."""
    count = int(count)
    if count < 2:
        raise ValueError(f"count must be >= 2, got {count}")
    a, b = spec.support()
    times = np.linspace(a, b, count)
    return SampledWindow(spec=spec, times=times, values=profile(spec, times))
