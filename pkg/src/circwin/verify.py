"""Cross-route verification: machine-readable discrepancy reports.

Each subject pairs a route under test with a trusted reference route and
reports the worst and aggregate deviations over a caller-supplied grid.
Subjects carry one of two semantics:

* thresholded -- mathematics guarantees agreement, so the report gets a
  pass/fail flag: the von Mises Bessel/sa series versus the quadrature
  oracle (1e-8 relative) and cardinal reconstruction from oracle samples
  (1e-6 relative);
* report-only -- the route under test is a printed formula whose
  validity is the question: the von Mises closed-form spectrum
  candidate, the Kaiser closed form, and the literal CDF series.  These
  never fail; they document.

Everything here is deterministic: identical parameters and grid give a
bit-identical report.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .circular import VonMisesParams, vm_cdf_numeric, vm_cdf_paper_series
from .special import ConvergenceError, SeriesTruncation
from .spectra import (
    cardinal_reconstruct,
    ctft_quadrature,
    kaiser_spectrum,
    vonmises_spectrum_closed,
    vonmises_spectrum_series,
)
from .windows import WindowSpec

__all__ = [
    "SUBJECTS",
    "REPORT_ONLY",
    "WorstPoint",
    "VerificationReport",
    "run_verification",
]

VM_SERIES_VS_ORACLE = "vm_spectrum_series_vs_oracle"
VM_CLOSED_VS_ORACLE = "vm_spectrum_closed_vs_oracle"
KAISER_CLOSED_VS_ORACLE = "kaiser_closed_vs_oracle"
CARDINAL_VS_ORACLE = "cardinal_reconstruction_vs_oracle"
VM_CDF_PAPER_VS_NUMERIC = "vm_cdf_paper_vs_numeric"

SUBJECTS = (
    VM_SERIES_VS_ORACLE,
    VM_CLOSED_VS_ORACLE,
    KAISER_CLOSED_VS_ORACLE,
    CARDINAL_VS_ORACLE,
    VM_CDF_PAPER_VS_NUMERIC,
)

REPORT_ONLY = "report-only"

SERIES_THRESHOLD = 1e-8
CARDINAL_THRESHOLD = 1e-6


@dataclass(frozen=True)
class WorstPoint:
    """Grid point with the largest deviation, with both route values."""

    abscissa: float
    value_test: complex
    value_ref: complex


@dataclass(frozen=True)
class VerificationReport:
    subject: str
    parameters: dict
    max_abs_deviation: float
    max_rel_deviation: float
    rms_deviation: float
    worst_point: WorstPoint
    pass_threshold: float | str
    passed: bool | None

    def to_dict(self) -> dict:
        """JSON-ready dictionary with the report fields, snake_case keys."""

        def c2j(v: complex) -> list[float]:
            v = complex(v)
            return [v.real, v.imag]

        return {
            "subject": self.subject,
            "parameters": self.parameters,
            "max_abs_deviation": self.max_abs_deviation,
            "max_rel_deviation": self.max_rel_deviation,
            "rms_deviation": self.rms_deviation,
            "worst_point": {
                "abscissa": self.worst_point.abscissa,
                "value_test": c2j(self.worst_point.value_test),
                "value_ref": c2j(self.worst_point.value_ref),
            },
            "pass_threshold": self.pass_threshold,
            "passed": self.passed,
        }


def _grid_record(grid: Sequence[float]) -> dict:
    return {"min": grid[0], "max": grid[-1], "points": len(grid)}


def _trunc_from(params: Mapping) -> SeriesTruncation:
    return SeriesTruncation(
        tol=float(params.get("series_tol", 1e-14)),
        max_terms=int(params.get("max_terms", 512)),
    )


def _oracle_on(spec: WindowSpec, grid: Sequence[float], abs_tol: float) -> list[complex]:
    return [ctft_quadrature(spec, w, abs_tol) for w in grid]


#: indices where the sample route is spot-checked against the quadrature oracle
_SAMPLE_SPOT_CHECKS = (1, 2, 5, 10, 25, 50, 100)


def cardinal_spectrum_samples(
    spec: WindowSpec,
    w_s: float,
    tail_tol: float = 2e-6,
    abs_tol: float = 1e-11,
    max_index: int = 8192,
) -> list[tuple[int, complex]]:
    """Spectrum samples (n, W(n*w_s)) of a von Mises window, out to a small tail.

    The window's support-edge jump exp(-beta) makes the far spectrum fall
    off only like 1/w, so the samples decay like 1/n and reaching a
    1e-12-level tail would take ~1e10 indices; a reconstruction-accuracy
    budget of 1e-6 needs indices out to a few thousand instead.  Direct
    quadrature costs O(n) per sample there, so samples come from the
    exact Bessel/sa series (the thresholded series-vs-oracle subject
    pins that route to the oracle); a fixed set of low indices is still
    cross-checked against the quadrature oracle here.

    Indices grow until four consecutive sample magnitudes fall below
    ``tail_tol`` times |W(0)| (single samples can sit near a null, so one
    small value is not taken as the tail).
    """
    if spec.family != "von_mises":
        raise ValueError("cardinal_spectrum_samples supports the von_mises family only")
    trunc = SeriesTruncation(tol=1e-15, max_terms=2048)

    def series_at(w: float) -> complex:
        return vonmises_spectrum_series(spec.beta, spec.length, w, trunc)

    f0 = ctft_quadrature(spec, 0.0, abs_tol)
    check_scale = max(1.0, abs(f0))
    for k in _SAMPLE_SPOT_CHECKS:
        oracle_k = ctft_quadrature(spec, k * w_s, abs_tol)
        if abs(series_at(k * w_s) - oracle_k) > 1e-8 * check_scale:
            raise ConvergenceError(
                f"sample route disagrees with the quadrature oracle at index {k}"
            )
    cutoff = tail_tol * abs(f0)
    samples: list[tuple[int, complex]] = [(0, f0)]
    run = 0
    n = 0
    while run < 4:
        n += 1
        if n > max_index:
            raise ConvergenceError(
                f"cardinal sample tail did not fall below {tail_tol} of |W(0)| "
                f"within {max_index} indices"
            )
        value = series_at(n * w_s)  # even spectrum: W(-w) = W(w)
        samples.append((n, value))
        samples.append((-n, value))
        run = run + 1 if abs(value) < cutoff else 0
    return samples


def _make_report(
    subject: str,
    parameters: dict,
    grid: Sequence[float],
    test_vals: Sequence[complex],
    ref_vals: Sequence[complex],
    scale: float,
    threshold: float | None,
) -> VerificationReport:
    devs = [abs(t - r) for t, r in zip(test_vals, ref_vals)]
    worst = max(range(len(devs)), key=devs.__getitem__)
    max_abs = devs[worst]
    max_rel = max_abs / scale if scale > 0 else math.inf
    rms = math.sqrt(sum(d * d for d in devs) / len(devs))
    return VerificationReport(
        subject=subject,
        parameters=parameters,
        max_abs_deviation=max_abs,
        max_rel_deviation=max_rel,
        rms_deviation=rms,
        worst_point=WorstPoint(grid[worst], test_vals[worst], ref_vals[worst]),
        pass_threshold=threshold if threshold is not None else REPORT_ONLY,
        passed=None if threshold is None else max_rel <= threshold,
    )


def run_verification(
    subject: str, parameters: Mapping, grid: Iterable[float]
) -> VerificationReport:
    """Compare two routes for ``subject`` over ``grid`` and report deviations.

    ``parameters`` supplies the subject's shape values (see the CLI
    ``verify`` command for the accepted keys); ``grid`` is the list of
    angular frequencies (or CDF abscissae) to compare at.
    """
    grid = [float(x) for x in grid]
    if not grid:
        raise ValueError("grid must not be empty")
    params = dict(parameters)
    quad_tol = float(params.get("quad_tol", 1e-11))

    if subject == VM_SERIES_VS_ORACLE:
        beta = float(params["beta"])
        length = float(params["length"])
        trunc = _trunc_from(params)
        spec = WindowSpec("von_mises", length, beta=beta)
        test = [vonmises_spectrum_series(beta, length, w, trunc) for w in grid]
        ref = _oracle_on(spec, grid, quad_tol)
        scale = max(1.0, max(abs(r) for r in ref))
        record = {
            "family": "von_mises", "beta": beta, "length": length,
            "series_tol": trunc.tol, "max_terms": trunc.max_terms,
            "quad_tol": quad_tol, "grid": _grid_record(grid),
        }
        return _make_report(subject, record, grid, test, ref, scale, SERIES_THRESHOLD)

    if subject == VM_CLOSED_VS_ORACLE:
        beta = float(params["beta"])
        length = float(params["length"])
        spec = WindowSpec("von_mises", length, beta=beta)
        test = [vonmises_spectrum_closed(beta, length, w) for w in grid]
        ref = _oracle_on(spec, grid, quad_tol)
        scale = max(abs(r) for r in ref)
        record = {
            "family": "von_mises", "beta": beta, "length": length,
            "quad_tol": quad_tol, "grid": _grid_record(grid),
        }
        return _make_report(subject, record, grid, test, ref, scale, None)

    if subject == KAISER_CLOSED_VS_ORACLE:
        beta = float(params["beta"])
        length = float(params["length"])
        spec = WindowSpec("kaiser", length, beta=beta)
        test = [kaiser_spectrum(beta, length, w) for w in grid]
        ref = _oracle_on(spec, grid, quad_tol)
        scale = max(abs(r) for r in ref)
        record = {
            "family": "kaiser", "beta": beta, "length": length,
            "quad_tol": quad_tol, "grid": _grid_record(grid),
        }
        return _make_report(subject, record, grid, test, ref, scale, None)

    if subject == CARDINAL_VS_ORACLE:
        beta = float(params["beta"])
        length = float(params["length"])
        spec = WindowSpec("von_mises", length, beta=beta)
        t_m = float(params.get("t_m", length / 2.0))
        w_s = float(params.get("w_s", math.pi / length))
        tail_tol = float(params.get("tail_tol", 2e-6))
        samples = cardinal_spectrum_samples(spec, w_s, tail_tol, quad_tol)
        test = [cardinal_reconstruct(samples, w_s, t_m, w) for w in grid]
        ref = _oracle_on(spec, grid, quad_tol)
        scale = max(abs(r) for r in ref)
        record = {
            "family": "von_mises", "beta": beta, "length": length,
            "w_s": w_s, "t_m": t_m, "tail_tol": tail_tol,
            "sample_indices": len(samples), "quad_tol": quad_tol,
            "grid": _grid_record(grid),
        }
        return _make_report(subject, record, grid, test, ref, scale, CARDINAL_THRESHOLD)

    if subject == VM_CDF_PAPER_VS_NUMERIC:
        mu = float(params.get("mu", 0.0))
        kappa = float(params["kappa"])
        p = VonMisesParams(mu=mu, kappa=kappa)
        trunc = _trunc_from(params)
        test = [complex(vm_cdf_paper_series(p, x, trunc)) for x in grid]
        ref = [complex(vm_cdf_numeric(p, x, abs_tol=quad_tol)) for x in grid]
        scale = max(abs(r) for r in ref)
        record = {
            "family": "von_mises_cdf", "mu": p.mu, "kappa": kappa,
            "series_tol": trunc.tol, "max_terms": trunc.max_terms,
            "quad_tol": quad_tol, "grid": _grid_record(grid),
        }
        return _make_report(subject, record, grid, test, ref, scale, None)

    raise ValueError(f"unknown subject {subject!r}; expected one of {SUBJECTS}")
