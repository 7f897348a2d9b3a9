"""Command-line surface: windows, spectra, metrics, verification, figures.

Subcommands
-----------
window    sample a window over its support (columns t,w)
spectrum  evaluate a spectrum route on a frequency grid
          (columns w,re,im,mag_db)
metrics   figures of merit for a list of windows
verify    cross-route discrepancy report as JSON
figures   write figure CSVs, a standalone plotting script, and the
          rendered PNGs

Conventions: CSV output uses '.' decimals, a header line, LF line
endings and 17 significant digits; warnings go to standard error only;
exit status is 0 on success (or a report-only verification), 1 on a
failed verification threshold or runtime error, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import figures as figmod
from .metrics import compute_metrics
from .special import ConvergenceError, SeriesTruncation
from .spectra import spectrum_value
from .verify import (
    CARDINAL_VS_ORACLE,
    SUBJECTS,
    VM_CDF_PAPER_VS_NUMERIC,
    run_verification,
)
from .windows import CAUSAL, CENTERED, WindowSpec, sample

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

FAMILY_CHOICES = (
    "rect",
    "rectangular",
    "general-cosine",
    "hann",
    "hamming",
    "cosine-tip",
    "kaiser",
    "von-mises",
)

# family name -> (library family, fixed alpha, which shape flag it accepts)
_FAMILY_TABLE = {
    "rect": ("rectangular", None, None),
    "rectangular": ("rectangular", None, None),
    "general-cosine": ("generalized_cosine", None, "alpha"),
    "hann": ("generalized_cosine", 0.5, None),
    "hamming": ("generalized_cosine", 0.54, None),
    "cosine-tip": ("cosine_tip", None, None),
    "kaiser": ("kaiser", None, "beta"),
    "von-mises": ("von_mises", None, "beta"),
}


def _fmt(x) -> str:
    if x is None:
        return ""
    return f"{float(x):.17g}"


def _write_text(text: str, output: str | None) -> None:
    if output in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(output, "w", newline="\n") as fh:
            fh.write(text)


def _emit_table(header: list[str], rows: list[list], fmt: str, output: str | None) -> None:
    if fmt == "json":
        payload = [
            {key: (None if cell is None else float(cell)) if not isinstance(cell, str) else cell
             for key, cell in zip(header, row)}
            for row in rows
        ]
        _write_text(json.dumps(payload, indent=2) + "\n", output)
        return
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(cell if isinstance(cell, str) else _fmt(cell) for cell in row))
    _write_text("\n".join(lines) + "\n", output)


def _warn(message: str) -> None:
    print(f"warning: {message}", file=sys.stderr)


def _add_family_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--family", required=True, choices=FAMILY_CHOICES)
    sub.add_argument("--alpha", type=float, default=None,
                     help="shape parameter for --family general-cosine")
    sub.add_argument("--beta", type=float, default=None,
                     help="shape parameter for --family kaiser / von-mises")
    sub.add_argument("--len", type=float, required=True, dest="length",
                     help="support length N in seconds")
    sub.add_argument("--causal", action="store_true",
                     help="support [0, N] instead of [-N/2, N/2]")


def _build_spec(parser: argparse.ArgumentParser, args) -> WindowSpec:
    family, fixed_alpha, shape_flag = _FAMILY_TABLE[args.family]
    alignment = CAUSAL if args.causal else CENTERED
    if shape_flag != "alpha" and args.alpha is not None:
        parser.error(f"--alpha is not valid for --family {args.family}")
    if shape_flag != "beta" and args.beta is not None:
        parser.error(f"--beta is not valid for --family {args.family}")
    alpha = fixed_alpha
    beta = None
    if shape_flag == "alpha":
        if args.alpha is None:
            parser.error(f"--family {args.family} requires --alpha")
        alpha = args.alpha
    if shape_flag == "beta":
        if args.beta is None:
            parser.error(f"--family {args.family} requires --beta")
        beta = args.beta
    try:
        return WindowSpec(family, args.length, alignment, alpha=alpha, beta=beta)
    except ValueError as exc:
        parser.error(str(exc))


def _cmd_window(parser, args) -> int:
    spec = _build_spec(parser, args)
    if args.samples < 2:
        parser.error("--samples must be >= 2")
    table = sample(spec, args.samples)
    rows = [[float(t), float(v)] for t, v in zip(table.times, table.values)]
    _emit_table(["t", "w"], rows, args.format, args.output)
    return EXIT_OK


def _cmd_spectrum(parser, args) -> int:
    spec = _build_spec(parser, args)
    if args.route in ("series", "closed") and spec.family != "von_mises":
        parser.error(f"--route {args.route} requires --family von-mises")
    trunc = SeriesTruncation(tol=args.series_tol, max_terms=args.max_terms)
    if args.w is not None:
        ws = [args.w]
    else:
        w_max = args.w_max if args.w_max is not None else 40.0 * math.pi / spec.length
        w_min = args.w_min if args.w_min is not None else -w_max
        if args.points < 2:
            parser.error("--points must be >= 2")
        ws = np.linspace(w_min, w_max, args.points).tolist()
    ref0 = abs(spectrum_value(spec, 0.0, args.route, trunc, args.quad_tol))
    db_defined = ref0 > 1e-9 * spec.length
    if not db_defined:
        _warn("|W(0)| is zero; mag_db column left empty")
    rows = []
    for w in ws:
        value = spectrum_value(spec, w, args.route, trunc, args.quad_tol)
        mag = abs(value)
        if not db_defined:
            mag_db = None
        elif mag == 0.0:
            mag_db = float("-inf")
        else:
            mag_db = 20.0 * math.log10(mag / ref0)
        rows.append([float(w), value.real, value.imag, mag_db])
    _emit_table(["w", "re", "im", "mag_db"], rows, args.format, args.output)
    return EXIT_OK


def _parse_family_entry(parser, entry: str):
    name, _, param_text = entry.partition(":")
    if name not in _FAMILY_TABLE:
        parser.error(f"unknown family {name!r} in --families")
    family, fixed_alpha, shape_flag = _FAMILY_TABLE[name]
    if shape_flag is None:
        if param_text:
            parser.error(f"family {name!r} in --families takes no parameter")
        return name, family, fixed_alpha, None
    if not param_text:
        parser.error(f"family {name!r} in --families needs a parameter, e.g. {name}:5")
    try:
        param = float(param_text)
    except ValueError:
        parser.error(f"bad parameter {param_text!r} for family {name!r} in --families")
    if shape_flag == "alpha":
        return name, family, param, None
    return name, family, None, param


def _cmd_metrics(parser, args) -> int:
    entries = [item.strip() for item in args.families.split(",") if item.strip()]
    if not entries:
        parser.error("--families must list at least one window")
    header = ["family", "param", "coherent_gain", "enbw_bins",
              "mainlobe_3db_bins", "peak_sidelobe_db"]
    rows = []
    for entry in entries:
        name, family, alpha, beta = _parse_family_entry(parser, entry)
        spec = WindowSpec(family, args.length, alpha=alpha, beta=beta)
        m = compute_metrics(spec, band_bins=args.band_bins,
                            resolution=args.resolution, abs_tol=args.quad_tol)
        undefined = [label for label, value in [
            ("enbw_bins", m.enbw_bins),
            ("mainlobe_3db_bins", m.mainlobe_width_3db_bins),
            ("peak_sidelobe_db", m.peak_sidelobe_db),
        ] if value is None]
        if undefined:
            _warn(f"{entry}: undefined metrics left empty: {', '.join(undefined)}")
        rows.append([name, spec.shape_param, m.coherent_gain, m.enbw_bins,
                     m.mainlobe_width_3db_bins, m.peak_sidelobe_db])
    _emit_table(header, rows, args.format, args.output)
    return EXIT_OK


def _verify_grid(args) -> list[float]:
    points = args.points
    if args.subject == VM_CDF_PAPER_VS_NUMERIC:
        lo = args.w_min if args.w_min is not None else -math.pi
        hi = args.w_max if args.w_max is not None else math.pi
        return np.linspace(lo, hi, points).tolist()
    if args.subject == CARDINAL_VS_ORACLE:
        if args.w_min is not None or args.w_max is not None:
            return np.linspace(args.w_min, args.w_max, points).tolist()
        w_s = args.ws if args.ws is not None else math.pi / args.length
        # off-sample grid: quarter-rate spacing, eighth-rate offset
        offsets = np.arange(points) - (points - 1) / 2.0
        return (offsets * (w_s / 4.0) + w_s / 8.0).tolist()
    w_max = args.w_max if args.w_max is not None else 20.0 * math.pi / args.length
    w_min = args.w_min if args.w_min is not None else -w_max
    return np.linspace(w_min, w_max, points).tolist()


def _cmd_verify(parser, args) -> int:
    params: dict = {
        "quad_tol": args.quad_tol,
        "series_tol": args.series_tol,
        "max_terms": args.max_terms,
    }
    if args.subject == VM_CDF_PAPER_VS_NUMERIC:
        if args.kappa is None:
            parser.error(f"--subject {args.subject} requires --kappa")
        params["kappa"] = args.kappa
        params["mu"] = args.mu
    else:
        if args.beta is None:
            parser.error(f"--subject {args.subject} requires --beta")
        params["beta"] = args.beta
        params["length"] = args.length
        if args.subject == CARDINAL_VS_ORACLE:
            if args.ws is not None:
                params["w_s"] = args.ws
            if args.tm is not None:
                params["t_m"] = args.tm
            params["tail_tol"] = args.tail_tol
    report = run_verification(args.subject, params, _verify_grid(args))
    _write_text(json.dumps(report.to_dict(), indent=2) + "\n", args.output)
    return EXIT_FAIL if report.passed is False else EXIT_OK


def _cmd_figures(parser, args) -> int:
    out_dir = Path(args.out_dir)
    written = figmod.write_figure_data(out_dir, length=args.length, points=args.points)
    written += figmod.render_figures(out_dir)
    for path in written:
        sys.stdout.write(str(path) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circwin",
        description="Continuous window functions, their spectra by independent "
                    "routes, spectral figures of merit, and cross-route verification.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    def add_output_flags(sub):
        sub.add_argument("--format", choices=("csv", "json"), default="csv")
        sub.add_argument("--output", default="-", help="output path, '-' for stdout")

    p_window = subs.add_parser("window", help="sample a window over its support")
    _add_family_flags(p_window)
    p_window.add_argument("--samples", type=int, default=513,
                          help="grid size over the support, endpoints included")
    add_output_flags(p_window)
    p_window.set_defaults(func=_cmd_window)

    p_spectrum = subs.add_parser("spectrum", help="evaluate a spectrum route on a grid")
    _add_family_flags(p_spectrum)
    p_spectrum.add_argument("--route", choices=("oracle", "series", "closed"),
                            default="oracle",
                            help="series/closed are the von Mises expansions")
    p_spectrum.add_argument("--w", type=float, default=None,
                            help="single angular frequency (rad/s) instead of a grid")
    p_spectrum.add_argument("--w-min", type=float, default=None,
                            help="grid start (default -40*pi/N)")
    p_spectrum.add_argument("--w-max", type=float, default=None,
                            help="grid end (default 40*pi/N)")
    p_spectrum.add_argument("--points", type=int, default=1024)
    p_spectrum.add_argument("--quad-tol", type=float, default=1e-11,
                            help="absolute tolerance of the quadrature oracle")
    p_spectrum.add_argument("--series-tol", type=float, default=1e-14,
                            help="relative coefficient cutoff of the series route")
    p_spectrum.add_argument("--max-terms", type=int, default=512)
    add_output_flags(p_spectrum)
    p_spectrum.set_defaults(func=_cmd_spectrum)

    p_metrics = subs.add_parser("metrics", help="spectral figures of merit")
    p_metrics.add_argument("--families", required=True,
                           help="comma list of family[:param], e.g. "
                                "rect,hann,von-mises:1,von-mises:5,kaiser:5")
    p_metrics.add_argument("--len", type=float, default=2.0, dest="length")
    p_metrics.add_argument("--band-bins", type=float, default=40.0,
                           help="sidelobe search band, in bins of 2*pi/N")
    p_metrics.add_argument("--resolution", type=int, default=64,
                           help="scan samples per bin")
    p_metrics.add_argument("--quad-tol", type=float, default=1e-12)
    add_output_flags(p_metrics)
    p_metrics.set_defaults(func=_cmd_metrics)

    p_verify = subs.add_parser("verify", help="cross-route discrepancy report (JSON)")
    p_verify.add_argument("--subject", required=True, choices=SUBJECTS)
    p_verify.add_argument("--beta", type=float, default=None)
    p_verify.add_argument("--len", type=float, default=2.0, dest="length")
    p_verify.add_argument("--mu", type=float, default=0.0)
    p_verify.add_argument("--kappa", type=float, default=None)
    p_verify.add_argument("--ws", type=float, default=None,
                          help="cardinal sampling rate w_s (default pi/N)")
    p_verify.add_argument("--tm", type=float, default=None,
                          help="cardinal time limit t_m (default N/2)")
    p_verify.add_argument("--tail-tol", type=float, default=2e-6,
                          help="cardinal sample tail cutoff relative to |W(0)|")
    p_verify.add_argument("--w-min", type=float, default=None)
    p_verify.add_argument("--w-max", type=float, default=None)
    p_verify.add_argument("--points", type=int, default=201)
    p_verify.add_argument("--quad-tol", type=float, default=1e-11)
    p_verify.add_argument("--series-tol", type=float, default=1e-14)
    p_verify.add_argument("--max-terms", type=int, default=512)
    p_verify.add_argument("--output", default="-")
    p_verify.set_defaults(func=_cmd_verify)

    p_figures = subs.add_parser("figures", help="figure CSVs, plot script and PNGs")
    p_figures.add_argument("--out-dir", default="figures")
    p_figures.add_argument("--len", type=float, default=2.0, dest="length")
    p_figures.add_argument("--points", type=int, default=513)
    p_figures.set_defaults(func=_cmd_figures)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(parser, args)
    except (ValueError, ConvergenceError, OverflowError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
