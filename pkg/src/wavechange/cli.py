"""Command-line front end.

Exit status: 0 success, 2 usage error, 3 input error, 4 insufficient data.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from contextlib import contextmanager

import numpy as np

from . import __version__
from .changepoint import CACHE_ENV
from .cwt import WaveletKind, cwt_transform, sampled_wavelet
from .dwt import align_coefficients, dwt, mra
from .errors import (
    InputNotFound,
    InsufficientData,
    LengthNotDivisible,
    ParseError,
    TargetTooLarge,
    TooShort,
    WavechangeError,
)
from .filters import filter_catalog, get_filter, supported_filters, validate_filter
from .io import read_series, write_columns
from .pipeline import AnalysisConfig, run_analyze
from .spectral import periodogram
from .synthetic import SignalKind, generate_synthetic

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INPUT, EXIT_INSUFFICIENT = 0, 1, 2, 3, 4

log = logging.getLogger("wavechange")


@contextmanager
def _sink(path):
    if path in (None, "-"):
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            yield fh


def _labels(series):
    return series.labels or list(range(len(series)))


def cmd_analyze(args) -> int:
    cfg = AnalysisConfig(
        input=args.input,
        wavelet=args.wavelet,
        depth=args.depth,
        alpha=args.alpha,
        mode=args.mode,
        demean=args.demean,
        mc_seed=args.mc_seed,
        mc_replicates=args.mc_replicates,
        workers=args.workers,
        correction=args.correction,
        output=args.output,
    )
    report = run_analyze(cfg, cache_dir=args.cache_dir)
    with _sink(cfg.output) as out:
        out.write(report.to_json())
    return EXIT_OK


def cmd_dwt(args) -> int:
    f = get_filter(args.wavelet)
    c = dwt(read_series(args.input), f, args.depth)
    if args.align:
        c = align_coefficients(c, f)
    bands, ks, values = [], [], []
    for name, v in [(f"u{c.J}", c.u)] + [(f"w{j}", c.level(j)) for j in range(c.J, 0, -1)]:
        bands += [name] * len(v)
        ks += list(range(len(v)))
        values += list(v)
    with _sink(args.output) as out:
        write_columns(out, {"position": range(len(values)), "band": bands, "k": ks, "coefficient": values})
    return EXIT_OK


def cmd_mra(args) -> int:
    x = read_series(args.input)
    m = mra(x, args.wavelet, args.depth)
    cols = {"t": _labels(x), "x": x.values}
    for j, d in enumerate(m.details, start=1):
        cols[f"D{j}"] = d
    cols[f"S{m.J}"] = m.smooth
    with _sink(args.output) as out:
        write_columns(out, cols)
    return EXIT_OK


def cmd_cwt(args) -> int:
    x = read_series(args.input)
    w = sampled_wavelet(args.wavelet)
    scales = None
    if args.scales:
        scales = [float(s) for s in args.scales.split(",")]
    sg = cwt_transform(x, scales, w, mode=args.boundary)
    s_col = np.repeat(sg.scales, sg.times.size)
    t_col = np.tile(sg.times, sg.scales.size)
    with _sink(args.output) as out:
        write_columns(out, {"scale": s_col, "tau": t_col, "coefficient": sg.coefficients.ravel()})
    return EXIT_OK


def cmd_periodogram(args) -> int:
    p = periodogram(read_series(args.input))
    with _sink(args.output) as out:
        write_columns(out, {"frequency": p.frequencies, "power": p.power})
    return EXIT_OK


def cmd_synth(args) -> int:
    kw = {}
    if args.sigma:
        kw["sigma"] = [float(s) for s in args.sigma.split(",")]
    if args.change is not None:
        kw["change"] = args.change
    if args.location is not None:
        kw["location"] = args.location
    x = generate_synthetic(args.kind, args.n, args.seed, **kw)
    with _sink(args.output) as out:
        write_columns(out, {"value": x.values})
    return EXIT_OK


def cmd_validate_filters(args) -> int:
    if args.wavelet:
        filters = [get_filter(args.wavelet)]
    else:
        filters = [filter_catalog(fam, order) for fam, order in supported_filters()]
    reports = [validate_filter(f).to_dict() for f in filters]
    with _sink(args.output) as out:
        out.write(json.dumps(reports, indent=2, sort_keys=True) + "\n")
    return EXIT_OK if all(r["passed"] for r in reports) else EXIT_FAIL


def _positive_int(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="wavechange", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="trend fit and wavelet variance change-point test of a monthly CSV")
    a.add_argument("--input", required=True, help="CSV with header date,deaths")
    a.add_argument("--wavelet", default="la8", help="filter name, e.g. haar, db4, la8, coif2 (default la8)")
    a.add_argument("--depth", type=_positive_int, default=4, help="DWT depth J (default 4)")
    a.add_argument("--alpha", type=float, default=0.05, help="significance level per level (default 0.05)")
    a.add_argument("--mode", choices=("diff", "detrend"), default="diff")
    a.add_argument("--demean", action=argparse.BooleanOptionalAction, default=True)
    a.add_argument("--mc-seed", type=int, default=20200901)
    a.add_argument("--mc-replicates", type=int, default=100_000)
    a.add_argument("--workers", type=_positive_int, default=1, help="Monte Carlo threads")
    a.add_argument("--correction", choices=("none", "bonferroni"), default="none")
    a.add_argument("--cache-dir", help=f"critical-value cache (default ${CACHE_ENV})")
    a.add_argument("--output", help="report path (default stdout)")
    a.set_defaults(func=cmd_analyze)

    def series_cmd(name, helptext, func):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("--input", required=True, help="date,deaths CSV or single-column CSV")
        s.add_argument("--output", help="CSV path (default stdout)")
        s.set_defaults(func=func)
        return s

    d = series_cmd("dwt", "DWT coefficients in [uJ | wJ | ... | w1] order", cmd_dwt)
    d.add_argument("--wavelet", default="la8")
    d.add_argument("--depth", type=_positive_int, default=4)
    d.add_argument("--align", action="store_true", help="shift bands by their group delay")

    m = series_cmd("mra", "details D1..DJ and smooth SJ", cmd_mra)
    m.add_argument("--wavelet", default="la8")
    m.add_argument("--depth", type=_positive_int, default=4)

    c = series_cmd("cwt", "scalogram in long format", cmd_cwt)
    c.add_argument("--wavelet", choices=[k.value for k in WaveletKind], default="mexican_hat")
    c.add_argument("--scales", help="comma-separated ascending scales (default dyadic, 4 voices)")
    c.add_argument("--boundary", choices=("zero", "periodic"), default="zero")

    series_cmd("periodogram", "one-sided periodogram", cmd_periodogram)

    s = sub.add_parser("synth", help="generate a test signal")
    s.add_argument("kind", choices=[k.value for k in SignalKind])
    s.add_argument("--n", type=int, default=1024)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--sigma", help="varshift: 'before,after' standard deviations")
    s.add_argument("--change", type=int, help="varshift: first index with the new variance")
    s.add_argument("--location", type=int, help="discontinuity: break index")
    s.add_argument("--output", help="CSV path (default stdout)")
    s.set_defaults(func=cmd_synth)

    v = sub.add_parser("validate-filters", help="check the invariants of catalog filters")
    v.add_argument("--wavelet", help="check one filter only")
    v.add_argument("--output", help="JSON path (default stdout)")
    v.set_defaults(func=cmd_validate_filters)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (InputNotFound, ParseError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (InsufficientData, LengthNotDivisible, TooShort, TargetTooLarge) as exc:
        print(f"insufficient data: {exc}", file=sys.stderr)
        return EXIT_INSUFFICIENT
    except WavechangeError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
