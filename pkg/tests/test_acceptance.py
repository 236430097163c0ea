"""Acceptance criteria, one test each.

Every test prints a single ``[PASS]``/``[FAIL]`` line; the lines are also
collected and repeated in the pytest terminal summary.

The mortality criteria need the pinned monthly fixture at
``tests/data/mortality_monthly.csv`` (or the path in
``WAVECHANGE_MORTALITY_CSV``).  Without it they fail, they are not skipped.
"""

import os
import time
from pathlib import Path

import numpy as np
import pytest

from conftest import ACCEPTANCE_LINES
from wavechange.changepoint import MonteCarloConfig, critical_value, detect_changepoints, nonboundary_range
from wavechange.cwt import cwt_transform, sampled_wavelet
from wavechange.dwt import dwt, idwt, mra
from wavechange.filters import filter_catalog, frequency_response, qmf_from_scaling, supported_filters
from wavechange.io import read_monthly_csv
from wavechange.pipeline import AnalysisConfig, prepare_series, run_analyze
from wavechange.preprocess import fit_linear_trend
from wavechange.spectral import periodogram
from wavechange.synthetic import generate_synthetic

FIXTURE = Path(os.environ.get("WAVECHANGE_MORTALITY_CSV", Path(__file__).parent / "data" / "mortality_monthly.csv"))
CATALOG = [filter_catalog(fam, order) for fam, order in supported_filters()]


def report(name, passed, detail):
    line = f"[{'PASS' if passed else 'FAIL'}] {name}: {detail}"
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert passed, line


def _sweep():
    worst_rec = worst_energy = 0.0
    start = time.perf_counter()
    for f in CATALOG:
        for n in (64, 256, 1024):
            rng = np.random.default_rng(n)
            signals = rng.standard_normal((20, n))
            for J in range(1, 5):
                for x in signals:
                    c = dwt(x, f, J)
                    xr = idwt(c, f)
                    nx = np.linalg.norm(x)
                    worst_rec = max(worst_rec, np.max(np.abs(xr - x)) / np.max(np.abs(x)))
                    worst_energy = max(worst_energy, abs(c.energy() - nx**2) / nx**2)
    return worst_rec, worst_energy, time.perf_counter() - start


_SWEEP = {}


def _sweep_once():
    if not _SWEEP:
        _SWEEP["r"] = _sweep()
    return _SWEEP["r"]


def test_perfect_reconstruction():
    rec, _, elapsed = _sweep_once()
    ok = rec < 1e-10 and elapsed < 10.0
    report("perfect reconstruction", ok, f"max rel error {rec:.2e} (<1e-10), sweep time {elapsed:.2f}s (<10s)")


def test_energy_conservation():
    _, energy, _ = _sweep_once()
    report("energy conservation", energy < 1e-10, f"max rel Parseval residual {energy:.2e} (<1e-10)")


def test_qmf_identity_and_power_complementarity():
    worst_qmf = worst_pc = 0.0
    for f in CATALOG:
        worst_qmf = max(worst_qmf, float(np.max(np.abs(f.h - qmf_from_scaling(f.g)))))
        _, G = frequency_response(f.g, 1024)
        _, H = frequency_response(f.h, 1024)
        worst_pc = max(worst_pc, float(np.max(np.abs(G**2 + H**2 - 2.0))))
    ok = worst_qmf == 0.0 and worst_pc < 1e-10
    report("QMF identity", ok, f"max |h - qmf(g)| = {worst_qmf:.1e} (exact), max ||G|^2+|H|^2-2| = {worst_pc:.2e}")


def test_vanishing_moments():
    worst = 0.0
    n = 256
    t = np.arange(n) / n
    rng = np.random.default_rng(40)
    for order in range(2, 11):
        f = filter_catalog("daubechies", order)
        for degree in range(order):
            x = np.polyval(rng.uniform(-1, 1, degree + 1), t)
            c = dwt(x, f, 1)
            nb = nonboundary_range(1, f, n)
            worst = max(worst, float(np.max(np.abs(c.level(1)[nb.start:nb.stop]))))
    report("vanishing moments", worst < 1e-6, f"max interior |w1| for degree < N, db2..db10: {worst:.2e} (<1e-6)")


def test_mra_additivity():
    worst_rec = worst_cross = 0.0
    for f in CATALOG:
        rng = np.random.default_rng(5)
        x = rng.standard_normal(256)
        m = mra(x, f, 4)
        worst_rec = max(worst_rec, np.max(np.abs(m.reconstruct() - x)) / np.max(np.abs(x)))
        parts = m.details + [m.smooth]
        for i in range(len(parts)):
            for k in range(i + 1, len(parts)):
                worst_cross = max(worst_cross, abs(float(np.dot(parts[i], parts[k]))))
    ok = worst_rec < 1e-10 and worst_cross < 1e-8
    report("MRA additivity", ok, f"rel reconstruction {worst_rec:.2e} (<1e-10), max cross product {worst_cross:.2e} (<1e-8)")


def test_sinusoid_periodogram_peaks():
    p = periodogram(generate_synthetic("sinusoids", 1024))
    peaks = p.peaks(3)
    expected = np.array([0.004775, 0.04775, 0.4775])
    bins = np.abs(peaks - expected) * 1024
    report("periodogram peaks", bool(np.all(bins <= 1.0)), f"peaks {np.round(peaks, 6).tolist()}, bin offsets {np.round(bins, 2).tolist()} (<=1)")


def _fixture_or_fail(name):
    if not FIXTURE.is_file():
        report(
            name,
            False,
            f"mortality fixture {FIXTURE} is absent; supply the 67-month snapshot "
            "(or set WAVECHANGE_MORTALITY_CSV) to evaluate this criterion",
        )
    return read_monthly_csv(FIXTURE)


def test_trend_table_on_fixture():
    raw = _fixture_or_fail("trend table on fixture")
    fit = fit_linear_trend(raw)
    ok = abs(fit.beta0 - 68036.6) <= 0.1 and abs(fit.beta1 - 674.7) <= 0.1 and fit.p0 < 1e-15 and fit.p1 < 1e-15
    report(
        "trend table on fixture",
        ok,
        f"beta0={fit.beta0:.2f} (68036.6+-0.1), beta1={fit.beta1:.2f} (674.7+-0.1), p0={fit.p0:.1e}, p1={fit.p1:.1e}",
    )


def test_headline_changepoint_on_fixture():
    _fixture_or_fail("level-1 change point on fixture")
    start = time.perf_counter()
    cfg = AnalysisConfig(input=str(FIXTURE), wavelet="la8", depth=4, alpha=0.05)
    rep = run_analyze(cfg)
    elapsed = time.perf_counter() - start
    level1 = next((c for c in rep.changepoints if c.level == 1), None)
    ok = (
        rep.preprocessing["analysed_length"] == 64
        and level1 is not None
        and level1.reject
        and abs(level1.time_index - 22) <= 1
        and elapsed < 60.0
    )
    detail = (
        "level 1 not tested"
        if level1 is None
        else f"reject={level1.reject}, t={level1.time_index} ({level1.location_label}), target 22+-1, {elapsed:.1f}s (<60s)"
    )
    report("level-1 change point on fixture", ok, detail)


def test_size_calibration():
    mc = MonteCarloConfig()
    rejections = 0
    for seed in range(1000):
        x = np.random.default_rng(seed).standard_normal(128)
        rejections += detect_changepoints(x, "la8", J=1, alpha=0.05, mc=mc)[0].reject
    rate = rejections / 1000
    report("test size", 0.03 <= rate <= 0.07, f"rejection rate {rate:.3f} on white noise (in [0.03, 0.07])")


def test_power_and_location():
    mc = MonteCarloConfig()
    detected = located = 0
    for seed in range(100):
        x = generate_synthetic("varshift", 128, seed, sigma=(1.0, 3.0), change=64)
        r = detect_changepoints(x, "la8", J=1, alpha=0.05, mc=mc)[0]
        if r.reject:
            detected += 1
            located += abs(r.location - 64) <= 6
    ok = detected >= 95 and located >= 95
    report("test power", ok, f"detected {detected}/100 (>=95), detected and within +-6 samples {located}/100 (>=95)")


def test_cwt_localization():
    w = sampled_wavelet("mexican_hat")
    rng = np.random.default_rng(11)
    errors = []
    for t0 in rng.integers(32, 224, size=20):
        x = generate_synthetic("discontinuity", 256, location=int(t0)).values
        sg = cwt_transform(x, [1.0, 2.0, 4.0], w)
        errors.append(int(np.argmax(np.abs(sg.coefficients[0]))) - int(t0))
    worst = max(abs(e) for e in errors)
    report("CWT localization", worst <= 2, f"finest-scale argmax offsets {sorted(set(errors))} over 20 placements (|.|<=2)")


def _best_time(n, repeats=7):
    x = np.random.default_rng(0).standard_normal(n)
    f = filter_catalog("least_asymmetric", 8)
    dwt(x, f, 4)
    best = np.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        for _ in range(5):
            dwt(x, f, 4)
        best = min(best, time.perf_counter() - t0)
    return best


def test_pyramid_linearity():
    small, large = _best_time(1 << 13), _best_time(1 << 16)
    ratio = large / small
    report("pyramid linearity", ratio <= 12.0, f"time(2^16)/time(2^13) = {ratio:.2f} (<=12)")


def test_prepare_series_window_matches_fixture_protocol():
    # not a criterion of its own: pins the 64-point window used above
    from wavechange.preprocess import TimeSeries

    raw = TimeSeries(np.arange(67, dtype=float) ** 1.5, "2015-01")
    z, info = prepare_series(raw)
    assert info["analysed_length"] == 64 and info["first_month"] == "2015-04"
    assert z.label_at(21) == "2017-01"


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
