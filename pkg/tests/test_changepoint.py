import itertools

import numpy as np
import pytest

from wavechange import changepoint as cp
from wavechange.changepoint import (
    ChangePointReport,
    MonteCarloConfig,
    coefficient_to_time,
    critical_value,
    cusum_components,
    cusum_statistic,
    detect_changepoints,
    nonboundary_range,
    null_distribution,
)
from wavechange.dwt import dwt, equivalent_filters
from wavechange.errors import InsufficientData, InvalidParams, ZeroEnergy
from wavechange.filters import filter_catalog, get_filter, supported_filters
from wavechange.preprocess import TimeSeries
from wavechange.synthetic import generate_synthetic

FILTERS = [filter_catalog(f, o) for f, o in supported_filters()]
SMALL_MC = MonteCarloConfig(replicates=10_000, seed=1)


def test_nonboundary_counts():
    assert nonboundary_range(1, "haar", 64).count == 32
    r = nonboundary_range(1, "la8", 64)
    assert (r.n_boundary, r.count, r.start, r.stop) == (3, 29, 0, 29)
    assert nonboundary_range(2, "la8", 64).n_boundary == 5
    with pytest.raises(InsufficientData):
        nonboundary_range(4, "la8", 64)
    assert not nonboundary_range(4, "la8", 64, strict=False).sufficient


@pytest.mark.parametrize("f", FILTERS, ids=lambda f: f.name)
def test_nonboundary_coefficients_do_not_wrap(f):
    # coefficient n of level j reads samples 2**j n .. 2**j n + (2**j - 1)(L - 1)
    n = 512
    for j in range(1, 5):
        width = (2**j - 1) * (f.length - 1)
        no_wrap = sum(1 for k in range(n >> j) if (k << j) + width <= n - 1)
        assert nonboundary_range(j, f, n, strict=False).count == no_wrap


def test_nonboundary_coefficients_match_linear_filtering():
    f = get_filter("la8")
    x = np.random.default_rng(0).standard_normal(128)
    c = dwt(x, f, 2)
    _, h2 = equivalent_filters(f, 2)
    r = nonboundary_range(2, f, 128)
    direct = [np.dot(h2, x[4 * k: 4 * k + h2.size]) for k in range(r.count)]
    np.testing.assert_allclose(c.level(2)[r.start:r.stop], direct, atol=1e-12)


def test_constant_magnitudes_give_one_over_m():
    for m in (8, 20, 101):
        d, _ = cusum_statistic(np.ones(m))
        assert d == pytest.approx(1.0 / m)


def test_single_spike():
    v = np.zeros(16)
    v[0] = 2.0
    c = cusum_components(v)
    assert c["d_minus"] == pytest.approx(1.0)
    assert c["k_star"] == 1


def test_k_star_at_step():
    v = np.concatenate([np.ones(20), 3 * np.ones(20)])
    assert cusum_statistic(v)[1] == 20


def test_scale_invariance():
    v = np.random.default_rng(1).standard_normal(30)
    assert cusum_statistic(7.5 * v)[0] == pytest.approx(cusum_statistic(v)[0])


def test_sorted_squares_extremise():
    v = np.array([0.3, -1.2, 2.0, 0.1, -0.7, 1.5, 0.4, -2.2])
    best_plus = max(cusum_components(np.array(p))["d_plus"] for p in itertools.permutations(v))
    best_minus = max(cusum_components(np.array(p))["d_minus"] for p in itertools.permutations(v))
    asc = v[np.argsort(v**2)]
    assert cusum_components(asc)["d_plus"] == pytest.approx(best_plus)
    assert cusum_components(asc[::-1])["d_minus"] == pytest.approx(best_minus)


def test_cusum_errors():
    with pytest.raises(InsufficientData):
        cusum_statistic(np.ones(7))
    with pytest.raises(ZeroEnergy):
        cusum_statistic(np.zeros(10))


def test_mc_config_validation():
    with pytest.raises(InvalidParams):
        MonteCarloConfig(replicates=9_999)
    with pytest.raises(InvalidParams):
        MonteCarloConfig(workers=0)
    with pytest.raises(InvalidParams):
        critical_value(32, 0.5, SMALL_MC)
    with pytest.raises(InvalidParams):
        critical_value(32, 0.0, SMALL_MC)


def test_critical_value_deterministic_and_worker_independent():
    cp.clear_cache()
    a = null_distribution(40, MonteCarloConfig(replicates=30_000, seed=3, workers=1))
    cp.clear_cache()
    b = null_distribution(40, MonteCarloConfig(replicates=30_000, seed=3, workers=4))
    np.testing.assert_array_equal(a, b)
    assert np.all(np.diff(a) >= 0)


def test_critical_value_monotone_in_alpha():
    assert critical_value(32, 0.01, SMALL_MC) > critical_value(32, 0.05, SMALL_MC) > critical_value(32, 0.10, SMALL_MC)


def test_critical_value_near_asymptotic():
    # sqrt(M/2) D tends to the sup of a Brownian bridge; 5% point 1.358
    cv = critical_value(128, 0.05)
    assert cv == pytest.approx(1.358 / np.sqrt(64), rel=0.05)


def test_disk_cache(tmp_path, monkeypatch):
    monkeypatch.setenv(cp.CACHE_ENV, str(tmp_path))
    cp.clear_cache()
    mc = MonteCarloConfig(replicates=10_000, seed=99)
    first = critical_value(24, 0.05, mc)
    files = list(tmp_path.glob("*.npy"))
    assert len(files) == 1
    cp.clear_cache()
    assert critical_value(24, 0.05, mc) == first
    explicit = tmp_path / "explicit"
    cp.clear_cache()
    critical_value(24, 0.05, MonteCarloConfig(replicates=10_000, seed=99, cache_dir=str(explicit)))
    assert len(list(explicit.glob("*.npy"))) == 1


def test_coefficient_to_time_haar():
    assert coefficient_to_time(10, 1, "haar", 64) == 20
    assert coefficient_to_time(10, 2, "haar", 64) == 40
    assert coefficient_to_time(0, 1, "la8", 64) >= 0
    assert coefficient_to_time(1000, 1, "la8", 64) == 63


def test_detect_obvious_change_haar():
    x = generate_synthetic("varshift", 256, 4, sigma=(1.0, 10.0), change=100)
    r = detect_changepoints(TimeSeries(x.values, "2000-01"), "haar", J=1, mc=SMALL_MC)[0]
    assert r.reject
    assert abs(r.location - 100) <= 8
    assert r.location_label == TimeSeries(x.values, "2000-01").label_at(r.location)
    assert r.time_index == r.location + 1


def test_detect_skips_short_levels_and_bonferroni():
    x = np.random.default_rng(2).standard_normal(64)
    plain = detect_changepoints(x, "la8", J=4, mc=SMALL_MC)
    assert [r.level for r in plain] == [1, 2]
    bonf = detect_changepoints(x, "la8", J=4, mc=SMALL_MC, correction="bonferroni")
    assert all(r.alpha == pytest.approx(0.025) for r in bonf)
    with pytest.raises(InvalidParams):
        detect_changepoints(x, "la8", J=2, mc=SMALL_MC, correction="holm")


def test_detect_insufficient():
    with pytest.raises(InsufficientData):
        detect_changepoints(np.random.default_rng(0).standard_normal(16), "la8", J=1, mc=SMALL_MC)


def test_report_round_trip():
    r = ChangePointReport(1, 0.4, 0.3, 0.05, True, 29, 10, 21, "2017-01")
    assert ChangePointReport.from_dict(r.to_dict()) == r
